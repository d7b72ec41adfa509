#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cihomol/fp.hpp"

namespace cihomol {

/// The Artinian monomial complete intersection
///   A = F_p[X_1,...,X_c] / (X_1^{a_1},...,X_c^{a_c}),  all a_i >= 2.
/// Its monomial basis is the set of exponent vectors e with 0 <= e_i < a_i,
/// ordered lexicographically; basis index 0 is the constant monomial 1.
/// The basis order fixes every matrix produced downstream.
class Ring {
public:
    Ring(Fp field, std::vector<unsigned> exps);

    const Fp& field() const { return d_->field; }
    std::size_t codim() const { return d_->exps.size(); }
    const std::vector<unsigned>& exps() const { return d_->exps; }
    /// l(A) = prod a_i, the k-dimension of A.
    std::size_t length() const { return d_->length; }

    std::size_t basis_index(const std::vector<unsigned>& e) const;
    std::vector<unsigned> exponent_of(std::size_t index) const;
    /// basis_index(e + delta_i), or npos when X_i annihilates the monomial.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t shift_index(std::size_t index, std::size_t var) const;
    /// For index > 0: (var, prev) with monomial(index) = X_var * monomial(prev)
    /// and prev < index. var is the first variable with nonzero exponent.
    std::pair<std::size_t, std::size_t> predecessor(std::size_t index) const;

    std::string spec_string() const; // "p=<prime>;exps=<a1>,...,<ac>"
    bool operator==(const Ring& other) const {
        return d_ == other.d_ ||
               (d_->field == other.d_->field && d_->exps == other.d_->exps);
    }

    std::string variable_name(std::size_t i) const;

private:
    struct Data {
        Fp field;
        std::vector<unsigned> exps;
        std::size_t length;
        std::vector<std::size_t> strides;
    };
    std::shared_ptr<const Data> d_;
};

/// A nonzero linear form sum alpha_i X_i, normalized so the first nonzero
/// coefficient is 1; doubles as a point of P^{c-1}(F_p).
class LinearForm {
public:
    LinearForm(Fp field, std::vector<std::uint64_t> coeffs);

    static LinearForm variable(const Ring& ring, std::size_t i);
    /// Accepts a variable name ("y", "x2") or a comma list of coefficients.
    static LinearForm parse(const Ring& ring, const std::string& text);

    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    const Fp& field() const { return field_; }
    std::string to_string() const;
    /// Index of the single nonzero coordinate, or npos for a mixed form.
    std::size_t axis() const;

    bool operator==(const LinearForm& other) const {
        return field_ == other.field_ && coeffs_ == other.coeffs_;
    }

private:
    Fp field_;
    std::vector<std::uint64_t> coeffs_;
};

/// All points of P^{c-1}(F_p) in deterministic order,
/// count (p^c - 1)/(p - 1), no duplicates.
std::vector<LinearForm> enumerate_points(const Ring& ring);

/// The subring R = F_p[Y_1,...,Y_c]/(Y_i^{a_i/u_i}) embedded in A by
/// Y_i -> X_i^{u_i}. A is a free R-module of rank prod u_i.
struct Embedding {
    Ring parent;
    Ring sub;
    std::vector<unsigned> powers; // u_i

    std::size_t rank() const; // prod u_i
};

/// Requires u_i >= 1, u_i | a_i and a_i/u_i >= 2; otherwise throws
/// std::invalid_argument (the embedded ring must itself satisfy exps >= 2).
Embedding power_subring_embedding(const Ring& ring, const std::vector<unsigned>& u);

} // namespace cihomol
