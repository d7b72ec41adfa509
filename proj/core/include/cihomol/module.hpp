#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cihomol/mat.hpp"
#include "cihomol/ring.hpp"

namespace cihomol {

/// A finitely generated A-module: a finite-dimensional F_p vector space
/// together with c pairwise commuting action matrices satisfying
/// act_i^{a_i} = 0. Length over A equals the k-dimension. Immutable;
/// handles are cheap to copy and safe to share between threads.
class Module {
public:
    /// Validates commutativity and nilpotency; throws std::invalid_argument
    /// naming the failed invariant and the matrix indices.
    static Module make(Ring ring, std::vector<Mat> actions);
    /// For constructions that are invariant-preserving by derivation
    /// (quotients, submodules, block sums of valid modules).
    static Module make_unchecked(Ring ring, std::vector<Mat> actions);
    static Module zero(Ring ring);

    const Ring& ring() const { return d_->ring; }
    std::size_t dim() const { return d_->dim; }
    std::size_t length() const { return d_->dim; }
    const std::vector<Mat>& actions() const { return d_->actions; }
    const Mat& action(std::size_t i) const { return d_->actions.at(i); }

    void validate() const; // throws on broken invariants

    bool operator==(const Module& other) const {
        return d_ == other.d_ ||
               (d_->ring == other.d_->ring && d_->dim == other.d_->dim &&
                d_->actions == other.d_->actions);
    }

private:
    struct Data {
        Ring ring;
        std::size_t dim;
        std::vector<Mat> actions;
    };
    std::shared_ptr<const Data> d_;
    explicit Module(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

/// A-linear map between modules over the same ring; the matrix is
/// dst.dim x src.dim and must intertwine the actions. Checked on
/// construction, always.
class ModuleMap {
public:
    ModuleMap(Module src, Module dst, Mat mat);

    const Module& src() const { return src_; }
    const Module& dst() const { return dst_; }
    const Mat& mat() const { return mat_; }

    void validate() const; // throws unless the matrix intertwines

    static ModuleMap identity(const Module& m);
    static ModuleMap zero(const Module& src, const Module& dst);
    ModuleMap compose_after(const ModuleMap& inner) const; // this . inner

    bool operator==(const ModuleMap&) const = default;

private:
    Module src_, dst_;
    Mat mat_;
};

// --- constructions -------------------------------------------------------

/// A as a module over itself: dim l(A), action of X_i = multiplication on
/// the monomial basis.
Module regular_module(const Ring& ring);

/// A^rank with block-diagonal regular actions; basis index = copy * l(A) +
/// monomial index, so generator t sits at coordinate t * l(A).
Module free_module(const Ring& ring, std::size_t rank);

/// The residue field k = A/m as a module: dimension 1, all actions zero.
Module residue_field(const Ring& ring);

/// A/(g^j) for a linear form g: quotient of the regular module by the image
/// of multiplication by g^j. j = 0 yields the zero module.
Module quotient_by_form_power(const Ring& ring, const LinearForm& g, unsigned j);

/// M/(g^j M) for any module M, with the natural surjection.
struct QuotientData {
    Module module;
    ModuleMap projection;
    Mat section; // k-linear right inverse of the projection (not A-linear)
};
QuotientData form_power_quotient(const Module& m, const LinearForm& g, unsigned j);

Module direct_sum(const Module& a, const Module& b);

/// Matlis dual: transposed actions. Exact contravariant involution.
Module dual(const Module& m);

/// Restriction of scalars along a power-subring embedding: same space,
/// Y_i acts as act_i^{u_i}. Length is preserved.
Module restrict_scalars(const Module& m, const Embedding& emb);

// --- invariants and subobjects -------------------------------------------

std::size_t min_generators(const Module& m); // dim M/mM

/// The radical submodule mM = sum of the action images.
RowSpace radical_subspace(const Module& m);
/// Dimensions of M, mM, m^2 M, ... down to 0.
std::vector<std::size_t> radical_profile(const Module& m);

/// Matrix of multiplication by a linear form.
Mat form_action(const Module& m, const LinearForm& g);
/// Nilpotency order of multiplication by g on A (smallest t with g^t = 0).
std::size_t form_order(const Ring& ring, const LinearForm& g);
/// Matrix of the monomial X^e with e = ring.exponent_of(index).
Mat monomial_action(const Module& m, std::size_t index);
/// Matrix of a ring element given by its coefficient vector on the monomial
/// basis of A.
Mat element_action(const Module& m, std::span<const std::uint64_t> coeffs);

struct SubmoduleData {
    Module module;
    ModuleMap inclusion;
};
/// The submodule spanned by an action-invariant subspace; throws if the
/// subspace is not invariant.
SubmoduleData submodule(const Module& ambient, const RowSpace& w);
QuotientData quotient(const Module& ambient, const RowSpace& w);

/// Smallest invariant subspace containing the given rows.
RowSpace invariant_closure(const Module& m, const Mat& rows);

} // namespace cihomol
