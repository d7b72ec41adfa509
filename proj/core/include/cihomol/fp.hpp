#pragma once

#include <cstdint>
#include <stdexcept>

namespace cihomol {

/// Arithmetic in the prime field F_p. Elements are canonical residues in
/// [0, p); every operation reduces eagerly. p must fit comfortably in a
/// machine word (products are accumulated in 64 bits).
class Fp {
public:
    explicit Fp(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    std::uint64_t reduce(std::uint64_t a) const { return a % p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    bool operator==(const Fp&) const = default;

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

} // namespace cihomol
