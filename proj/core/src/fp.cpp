#include "cihomol/fp.hpp"

namespace cihomol {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Fp::Fp(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("Fp: modulus must be prime");
    if (p >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("Fp: modulus too large");
}

std::uint64_t Fp::pow(std::uint64_t a, std::uint64_t e) const {
    a %= p_;
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Fp::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) throw std::invalid_argument("Fp: division by zero");
    return pow(a, p_ - 2);
}

} // namespace cihomol
