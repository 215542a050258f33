#include "orthoperm/field.hpp"

namespace orthoperm {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t ell) : ell_(ell) {
    if (!is_prime(ell)) throw std::invalid_argument("field modulus " + std::to_string(ell) + " is not prime");
    if (ell == 3) throw std::invalid_argument("characteristic 3 is the defining characteristic and is excluded");
    if (ell > 251) throw std::invalid_argument("field modulus must be below 256");
}

std::uint32_t Field::inv(std::uint32_t a) const {
    a %= ell_;
    if (a == 0) throw std::domain_error("inverse of zero");
    // Extended Euclid on small ints.
    std::int64_t t = 0, nt = 1, r = ell_, nr = a;
    while (nr != 0) {
        const std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return reduce(t);
}

}  // namespace orthoperm
