#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orthoperm {

bool is_prime(std::uint64_t n);

/// Prime field GF(ell) with ell != 3 and ell < 256 (one byte per entry).
class Field {
public:
    Field() = default;
    explicit Field(std::uint32_t ell);

    std::uint32_t ell() const { return ell_; }
    bool binary() const { return ell_ == 2; }

    std::uint32_t reduce(std::int64_t v) const {
        const std::int64_t r = v % static_cast<std::int64_t>(ell_);
        return static_cast<std::uint32_t>(r < 0 ? r + ell_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % ell_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + ell_ - b) % ell_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % ell_; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : ell_ - a; }
    std::uint32_t inv(std::uint32_t a) const;

    friend bool operator==(Field a, Field b) { return a.ell_ == b.ell_; }

private:
    std::uint32_t ell_ = 2;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace orthoperm
