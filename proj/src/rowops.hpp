#pragma once

// Word/byte kernels shared by the matrix and module code. Byte kernels are
// instantiated for the small primes the suite uses so the modulus is a
// compile-time constant; P == 0 selects the runtime-modulus fallback.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <type_traits>
#include <vector>

#include "orthoperm/field.hpp"

namespace orthoperm::detail {

template <unsigned P>
inline unsigned modulus(unsigned runtime) {
    if constexpr (P != 0) {
        (void)runtime;
        return P;
    } else {
        return runtime;
    }
}

template <class Fn>
decltype(auto) with_modulus(unsigned p, Fn&& fn) {
    switch (p) {
        case 5: return fn(std::integral_constant<unsigned, 5>{});
        case 7: return fn(std::integral_constant<unsigned, 7>{});
        case 11: return fn(std::integral_constant<unsigned, 11>{});
        case 13: return fn(std::integral_constant<unsigned, 13>{});
        case 17: return fn(std::integral_constant<unsigned, 17>{});
        case 19: return fn(std::integral_constant<unsigned, 19>{});
        case 23: return fn(std::integral_constant<unsigned, 23>{});
        case 29: return fn(std::integral_constant<unsigned, 29>{});
        case 31: return fn(std::integral_constant<unsigned, 31>{});
        default: return fn(std::integral_constant<unsigned, 0>{});
    }
}

template <unsigned P>
void axpy_bytes(std::uint8_t* __restrict d, const std::uint8_t* __restrict s, unsigned c,
                std::size_t n, unsigned p) {
    const unsigned m = modulus<P>(p);
    const std::uint16_t cc = static_cast<std::uint16_t>(c);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint16_t t = static_cast<std::uint16_t>(d[i] + cc * s[i]);
        d[i] = static_cast<std::uint8_t>(t % m);
    }
}

template <unsigned P>
void scale_bytes(std::uint8_t* d, unsigned c, std::size_t n, unsigned p) {
    const unsigned m = modulus<P>(p);
    const std::uint16_t cc = static_cast<std::uint16_t>(c);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = static_cast<std::uint8_t>(static_cast<std::uint16_t>(cc * d[i]) % m);
    }
}

template <unsigned P>
void accumulate(std::uint16_t* __restrict acc, const std::uint8_t* __restrict s, unsigned c,
                std::size_t n) {
    const std::uint16_t cc = static_cast<std::uint16_t>(c);
    for (std::size_t i = 0; i < n; ++i) acc[i] = static_cast<std::uint16_t>(acc[i] + cc * s[i]);
}

template <unsigned P>
void reduce_acc(std::uint16_t* acc, std::size_t n, unsigned p) {
    const unsigned m = modulus<P>(p);
    for (std::size_t i = 0; i < n; ++i) acc[i] = static_cast<std::uint16_t>(acc[i] % m);
}

/// Number of c*s terms that can be added to a reduced uint16 accumulator.
inline unsigned lazy_budget(unsigned p) {
    const unsigned sq = (p - 1) * (p - 1);
    return (65535u - (p - 1)) / sq;
}

inline void xor_words(std::uint64_t* __restrict d, const std::uint64_t* __restrict s,
                      std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) d[i] ^= s[i];
}

inline const std::uint8_t* bytes(const std::uint64_t* w) {
    return reinterpret_cast<const std::uint8_t*>(w);
}
inline std::uint8_t* bytes(std::uint64_t* w) { return reinterpret_cast<std::uint8_t*>(w); }

inline std::uint32_t get_entry(Field f, const std::uint64_t* row, std::size_t c) {
    if (f.binary()) return static_cast<std::uint32_t>((row[c >> 6] >> (c & 63)) & 1u);
    return bytes(row)[c];
}

inline void set_entry(Field f, std::uint64_t* row, std::size_t c, std::uint32_t v) {
    if (f.binary()) {
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        if (v & 1u)
            row[c >> 6] |= bit;
        else
            row[c >> 6] &= ~bit;
    } else {
        bytes(row)[c] = static_cast<std::uint8_t>(v);
    }
}

/// row += c * src over `stride` words.
inline void row_axpy(Field f, std::uint64_t* row, const std::uint64_t* src, std::uint32_t c,
                     std::size_t stride) {
    if (c == 0) return;
    if (f.binary()) {
        xor_words(row, src, stride);
        return;
    }
    with_modulus(f.ell(), [&](auto P) {
        axpy_bytes<decltype(P)::value>(bytes(row), bytes(src), c, stride * 8, f.ell());
    });
}

inline void row_scale(Field f, std::uint64_t* row, std::uint32_t c, std::size_t stride) {
    if (f.binary()) {
        if (c == 0) std::memset(row, 0, stride * 8);
        return;
    }
    if (c == 1) return;
    with_modulus(f.ell(), [&](auto P) {
        scale_bytes<decltype(P)::value>(bytes(row), c, stride * 8, f.ell());
    });
}

inline std::size_t row_first_nonzero(Field f, const std::uint64_t* row, std::size_t cols,
                                     std::size_t stride) {
    if (f.binary()) {
        for (std::size_t w = 0; w < stride; ++w)
            if (row[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
        return cols;
    }
    for (std::size_t w = 0; w < stride; ++w) {
        if (row[w]) {
            const std::uint8_t* b = bytes(row + w);
            for (std::size_t k = 0; k < 8; ++k)
                if (b[k]) return w * 8 + k;
        }
    }
    return cols;
}

inline bool words_zero(const std::uint64_t* row, std::size_t stride) {
    for (std::size_t w = 0; w < stride; ++w)
        if (row[w]) return false;
    return true;
}

/// Accumulator for sums of scaled rows with lazy modular reduction.
class RowAccumulator {
public:
    RowAccumulator(Field f, std::size_t stride) : field_(f), stride_(stride) {
        if (f.binary())
            bits_.assign(stride, 0);
        else
            acc_.assign(stride * 8, 0);
        budget_ = f.binary() ? 0 : lazy_budget(f.ell());
    }

    void clear() {
        if (field_.binary())
            std::fill(bits_.begin(), bits_.end(), 0);
        else
            std::fill(acc_.begin(), acc_.end(), 0);
        pending_ = 0;
    }

    void add(const std::uint64_t* src, std::uint32_t c) {
        if (c == 0) return;
        if (field_.binary()) {
            xor_words(bits_.data(), src, stride_);
            return;
        }
        with_modulus(field_.ell(), [&](auto P) {
            constexpr unsigned PP = decltype(P)::value;
            if (pending_ == budget_) {
                reduce_acc<PP>(acc_.data(), acc_.size(), field_.ell());
                pending_ = 0;
            }
            accumulate<PP>(acc_.data(), bytes(src), c, acc_.size());
            ++pending_;
        });
    }

    void store(std::uint64_t* out) {
        if (field_.binary()) {
            std::memcpy(out, bits_.data(), stride_ * 8);
            return;
        }
        with_modulus(field_.ell(), [&](auto P) {
            reduce_acc<decltype(P)::value>(acc_.data(), acc_.size(), field_.ell());
        });
        pending_ = 0;
        std::uint8_t* o = bytes(out);
        for (std::size_t i = 0; i < acc_.size(); ++i) o[i] = static_cast<std::uint8_t>(acc_[i]);
    }

private:
    Field field_;
    std::size_t stride_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint16_t> acc_;
    unsigned budget_ = 0;
    unsigned pending_ = 0;
};

}  // namespace orthoperm::detail
