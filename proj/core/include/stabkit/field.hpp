#pragma once

#include <cstdint>

#include "stabkit/errors.hpp"

namespace stabkit {

/// A validated prime modulus. Construction checks primality by trial
/// division; any word-sized prime works and everything up to 2^16 is in
/// the supported range.
class Prime {
  public:
    explicit Prime(std::uint32_t p);

    std::uint32_t value() const { return p_; }

    friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }
    friend bool operator!=(Prime a, Prime b) { return a.p_ != b.p_; }

  private:
    std::uint32_t p_;
};

// Arithmetic on canonical representatives in [0, p). Callers keep values
// reduced; products go through 64 bits.

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

/// Multiplicative inverse of a nonzero element, by extended Euclid.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// Scalar in F_p: a canonical representative together with its modulus.
class FieldElement {
  public:
    FieldElement(std::uint32_t value, Prime modulus);

    std::uint32_t value() const { return value_; }
    Prime modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(FieldElement other) const;
    FieldElement operator-(FieldElement other) const;
    FieldElement operator*(FieldElement other) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    friend bool operator==(FieldElement a, FieldElement b) {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

  private:
    std::uint32_t value_;
    Prime modulus_;
};

}  // namespace stabkit
