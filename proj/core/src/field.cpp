#include "stabkit/field.hpp"

namespace stabkit {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

Prime::Prime(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) {
        throw Error("modulus " + std::to_string(p) + " is not prime");
    }
    // Keeps a + b < 2^32 for reduced operands.
    if (p > 0x7FFFFFFF) {
        throw Error("modulus " + std::to_string(p) + " is too large");
    }
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw Error("zero has no inverse");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

FieldElement::FieldElement(std::uint32_t value, Prime modulus)
    : value_(value % modulus.value()), modulus_(modulus) {}

namespace {

void require_same_modulus(Prime a, Prime b) {
    if (a != b) throw MismatchError("field elements have different moduli");
}

}  // namespace

FieldElement FieldElement::operator+(FieldElement other) const {
    require_same_modulus(modulus_, other.modulus_);
    return {add_mod(value_, other.value_, modulus_.value()), modulus_};
}

FieldElement FieldElement::operator-(FieldElement other) const {
    require_same_modulus(modulus_, other.modulus_);
    return {sub_mod(value_, other.value_, modulus_.value()), modulus_};
}

FieldElement FieldElement::operator*(FieldElement other) const {
    require_same_modulus(modulus_, other.modulus_);
    return {mul_mod(value_, other.value_, modulus_.value()), modulus_};
}

FieldElement FieldElement::operator-() const {
    return {neg_mod(value_, modulus_.value()), modulus_};
}

FieldElement FieldElement::inverse() const {
    return {inv_mod(value_, modulus_.value()), modulus_};
}

}  // namespace stabkit
