#include "stabkit/pauli.hpp"

#include <algorithm>

namespace stabkit {

PauliVector::PauliVector(Prime p, std::size_t n) : p_(p), x_(n, 0), z_(n, 0) {}

PauliVector::PauliVector(Prime p, std::vector<std::uint32_t> x, std::vector<std::uint32_t> z)
    : p_(p), x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) throw MismatchError("x and z parts have different lengths");
    for (auto& v : x_) v %= p_.value();
    for (auto& v : z_) v %= p_.value();
}

PauliVector PauliVector::from_flat(Prime p, std::span<const std::uint32_t> flat) {
    if (flat.size() % 2 != 0) throw MismatchError("flat vector length must be 2n");
    const std::size_t n = flat.size() / 2;
    return PauliVector(p, std::vector<std::uint32_t>(flat.begin(), flat.begin() + n),
                       std::vector<std::uint32_t>(flat.begin() + n, flat.end()));
}

PauliVector PauliVector::from_pauli_string(std::string_view letters) {
    const Prime two(2);
    PauliVector v(two, letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        switch (letters[i]) {
            case 'I': break;
            case 'X': v.set_x(i, 1); break;
            case 'Z': v.set_z(i, 1); break;
            case 'Y': v.set_x(i, 1); v.set_z(i, 1); break;
            default:
                throw Error(std::string("invalid Pauli letter '") + letters[i] + "'");
        }
    }
    return v;
}

std::vector<std::uint32_t> PauliVector::flat() const {
    std::vector<std::uint32_t> out;
    out.reserve(2 * n());
    out.insert(out.end(), x_.begin(), x_.end());
    out.insert(out.end(), z_.begin(), z_.end());
    return out;
}

std::string PauliVector::pauli_string() const {
    if (p_.value() != 2) throw Error("Pauli letters are only defined for p = 2");
    std::string s(n(), 'I');
    for (std::size_t i = 0; i < n(); ++i) {
        if (x_[i] && z_[i]) s[i] = 'Y';
        else if (x_[i]) s[i] = 'X';
        else if (z_[i]) s[i] = 'Z';
    }
    return s;
}

bool PauliVector::is_zero() const {
    return std::all_of(x_.begin(), x_.end(), [](std::uint32_t v) { return v == 0; }) &&
           std::all_of(z_.begin(), z_.end(), [](std::uint32_t v) { return v == 0; });
}

namespace {

void require_compatible(const PauliVector& a, const PauliVector& b) {
    if (a.modulus() != b.modulus()) throw MismatchError("vectors have different moduli");
    if (a.n() != b.n()) throw MismatchError("vectors have different lengths");
}

}  // namespace

PauliVector PauliVector::operator+(const PauliVector& other) const {
    require_compatible(*this, other);
    PauliVector out(p_, n());
    const std::uint32_t p = p_.value();
    for (std::size_t i = 0; i < n(); ++i) {
        out.x_[i] = add_mod(x_[i], other.x_[i], p);
        out.z_[i] = add_mod(z_[i], other.z_[i], p);
    }
    return out;
}

PauliVector PauliVector::operator-(const PauliVector& other) const {
    require_compatible(*this, other);
    PauliVector out(p_, n());
    const std::uint32_t p = p_.value();
    for (std::size_t i = 0; i < n(); ++i) {
        out.x_[i] = sub_mod(x_[i], other.x_[i], p);
        out.z_[i] = sub_mod(z_[i], other.z_[i], p);
    }
    return out;
}

PauliVector PauliVector::scaled(std::uint32_t c) const {
    PauliVector out(p_, n());
    const std::uint32_t p = p_.value();
    c %= p;
    for (std::size_t i = 0; i < n(); ++i) {
        out.x_[i] = mul_mod(x_[i], c, p);
        out.z_[i] = mul_mod(z_[i], c, p);
    }
    return out;
}

QubitSet::QubitSet(std::size_t n) : n_(n) {}

QubitSet::QubitSet(std::size_t n, std::vector<std::uint32_t> indices)
    : n_(n), members_(std::move(indices)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= n_) {
        throw IndexOutOfRangeError("qudit index " + std::to_string(members_.back() + 1) +
                                   " outside [1, " + std::to_string(n_) + "]");
    }
}

QubitSet QubitSet::full(std::size_t n) {
    std::vector<std::uint32_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
    return {n, std::move(all)};
}

QubitSet QubitSet::range(std::size_t n, std::uint32_t first, std::uint32_t count) {
    std::vector<std::uint32_t> idx(count);
    for (std::uint32_t i = 0; i < count; ++i) idx[i] = first + i;
    return {n, std::move(idx)};
}

bool QubitSet::contains(std::uint32_t i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

QubitSet QubitSet::complement() const {
    std::vector<std::uint32_t> rest;
    rest.reserve(n_ - members_.size());
    std::size_t j = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (j < members_.size() && members_[j] == i) {
            ++j;
        } else {
            rest.push_back(i);
        }
    }
    return {n_, std::move(rest)};
}

bool QubitSet::intersects(const QubitSet& other) const {
    std::size_t i = 0, j = 0;
    while (i < members_.size() && j < other.members_.size()) {
        if (members_[i] == other.members_[j]) return true;
        if (members_[i] < other.members_[j]) ++i;
        else ++j;
    }
    return false;
}

FieldElement sym_form(const PauliVector& u, const PauliVector& v) {
    require_compatible(u, v);
    const std::uint32_t p = u.modulus().value();
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < u.n(); ++i) {
        acc = add_mod(acc, mul_mod(u.x(i), v.z(i), p), p);
        acc = sub_mod(acc, mul_mod(u.z(i), v.x(i), p), p);
    }
    return {acc, u.modulus()};
}

QubitSet supp(const PauliVector& v) {
    std::vector<std::uint32_t> idx;
    for (std::size_t i = 0; i < v.n(); ++i) {
        if (v.x(i) != 0 || v.z(i) != 0) idx.push_back(static_cast<std::uint32_t>(i));
    }
    return {v.n(), std::move(idx)};
}

std::size_t wt(const PauliVector& v) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.n(); ++i) {
        if (v.x(i) != 0 || v.z(i) != 0) ++w;
    }
    return w;
}

PauliVector restrict_to(const PauliVector& v, const QubitSet& e) {
    if (e.n() != v.n()) throw MismatchError("qudit set size does not match vector length");
    PauliVector out(v.modulus(), v.n());
    for (std::uint32_t i : e.members()) {
        out.set_x(i, v.x(i));
        out.set_z(i, v.z(i));
    }
    return out;
}

Subspace support_subspace(const QubitSet& c, Prime p) {
    const std::size_t n = c.n();
    MatrixFp rows(p, 2 * c.size(), 2 * n);
    std::size_t r = 0;
    for (std::uint32_t i : c.members()) rows.set(r++, i, 1);
    for (std::uint32_t i : c.members()) rows.set(r++, n + i, 1);
    return Subspace::from_rows(rows);
}

Subspace sym_orth(const Subspace& s, Backend backend) {
    if (s.ambient_dim() % 2 != 0) throw MismatchError("symplectic ambient dimension must be even");
    const std::size_t n = s.ambient_dim() / 2;
    const std::uint32_t p = s.modulus().value();

    // Row b of the basis becomes (-b_z | b_x), so the kernel of the result
    // is exactly {v : <b, v> = 0 for all b}.
    MatrixFp check(s.modulus(), s.dim(), 2 * n);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            check.set(r, i, neg_mod(s.basis().at(r, n + i), p));
            check.set(r, n + i, s.basis().at(r, i));
        }
    }
    return nullspace(check, backend);
}

bool is_isotropic(const Subspace& s) {
    if (s.ambient_dim() % 2 != 0) throw MismatchError("symplectic ambient dimension must be even");
    std::vector<PauliVector> rows;
    rows.reserve(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
        rows.push_back(PauliVector::from_flat(s.modulus(), s.basis().row(r)));
    }
    // Bilinearity makes the pairwise basis check sufficient.
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (!sym_form(rows[i], rows[j]).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace stabkit
