#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stabkit/linalg.hpp"

namespace stabkit {

/// Element v = (v_X, v_Z) of V = F_p^n x F_p^n. The flattened form used
/// for all MatrixFp/Subspace interop is x[0..n) followed by z[0..n); with
/// that ordering the symplectic form matrix is the block [[0, I], [-I, 0]].
class PauliVector {
  public:
    PauliVector(Prime p, std::size_t n);  // zero vector
    PauliVector(Prime p, std::vector<std::uint32_t> x, std::vector<std::uint32_t> z);

    static PauliVector from_flat(Prime p, std::span<const std::uint32_t> flat);

    /// p = 2 only. Letters map I=(0,0), X=(1,0), Z=(0,1), Y=(1,1); phases
    /// do not exist in this abelianized model.
    static PauliVector from_pauli_string(std::string_view letters);

    Prime modulus() const { return p_; }
    std::size_t n() const { return x_.size(); }

    std::uint32_t x(std::size_t i) const { return x_[i]; }
    std::uint32_t z(std::size_t i) const { return z_[i]; }
    void set_x(std::size_t i, std::uint32_t v) { x_[i] = v; }
    void set_z(std::size_t i, std::uint32_t v) { z_[i] = v; }

    std::vector<std::uint32_t> flat() const;
    std::string pauli_string() const;  // p = 2 only
    bool is_zero() const;

    PauliVector operator+(const PauliVector& other) const;
    PauliVector operator-(const PauliVector& other) const;
    PauliVector scaled(std::uint32_t c) const;

    friend bool operator==(const PauliVector& a, const PauliVector& b) {
        return a.p_ == b.p_ && a.x_ == b.x_ && a.z_ == b.z_;
    }

  private:
    Prime p_;
    std::vector<std::uint32_t> x_;
    std::vector<std::uint32_t> z_;
};

/// Subset of the n qudit positions. Indices are 0-based in memory; all
/// text I/O renders them 1-based.
class QubitSet {
  public:
    explicit QubitSet(std::size_t n);  // empty set
    QubitSet(std::size_t n, std::vector<std::uint32_t> indices);  // 0-based; sorted + deduped

    static QubitSet full(std::size_t n);
    static QubitSet range(std::size_t n, std::uint32_t first, std::uint32_t count);  // {first, ..., first+count-1}

    std::size_t n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(std::uint32_t i) const;

    /// Sorted, duplicate-free, 0-based.
    const std::vector<std::uint32_t>& members() const { return members_; }

    QubitSet complement() const;
    bool intersects(const QubitSet& other) const;

    friend bool operator==(const QubitSet& a, const QubitSet& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }

  private:
    std::size_t n_;
    std::vector<std::uint32_t> members_;
};

/// Standard symplectic form <u,v> = sum_i u_x(i) v_z(i) - u_z(i) v_x(i).
/// Zero exactly when the corresponding Pauli operators commute.
FieldElement sym_form(const PauliVector& u, const PauliVector& v);

/// Positions where (x(i), z(i)) != (0, 0); a Y counts once.
QubitSet supp(const PauliVector& v);
std::size_t wt(const PauliVector& v);

/// Zero every coordinate outside e. Linear, idempotent, lands in V_e.
PauliVector restrict_to(const PauliVector& v, const QubitSet& e);

/// V_C = {v : supp(v) subset of C}; basis {(e_i|0), (0|e_i) : i in C},
/// dimension 2|C|.
Subspace support_subspace(const QubitSet& c, Prime p);

/// Symplectic orthogonal complement {v : <b,v> = 0 for all b in s},
/// realized as the kernel of the basis multiplied by the form matrix.
/// Satisfies dim s + dim sym_orth(s) = ambient and sym_orth twice is
/// the identity.
Subspace sym_orth(const Subspace& s, Backend backend = Backend::Auto);

/// True iff the form vanishes on s pairwise, i.e. s <= sym_orth(s).
bool is_isotropic(const Subspace& s);

}  // namespace stabkit
