#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stabkit/field.hpp"

namespace stabkit {

/// Row-reduction kernel selector. Bitpacked stores one machine word per 64
/// columns and eliminates with XOR; it is only valid for p = 2. Generic
/// uses word-sized modular arithmetic for any prime. Auto resolves to the
/// process default (see set_default_backend), which out of the box picks
/// Bitpacked for p = 2 and Generic otherwise.
enum class Backend { Auto, Generic, Bitpacked };

/// Override what Backend::Auto resolves to, process-wide. Intended for the
/// CLI --backend flag and cross-backend determinism tests; set it before
/// spawning worker threads.
void set_default_backend(Backend b);
Backend default_backend();

/// Resolve Auto against the process default and validate against p.
Backend resolve_backend(Backend b, Prime p);

/// Dense row-major matrix over F_p; entries are canonical representatives
/// in [0, p).
class MatrixFp {
  public:
    MatrixFp(Prime p, std::size_t rows, std::size_t cols);

    static MatrixFp from_rows(Prime p, std::size_t cols,
                              const std::vector<std::vector<std::uint32_t>>& rows);

    Prime modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { a_[r * cols_ + c] = v; }

    std::span<const std::uint32_t> row(std::size_t r) const {
        return {a_.data() + r * cols_, cols_};
    }
    std::span<std::uint32_t> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

    const std::vector<std::uint32_t>& entries() const { return a_; }

    void append_row(std::span<const std::uint32_t> row);
    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const MatrixFp& a, const MatrixFp& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> a_;
};

struct RrefResult {
    MatrixFp matrix;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Canonical reduced row echelon form: pivots are 1, pivot columns are
/// otherwise zero and strictly increasing, zero rows sink to the bottom.
/// The form is unique per row space, so equal row spaces reduce to
/// bit-identical matrices.
RrefResult rref(const MatrixFp& m, Backend backend = Backend::Auto);

class Subspace;

/// Right kernel {x : m x = 0} of an r x c matrix, as a subspace of F_p^c.
Subspace nullspace(const MatrixFp& m, Backend backend = Backend::Auto);

/// Coefficients x with sum_i x[i] * rows[i] == target, if target lies in
/// the row space; free coordinates are set to zero.
std::optional<std::vector<std::uint32_t>> solve_row_combination(
    const MatrixFp& rows, std::span<const std::uint32_t> target,
    Backend backend = Backend::Auto);

/// Subspace of F_p^m held as a canonical RREF basis with exactly dim rows.
/// Canonicality makes subspace equality plain bit-equality of bases.
class Subspace {
  public:
    static Subspace zero(Prime p, std::size_t ambient_dim);
    static Subspace full(Prime p, std::size_t ambient_dim);

    /// Canonicalize the row space of an arbitrary stack of rows.
    static Subspace from_rows(const MatrixFp& rows, Backend backend = Backend::Auto);

    Prime modulus() const { return basis_.modulus(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }

    /// dim x ambient_dim matrix in canonical RREF.
    const MatrixFp& basis() const { return basis_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }

  private:
    explicit Subspace(MatrixFp basis) : basis_(std::move(basis)) {}

    MatrixFp basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b, Backend backend = Backend::Auto);

/// Exact intersection via the Zassenhaus block construction: reduce
/// [A | A; B | 0] and read the right halves of rows whose left half
/// vanished.
Subspace subspace_intersect(const Subspace& a, const Subspace& b,
                            Backend backend = Backend::Auto);

/// Membership by reduction against the canonical basis.
bool contains(const Subspace& a, std::span<const std::uint32_t> v);

/// inner <= outer as subspaces: every basis row of inner is in outer.
bool subspace_leq(const Subspace& inner, const Subspace& outer);

}  // namespace stabkit
