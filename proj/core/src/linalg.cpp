#include "stabkit/linalg.hpp"

#include <atomic>
#include <string>

namespace stabkit {

namespace {

std::atomic<Backend> g_default_backend{Backend::Auto};

void require_same_space(const Subspace& a, const Subspace& b) {
    if (a.modulus() != b.modulus()) throw MismatchError("subspaces have different moduli");
    if (a.ambient_dim() != b.ambient_dim()) {
        throw MismatchError("subspaces have different ambient dimensions");
    }
}

}  // namespace

void set_default_backend(Backend b) { g_default_backend.store(b); }

Backend default_backend() { return g_default_backend.load(); }

Backend resolve_backend(Backend b, Prime p) {
    if (b == Backend::Auto) b = g_default_backend.load();
    if (b == Backend::Auto) b = p.value() == 2 ? Backend::Bitpacked : Backend::Generic;
    if (b == Backend::Bitpacked && p.value() != 2) {
        throw MismatchError("bit-packed backend requires p = 2");
    }
    return b;
}

MatrixFp::MatrixFp(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

MatrixFp MatrixFp::from_rows(Prime p, std::size_t cols,
                             const std::vector<std::vector<std::uint32_t>>& rows) {
    MatrixFp m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw MismatchError("row length does not match cols");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c] % p.value());
    }
    return m;
}

void MatrixFp::append_row(std::span<const std::uint32_t> row) {
    if (row.size() != cols_) throw MismatchError("row length does not match cols");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

void MatrixFp::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[a * cols_ + c], a_[b * cols_ + c]);
}

namespace {

RrefResult rref_generic(MatrixFp m) {
    const std::uint32_t p = m.modulus().value();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(pivot, r);
        const std::uint32_t inv = inv_mod(m.at(r, c), p);
        if (inv != 1) {
            auto row = m.row(r);
            for (std::size_t j = c; j < cols; ++j) row[j] = mul_mod(row[j], inv, p);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const std::uint32_t f = m.at(i, c);
            if (f == 0) continue;
            auto src = m.row(r);
            auto dst = m.row(i);
            for (std::size_t j = c; j < cols; ++j) {
                dst[j] = sub_mod(dst[j], mul_mod(f, src[j], p), p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

RrefResult rref_bitpacked(const MatrixFp& in) {
    const std::size_t rows = in.rows(), cols = in.cols();
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> bits(rows * words, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        auto row = in.row(r);
        for (std::size_t c = 0; c < cols; ++c) {
            if (row[c] & 1) bits[r * words + (c >> 6)] |= std::uint64_t(1) << (c & 63);
        }
    }

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t mask = std::uint64_t(1) << (c & 63);
        std::size_t pivot = r;
        while (pivot < rows && !(bits[pivot * words + w] & mask)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < words; ++j) {
                std::swap(bits[pivot * words + j], bits[r * words + j]);
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && (bits[i * words + w] & mask)) {
                for (std::size_t j = 0; j < words; ++j) bits[i * words + j] ^= bits[r * words + j];
            }
        }
        pivots.push_back(c);
        ++r;
    }

    MatrixFp out(in.modulus(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t c = 0; c < cols; ++c) {
            out.set(i, c, (bits[i * words + (c >> 6)] >> (c & 63)) & 1);
        }
    }
    return {std::move(out), r, std::move(pivots)};
}

}  // namespace

RrefResult rref(const MatrixFp& m, Backend backend) {
    switch (resolve_backend(backend, m.modulus())) {
        case Backend::Bitpacked:
            return rref_bitpacked(m);
        default:
            return rref_generic(m);
    }
}

Subspace nullspace(const MatrixFp& m, Backend backend) {
    const std::uint32_t p = m.modulus().value();
    const std::size_t cols = m.cols();
    RrefResult red = rref(m, backend);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

    MatrixFp kernel(m.modulus(), cols - red.rank, cols);
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        kernel.set(out, f, 1);
        for (std::size_t i = 0; i < red.rank; ++i) {
            kernel.set(out, red.pivot_cols[i], neg_mod(red.matrix.at(i, f), p));
        }
        ++out;
    }
    return Subspace::from_rows(kernel, backend);
}

std::optional<std::vector<std::uint32_t>> solve_row_combination(
    const MatrixFp& rows, std::span<const std::uint32_t> target, Backend backend) {
    if (target.size() != rows.cols()) throw MismatchError("target length does not match cols");
    const std::size_t m = rows.rows(), c = rows.cols();

    // Transpose and augment: [rows^T | target], then read the coefficients
    // off the pivots.
    MatrixFp aug(rows.modulus(), c, m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug.set(j, i, rows.at(i, j));
    }
    for (std::size_t j = 0; j < c; ++j) aug.set(j, m, target[j]);

    RrefResult red = rref(aug, backend);
    std::vector<std::uint32_t> coeffs(m, 0);
    for (std::size_t i = 0; i < red.rank; ++i) {
        if (red.pivot_cols[i] == m) return std::nullopt;  // inconsistent
        coeffs[red.pivot_cols[i]] = red.matrix.at(i, m);
    }
    return coeffs;
}

Subspace Subspace::zero(Prime p, std::size_t ambient_dim) {
    return Subspace(MatrixFp(p, 0, ambient_dim));
}

Subspace Subspace::full(Prime p, std::size_t ambient_dim) {
    MatrixFp id(p, ambient_dim, ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) id.set(i, i, 1);
    return Subspace(std::move(id));
}

Subspace Subspace::from_rows(const MatrixFp& rows, Backend backend) {
    RrefResult red = rref(rows, backend);
    MatrixFp basis(rows.modulus(), red.rank, rows.cols());
    for (std::size_t r = 0; r < red.rank; ++r) {
        auto src = red.matrix.row(r);
        auto dst = basis.row(r);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return Subspace(std::move(basis));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b, Backend backend) {
    require_same_space(a, b);
    MatrixFp stacked(a.modulus(), 0, a.ambient_dim());
    for (std::size_t r = 0; r < a.dim(); ++r) stacked.append_row(a.basis().row(r));
    for (std::size_t r = 0; r < b.dim(); ++r) stacked.append_row(b.basis().row(r));
    return Subspace::from_rows(stacked, backend);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b, Backend backend) {
    require_same_space(a, b);
    const std::size_t m = a.ambient_dim();
    MatrixFp block(a.modulus(), a.dim() + b.dim(), 2 * m);
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            const std::uint32_t v = a.basis().at(r, c);
            block.set(r, c, v);
            block.set(r, m + c, v);
        }
    }
    for (std::size_t r = 0; r < b.dim(); ++r) {
        for (std::size_t c = 0; c < m; ++c) block.set(a.dim() + r, c, b.basis().at(r, c));
    }

    RrefResult red = rref(block, backend);
    MatrixFp inter(a.modulus(), 0, m);
    for (std::size_t r = 0; r < red.rank; ++r) {
        auto row = red.matrix.row(r);
        bool left_zero = true;
        for (std::size_t c = 0; c < m && left_zero; ++c) left_zero = row[c] == 0;
        if (left_zero) inter.append_row(row.subspan(m, m));
    }
    return Subspace::from_rows(inter, backend);
}

bool contains(const Subspace& a, std::span<const std::uint32_t> v) {
    if (v.size() != a.ambient_dim()) throw MismatchError("vector length does not match ambient");
    const std::uint32_t p = a.modulus().value();
    std::vector<std::uint32_t> work(v.begin(), v.end());

    // One pass suffices: basis rows are RREF, so clearing pivot columns in
    // order never reintroduces an earlier pivot.
    for (std::size_t r = 0; r < a.dim(); ++r) {
        auto row = a.basis().row(r);
        std::size_t pc = 0;
        while (pc < row.size() && row[pc] == 0) ++pc;
        if (pc == row.size()) continue;
        const std::uint32_t f = work[pc];
        if (f == 0) continue;
        for (std::size_t c = pc; c < work.size(); ++c) {
            work[c] = sub_mod(work[c], mul_mod(f, row[c], p), p);
        }
    }
    for (std::uint32_t x : work) {
        if (x != 0) return false;
    }
    return true;
}

bool subspace_leq(const Subspace& inner, const Subspace& outer) {
    require_same_space(inner, outer);
    for (std::size_t r = 0; r < inner.dim(); ++r) {
        if (!contains(outer, inner.basis().row(r))) return false;
    }
    return true;
}

}  // namespace stabkit
