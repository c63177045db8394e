#pragma once

// Test-only brute-force oracles. Everything here works by enumeration
// straight from the definitions: spans are materialized by trying every
// coefficient vector, orthogonality is checked with the explicit form sum,
// membership is a set lookup. None of it touches rref, nullspace,
// Zassenhaus, or the syndrome-table distance search, so these can confirm
// those paths independently.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "stabkit/code.hpp"

namespace oracle {

using Row = std::vector<std::uint32_t>;

// All p^rows linear combinations of the rows.
inline std::set<Row> span_set(std::uint32_t p, const std::vector<Row>& rows, std::size_t cols) {
    std::set<Row> out;
    std::vector<std::uint32_t> coeff(rows.size(), 0);
    for (;;) {
        Row v(cols, 0);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                v[c] = (v[c] + coeff[r] * rows[r][c]) % p;
            }
        }
        out.insert(std::move(v));
        std::size_t i = 0;
        while (i < coeff.size() && coeff[i] == p - 1) coeff[i++] = 0;
        if (i == coeff.size()) break;
        ++coeff[i];
    }
    return out;
}

inline std::set<Row> span_set(const stabkit::MatrixFp& rows) {
    std::vector<Row> rr;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        rr.emplace_back(rows.row(r).begin(), rows.row(r).end());
    }
    return span_set(rows.modulus().value(), rr, rows.cols());
}

inline std::set<Row> span_set(const stabkit::Subspace& s) { return span_set(s.basis()); }

// All x in F_p^cols with m x = 0, by trying every vector.
inline std::set<Row> kernel_set(const stabkit::MatrixFp& m) {
    const std::uint32_t p = m.modulus().value();
    std::set<Row> out;
    Row x(m.cols(), 0);
    for (;;) {
        bool in_kernel = true;
        for (std::size_t r = 0; r < m.rows() && in_kernel; ++r) {
            std::uint64_t dot = 0;
            for (std::size_t c = 0; c < m.cols(); ++c) dot += std::uint64_t(m.at(r, c)) * x[c];
            in_kernel = dot % p == 0;
        }
        if (in_kernel) out.insert(x);
        std::size_t i = 0;
        while (i < x.size() && x[i] == p - 1) x[i++] = 0;
        if (i == x.size()) break;
        ++x[i];
    }
    return out;
}

inline std::size_t log_p(std::uint32_t p, std::size_t count) {
    std::size_t d = 0;
    while (count > 1) {
        count /= p;
        ++d;
    }
    return d;
}

// <u, v> from the definition, on flat (x | z) rows.
inline std::uint32_t form_flat(std::uint32_t p, const Row& u, const Row& v) {
    const std::size_t n = u.size() / 2;
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::uint64_t(u[i]) * v[n + i];
        acc += std::uint64_t(u[n + i]) * (p - 1) % p * v[i];  // minus u_z v_x
    }
    return static_cast<std::uint32_t>(acc % p);
}

inline std::size_t weight_flat(const Row& flat) {
    const std::size_t n = flat.size() / 2;
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (flat[i] != 0 || flat[n + i] != 0) ++w;
    }
    return w;
}

struct CodeFacts {
    std::uint32_t p;
    std::size_t n;
    std::vector<Row> generators;  // flat rows
    std::set<Row> stabilizer;     // enumerated span

    bool in_orthogonal(const Row& v) const {
        for (const Row& g : generators) {
            if (form_flat(p, g, v) != 0) return false;
        }
        return true;
    }
    bool in_stabilizer(const Row& v) const { return stabilizer.count(v) != 0; }
    bool is_logical(const Row& v) const {
        return weight_flat(v) > 0 && in_orthogonal(v) && !in_stabilizer(v);
    }
};

inline CodeFacts facts(const stabkit::StabilizerCode& code) {
    CodeFacts f;
    f.p = code.modulus().value();
    f.n = code.n();
    for (std::size_t r = 0; r < code.stabilizer().dim(); ++r) {
        auto row = code.stabilizer().basis().row(r);
        f.generators.emplace_back(row.begin(), row.end());
    }
    f.stabilizer = span_set(f.p, f.generators, 2 * f.n);
    return f;
}

// Build straight from raw generators, bypassing canonicalization entirely.
inline CodeFacts facts(std::uint32_t p, std::size_t n,
                       const std::vector<stabkit::PauliVector>& gens) {
    CodeFacts f;
    f.p = p;
    f.n = n;
    for (const auto& g : gens) f.generators.push_back(g.flat());
    f.stabilizer = span_set(p, f.generators, 2 * n);
    return f;
}

// Distance by trying all p^{2n} vectors. nullopt when S^perp \ S is empty.
inline std::optional<std::size_t> brute_distance(const CodeFacts& f) {
    std::optional<std::size_t> best;
    Row v(2 * f.n, 0);
    for (;;) {
        if (f.is_logical(v)) {
            const std::size_t w = weight_flat(v);
            if (!best || w < *best) best = w;
        }
        std::size_t i = 0;
        while (i < v.size() && v[i] == f.p - 1) v[i++] = 0;
        if (i == v.size()) break;
        ++v[i];
    }
    return best;
}

// Distance restricted to candidate weights <= wmax: supports by odometer
// over index tuples, nonzero local patterns on each.
inline std::optional<std::size_t> brute_distance_bounded(const CodeFacts& f, std::size_t wmax) {
    const std::uint32_t q = f.p * f.p - 1;
    for (std::size_t w = 1; w <= wmax; ++w) {
        std::vector<std::uint32_t> comb(w);
        for (std::size_t i = 0; i < w; ++i) comb[i] = static_cast<std::uint32_t>(i);
        for (;;) {
            std::vector<std::uint32_t> pattern(w, 0);
            for (;;) {
                Row v(2 * f.n, 0);
                for (std::size_t i = 0; i < w; ++i) {
                    v[comb[i]] = (pattern[i] + 1) / f.p;
                    v[f.n + comb[i]] = (pattern[i] + 1) % f.p;
                }
                if (f.is_logical(v)) return w;
                std::size_t i = 0;
                while (i < w && pattern[i] == q - 1) pattern[i++] = 0;
                if (i == w) break;
                ++pattern[i];
            }
            std::size_t i = w;
            while (i > 0 && comb[i - 1] == f.n - w + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < w; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// Enumerate V_E: every vector supported inside e.
inline std::vector<Row> support_vectors(const CodeFacts& f, const stabkit::QubitSet& e) {
    std::vector<Row> out;
    const std::size_t w = e.size();
    std::vector<std::uint32_t> local(2 * w, 0);
    for (;;) {
        Row v(2 * f.n, 0);
        for (std::size_t j = 0; j < w; ++j) {
            v[e.members()[j]] = local[j];
            v[f.n + e.members()[j]] = local[w + j];
        }
        out.push_back(std::move(v));
        std::size_t i = 0;
        while (i < local.size() && local[i] == f.p - 1) local[i++] = 0;
        if (i == local.size()) break;
        ++local[i];
    }
    return out;
}

// Correctable iff V_E holds no logical vector.
inline bool brute_correctable(const CodeFacts& f, const stabkit::QubitSet& e) {
    for (const Row& v : support_vectors(f, e)) {
        if (f.is_logical(v)) return false;
    }
    return true;
}

// g(M) by counting members of S^perp cap V_M and S cap V_M.
inline std::size_t brute_g(const CodeFacts& f, const stabkit::QubitSet& m) {
    std::size_t top = 0, bottom = 0;
    for (const Row& v : support_vectors(f, m)) {
        if (f.in_orthogonal(v)) ++top;
        if (f.in_stabilizer(v)) ++bottom;
    }
    return log_p(f.p, top) - log_p(f.p, bottom);
}

}  // namespace oracle
