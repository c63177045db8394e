#include <algorithm>
#include <optional>

#include "enumeration.hpp"
#include "stabkit/code.hpp"

namespace stabkit {

namespace {

// The search walks candidate vectors by increasing weight w: every support
// of size w in lexicographic order, and on it every local pattern with no
// identity coordinate — (p^2-1)^w of them, the last support position
// varying fastest. A candidate is in S^perp iff its syndrome against the
// stabilizer basis vanishes; syndromes accumulate per depth, so extending
// a partial pattern costs one table lookup. Pattern index t in
// [0, p^2-1) means (a, b) = ((t+1) / p, (t+1) % p) on that coordinate.

// Bit-packed syndromes for p = 2: one XOR word per 64 stabilizer rows.
class PackedKernel {
  public:
    explicit PackedKernel(const StabilizerCode& code) {
        const Subspace& s = code.stabilizer();
        const std::size_t n = code.n();
        m_ = s.dim();
        words_ = (m_ + 63) / 64;
        contrib_.assign(n * 3 * words_, 0);
        for (std::size_t j = 0; j < m_; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t sx = s.basis().at(j, i);
                const std::uint64_t sz = s.basis().at(j, n + i);
                for (std::uint32_t t = 0; t < 3; ++t) {
                    const std::uint64_t a = (t + 1) / 2, b = (t + 1) % 2;
                    if ((sx & b) ^ (sz & a)) {
                        contrib_[(i * 3 + t) * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
                    }
                }
            }
        }
    }

    std::uint32_t patterns() const { return 3; }

    void begin(std::size_t w) { stack_.assign((w + 1) * words_, 0); }

    void push(std::size_t depth, std::uint32_t qubit, std::uint32_t t) {
        const std::uint64_t* c = contrib_.data() + (qubit * 3 + t) * words_;
        const std::uint64_t* src = stack_.data() + depth * words_;
        std::uint64_t* dst = stack_.data() + (depth + 1) * words_;
        for (std::size_t j = 0; j < words_; ++j) dst[j] = src[j] ^ c[j];
    }

    bool zero(std::size_t depth) const {
        const std::uint64_t* s = stack_.data() + depth * words_;
        for (std::size_t j = 0; j < words_; ++j) {
            if (s[j] != 0) return false;
        }
        return true;
    }

  private:
    std::size_t m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> contrib_;
    std::vector<std::uint64_t> stack_;
};

// Word-arithmetic syndromes for any prime.
class GenericKernel {
  public:
    explicit GenericKernel(const StabilizerCode& code) : p_(code.modulus().value()) {
        const Subspace& s = code.stabilizer();
        const std::size_t n = code.n();
        m_ = s.dim();
        q_ = p_ * p_ - 1;
        contrib_.assign(n * q_ * m_, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::uint32_t t = 0; t < q_; ++t) {
                const std::uint32_t a = (t + 1) / p_, b = (t + 1) % p_;
                for (std::size_t j = 0; j < m_; ++j) {
                    const std::uint32_t sx = s.basis().at(j, i);
                    const std::uint32_t sz = s.basis().at(j, n + i);
                    contrib_[(i * q_ + t) * m_ + j] =
                        sub_mod(mul_mod(sx, b, p_), mul_mod(sz, a, p_), p_);
                }
            }
        }
    }

    std::uint32_t patterns() const { return q_; }

    void begin(std::size_t w) { stack_.assign((w + 1) * m_, 0); }

    void push(std::size_t depth, std::uint32_t qubit, std::uint32_t t) {
        const std::uint32_t* c = contrib_.data() + (qubit * q_ + t) * m_;
        const std::uint32_t* src = stack_.data() + depth * m_;
        std::uint32_t* dst = stack_.data() + (depth + 1) * m_;
        for (std::size_t j = 0; j < m_; ++j) dst[j] = add_mod(src[j], c[j], p_);
    }

    bool zero(std::size_t depth) const {
        const std::uint32_t* s = stack_.data() + depth * m_;
        for (std::size_t j = 0; j < m_; ++j) {
            if (s[j] != 0) return false;
        }
        return true;
    }

  private:
    std::uint32_t p_;
    std::uint32_t q_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint32_t> contrib_;
    std::vector<std::uint32_t> stack_;
};

template <class Kernel>
class WeightSearch {
  public:
    WeightSearch(const StabilizerCode& code, Kernel kernel)
        : code_(code), kernel_(std::move(kernel)), p_(code.modulus().value()) {}

    // First vector of weight w in S^perp \ S in canonical order, if any.
    std::optional<PauliVector> weight_hit(std::size_t w) {
        kernel_.begin(w);
        comb_.resize(w);
        digits_.resize(w);
        for (std::size_t i = 0; i < w; ++i) comb_[i] = static_cast<std::uint32_t>(i);
        do {
            if (auto v = dfs(0, w)) return v;
        } while (detail::next_combination(comb_, code_.n()));
        return std::nullopt;
    }

  private:
    std::optional<PauliVector> dfs(std::size_t depth, std::size_t w) {
        if (depth == w) {
            if (!kernel_.zero(w)) return std::nullopt;
            PauliVector v = build();
            if (contains(code_.stabilizer(), v.flat())) return std::nullopt;
            return v;
        }
        for (std::uint32_t t = 0; t < kernel_.patterns(); ++t) {
            digits_[depth] = t;
            kernel_.push(depth, comb_[depth], t);
            if (auto v = dfs(depth + 1, w)) return v;
        }
        return std::nullopt;
    }

    PauliVector build() const {
        PauliVector v(code_.modulus(), code_.n());
        for (std::size_t i = 0; i < comb_.size(); ++i) {
            const std::uint32_t t = digits_[i];
            v.set_x(comb_[i], (t + 1) / p_);
            v.set_z(comb_[i], (t + 1) % p_);
        }
        return v;
    }

    const StabilizerCode& code_;
    Kernel kernel_;
    std::uint32_t p_;
    std::vector<std::uint32_t> comb_;
    std::vector<std::uint32_t> digits_;
};

template <class Kernel>
Distance run_search(const StabilizerCode& code, std::size_t max_w, Kernel kernel) {
    WeightSearch<Kernel> search(code, std::move(kernel));
    for (std::size_t w = 1; w <= max_w; ++w) {
        if (auto v = search.weight_hit(w)) {
            return {static_cast<std::uint32_t>(w), std::move(v)};
        }
    }
    if (max_w >= code.n()) {
        // k > 0 guarantees S^perp \ S has an element of weight <= n.
        throw InternalError("full-weight distance search found no logical vector");
    }
    throw ResourceLimitError(
        "distance search exhausted its weight budget; proven d > " + std::to_string(max_w),
        static_cast<std::uint32_t>(max_w));
}

}  // namespace

Distance distance(const StabilizerCode& code, const DistanceOptions& opt) {
    if (code.k() == 0) return {std::nullopt, std::nullopt};
    const std::size_t n = code.n();
    const std::size_t max_w = opt.max_weight == 0 ? n : std::min<std::size_t>(opt.max_weight, n);
    if (code.modulus().value() == 2) {
        return run_search(code, max_w, PackedKernel(code));
    }
    return run_search(code, max_w, GenericKernel(code));
}

}  // namespace stabkit
