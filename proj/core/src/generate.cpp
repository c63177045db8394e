#include "stabkit/generate.hpp"

#include <charconv>

namespace stabkit {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw Error("below(0) is undefined");
    const std::uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t u = next();
        if (u >= rem) return u % bound;
    }
}

PauliVector transvect(const PauliVector& u, const PauliVector& v) {
    return u + v.scaled(sym_form(u, v).value());
}

StabilizerCode random_code(const GeneratorConfig& cfg) {
    if (cfg.k > cfg.n) {
        throw InvalidKError("k = " + std::to_string(cfg.k) + " exceeds n = " +
                            std::to_string(cfg.n));
    }
    const std::size_t n = cfg.n;
    const std::size_t dim = n - cfg.k;

    std::vector<PauliVector> rows;
    rows.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        PauliVector r(cfg.p, n);
        r.set_z(i, 1);
        rows.push_back(std::move(r));
    }

    SplitMix64 rng(cfg.seed);
    auto draw_vector = [&] {
        for (;;) {
            PauliVector v(cfg.p, n);
            for (std::size_t i = 0; i < n; ++i) v.set_x(i, static_cast<std::uint32_t>(rng.below(cfg.p.value())));
            for (std::size_t i = 0; i < n; ++i) v.set_z(i, static_cast<std::uint32_t>(rng.below(cfg.p.value())));
            if (!v.is_zero()) return v;  // T_0 is the identity; redraw
        }
    };

    const std::uint32_t rounds = cfg.effective_rounds();
    for (std::uint32_t r = 0; r < rounds; ++r) {
        const PauliVector v = draw_vector();
        for (PauliVector& row : rows) row = transvect(row, v);
    }

    return StabilizerCode::make(cfg.p, n, rows);
}

namespace {

StabilizerCode from_pauli_strings(std::size_t n, const std::vector<std::string>& gens) {
    std::vector<PauliVector> rows;
    rows.reserve(gens.size());
    for (const auto& s : gens) rows.push_back(PauliVector::from_pauli_string(s));
    return StabilizerCode::make(Prime(2), n, rows);
}

// Accepts "prefix(<count>)" and yields the count.
std::optional<std::size_t> parse_parametrized(std::string_view name, std::string_view prefix) {
    if (name.size() < prefix.size() + 3 || !name.starts_with(prefix)) return std::nullopt;
    if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
    const std::string_view digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.begin(), digits.end(), value);
    if (ec != std::errc{} || ptr != digits.end() || value == 0) return std::nullopt;
    return value;
}

}  // namespace

StabilizerCode catalog(std::string_view name) {
    if (name == "four_two_two") {
        return from_pauli_strings(4, {"XXXX", "ZZZZ"});
    }
    if (name == "five_one_three") {
        return from_pauli_strings(5, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
    }
    if (name == "steane") {
        // CSS code from the [7,4] Hamming parity checks (columns 1..7 in binary).
        return from_pauli_strings(7, {"XIXIXIX", "IXXIIXX", "IIIXXXX",
                                      "ZIZIZIZ", "IZZIIZZ", "IIIZZZZ"});
    }
    if (name == "shor") {
        return from_pauli_strings(9, {"ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII",
                                      "IIIIIIZZI", "IIIIIIIZZ", "XXXXXXIII", "IIIXXXXXX"});
    }
    if (auto n = parse_parametrized(name, "free")) {
        return StabilizerCode::make(Prime(2), *n, {});
    }
    if (auto n = parse_parametrized(name, "trivial_k0")) {
        std::vector<std::string> gens;
        for (std::size_t i = 0; i < *n; ++i) {
            std::string s(*n, 'I');
            s[i] = 'Z';
            gens.push_back(std::move(s));
        }
        return from_pauli_strings(*n, gens);
    }
    throw UnknownCodeError("unknown catalog code '" + std::string(name) + "'");
}

}  // namespace stabkit
