// Acceptance suite: every criterion the build must meet, one pass/fail
// line each. Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stabkit/generate.hpp"
#include "stabkit/io.hpp"
#include "support/oracles.hpp"

using namespace stabkit;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixture(const std::string& name) {
    return std::string(STABKIT_FIXTURE_DIR) + "/" + name + ".code";
}

StabilizerCode load_fixture(const std::string& name) {
    std::ifstream in(fixture(name));
    require(in.good(), "cannot open fixture " + name);
    return parse_code(in);
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(STABKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "popen failed");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    require(pclose(pipe) != -1, "pclose failed");
    return out;
}

std::vector<QubitSet> subsets_of_size_at_most(std::size_t n, std::size_t wmax) {
    std::vector<QubitSet> out;
    out.emplace_back(n);
    for (std::size_t w = 1; w <= wmax; ++w) {
        std::vector<std::uint32_t> comb(w);
        for (std::size_t i = 0; i < w; ++i) comb[i] = static_cast<std::uint32_t>(i);
        for (;;) {
            out.emplace_back(n, comb);
            std::size_t i = w;
            while (i > 0 && comb[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < w; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return out;
}

constexpr std::array<std::uint32_t, 3> kPrimes = {2, 3, 5};

// 1. The four canonical codes report exactly their pinned parameters, with
//    each distance confirmed by an oracle that never touches the search
//    implementation. Total runtime must stay within 10 seconds.
std::string criterion_catalog() {
    const auto start = std::chrono::steady_clock::now();
    struct Pinned {
        const char* name;
        std::size_t n, k;
        std::uint32_t d;
        std::int64_t slack;
    };
    const std::vector<Pinned> pinned = {
        {"four_two_two", 4, 2, 2, 0},
        {"five_one_three", 5, 1, 3, 0},
        {"steane", 7, 1, 3, 2},
        {"shor", 9, 1, 3, 4},
    };
    for (const Pinned& c : pinned) {
        const StabilizerCode code = load_fixture(c.name);
        const AnalysisReport report = check_singleton(code);
        require(report.n == c.n && report.k == c.k, std::string(c.name) + ": wrong n or k");
        require(report.dist.value && *report.dist.value == c.d,
                std::string(c.name) + ": wrong distance");
        require(report.slack && *report.slack == c.slack, std::string(c.name) + ": wrong slack");
        require(report.bound_holds, std::string(c.name) + ": bound violated");

        const auto facts = oracle::facts(code);
        if (code.n() <= 7) {
            require(oracle::brute_distance(facts) == c.d,
                    std::string(c.name) + ": full oracle disagrees");
        } else {
            require(oracle::brute_distance_bounded(facts, 3) == c.d,
                    std::string(c.name) + ": bounded oracle disagrees");
        }
    }
    const double elapsed = seconds_since(start);
    require(elapsed <= 10.0, "catalog run exceeded 10 s");
    std::ostringstream msg;
    msg << "4 codes pinned and oracle-confirmed in " << elapsed << " s (limit 10 s)";
    return msg.str();
}

// 2. 1000 random codes over p in {2,3,5}, n <= 8, every k: the Singleton
//    bound holds whenever d is finite. Zero violations, 60 second budget.
std::string criterion_singleton_suite() {
    const auto start = std::chrono::steady_clock::now();
    SplitMix64 master(2024);
    std::size_t codes = 0, finite = 0;
    for (std::uint64_t round = 0; round < 8; ++round) {
        for (std::uint32_t p : kPrimes) {
            for (std::uint32_t n = 1; n <= 8; ++n) {
                for (std::uint32_t k = 0; k <= n; ++k) {
                    const StabilizerCode code = random_code({Prime(p), n, k, master.next()});
                    const AnalysisReport report = check_singleton(code);
                    ++codes;
                    const std::string where = " at p=" + std::to_string(p) +
                                              " n=" + std::to_string(n) +
                                              " k=" + std::to_string(k);
                    require(report.bound_holds, "singleton violated" + where);
                    if (report.dist.no_logicals()) continue;
                    ++finite;
                    require(*report.slack >= 0, "negative slack" + where);
                    require(report.two_disjoint.has_value(),
                            "missing two-disjoint witness regions" + where);
                    require(report.two_disjoint->pass && report.two_disjoint->g_identity_ok,
                            "two-disjoint verdict failed" + where);
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    require(codes >= 1000, "fewer than 1000 codes");
    require(elapsed <= 60.0, "suite exceeded 60 s");
    std::ostringstream msg;
    msg << codes << " codes (" << finite << " with finite d), 0 violations, " << elapsed
        << " s (limit 60 s)";
    return msg.str();
}

// 3. g(M) + g(M^c) = 2k for every subset of every fixture and of 200
//    random codes with n <= 8. Exact equality.
std::string criterion_cleaning_identity() {
    std::size_t checks = 0;
    auto sweep = [&](const StabilizerCode& code) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << code.n()); ++mask) {
            std::vector<std::uint32_t> idx;
            for (std::uint32_t i = 0; i < code.n(); ++i) {
                if (mask >> i & 1) idx.push_back(i);
            }
            const CleaningIdentityVerdict v =
                check_cleaning_identity(code, QubitSet(code.n(), std::move(idx)));
            require(v.identity_ok, "cleaning identity falsified");
            require(v.restriction_dim_ok, "restriction dimension formula falsified");
            ++checks;
        }
    };
    for (const char* name :
         {"four_two_two", "five_one_three", "steane", "shor", "free_3", "trivial_k0_5"}) {
        sweep(load_fixture(name));
    }
    SplitMix64 master(7);
    for (int i = 0; i < 200; ++i) {
        const std::uint32_t p = kPrimes[i % 3];
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(master.below(8));
        const std::uint32_t k = static_cast<std::uint32_t>(master.below(n + 1));
        sweep(random_code({Prime(p), n, k, master.next()}));
    }
    return std::to_string(checks) + " subset checks, all exact";
}

// 4. Every erasure of at most d-1 qudits of every fixture is correctable,
//    exhaustively, and has g(E) = 0.
std::string criterion_distance_correctability() {
    std::size_t checked = 0;
    for (const char* name :
         {"four_two_two", "five_one_three", "steane", "shor", "free_3", "trivial_k0_5"}) {
        const StabilizerCode code = load_fixture(name);
        const Distance d = distance(code);
        if (d.no_logicals()) continue;
        for (const QubitSet& e : subsets_of_size_at_most(code.n(), *d.value - 1)) {
            require(is_correctable(code, e).correctable,
                    std::string(name) + ": erasure not correctable");
            require(g(code, e) == 0, std::string(name) + ": g nonzero on correctable set");
            ++checked;
        }
    }
    return std::to_string(checked) + " erasures, all correctable with g = 0";
}

// 5. The two-disjoint lemma is tight on five_one_three (A = {1,2},
//    B = {3,4}) and four_two_two (A = {1}, B = {2}).
std::string criterion_two_disjoint() {
    {
        const StabilizerCode code = load_fixture("five_one_three");
        const TwoDisjointVerdict v =
            check_two_disjoint(code, QubitSet(5, {0, 1}), QubitSet(5, {2, 3}));
        require(v.applicable && v.pass, "five_one_three: lemma hypothesis or bound failed");
        require(v.k == v.c_size, "five_one_three: expected tightness k = |C|");
        require(v.g_identity_ok && *v.g_a_complement == 2, "five_one_three: g(A^c) != 2k");
    }
    {
        const StabilizerCode code = load_fixture("four_two_two");
        const TwoDisjointVerdict v = check_two_disjoint(code, QubitSet(4, {0}), QubitSet(4, {1}));
        require(v.applicable && v.pass, "four_two_two: lemma hypothesis or bound failed");
        require(v.k == v.c_size, "four_two_two: expected tightness k = |C|");
        require(v.g_identity_ok && *v.g_a_complement == 4, "four_two_two: g(A^c) != 2k");
    }
    return "both pinned instances pass with k = |C|";
}

// 6. The weight-ordered search equals the full 4^n brute force on 200+
//    random codes with p = 2, n <= 5.
std::string criterion_oracle_equivalence() {
    SplitMix64 master(11);
    std::size_t codes = 0;
    for (int i = 0; i < 210; ++i) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(master.below(5));
        const std::uint32_t k = static_cast<std::uint32_t>(master.below(n + 1));
        const StabilizerCode code = random_code({Prime(2), n, k, master.next()});
        const auto expected = oracle::brute_distance(oracle::facts(code));
        const Distance got = distance(code);
        if (expected) {
            require(got.value && *got.value == *expected, "distance disagrees with brute force");
        } else {
            require(got.no_logicals(), "search found a logical the oracle says cannot exist");
        }
        ++codes;
    }
    return std::to_string(codes) + " random codes, exact match";
}

// 7. Rank-nullity, Grassmann, double complement, and dim S + dim S^perp
//    = 2n, each on 1000+ random instances.
std::string criterion_linalg_invariants() {
    SplitMix64 rng(13);
    auto random_matrix = [&](Prime p, std::size_t rows, std::size_t cols) {
        MatrixFp m(p, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                m.set(r, c, static_cast<std::uint32_t>(rng.below(p.value())));
            }
        }
        return m;
    };

    for (int i = 0; i < 1000; ++i) {
        const Prime p(kPrimes[i % 3]);
        const MatrixFp m = random_matrix(p, 1 + rng.below(8), 1 + rng.below(10));
        require(rref(m).rank + nullspace(m).dim() == m.cols(), "rank-nullity violated");
    }

    for (int i = 0; i < 1000; ++i) {
        const Prime p(kPrimes[i % 3]);
        const std::size_t ambient = 1 + rng.below(10);
        const Subspace a = Subspace::from_rows(random_matrix(p, rng.below(ambient + 1), ambient));
        const Subspace b = Subspace::from_rows(random_matrix(p, rng.below(ambient + 1), ambient));
        require(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() == a.dim() + b.dim(),
                "Grassmann identity violated");
    }

    for (int i = 0; i < 1000; ++i) {
        const Prime p(kPrimes[i % 3]);
        const std::size_t n = 1 + rng.below(6);
        const Subspace s = Subspace::from_rows(random_matrix(p, rng.below(2 * n + 1), 2 * n));
        const Subspace sp = sym_orth(s);
        require(s.dim() + sp.dim() == 2 * n, "complement dimension violated");
        require(sym_orth(sp) == s, "double complement violated");
    }

    for (int i = 0; i < 1000; ++i) {
        const std::uint32_t p = kPrimes[i % 3];
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(8));
        const std::uint32_t k = static_cast<std::uint32_t>(rng.below(n + 1));
        const StabilizerCode code = random_code({Prime(p), n, k, rng.next()});
        require(code.stabilizer().dim() + code.orthogonal().dim() == 2 * code.n(),
                "dim S + dim S^perp != 2n");
    }
    return "4 invariant families x 1000 instances";
}

// 8. cmd_random with a fixed seed is byte-identical across runs and across
//    the generic and bit-packed backends.
std::string criterion_determinism() {
    const std::string base = "random --p 2 --n 6 --k 2 --seed 12345";
    const std::string a = run_cli(base);
    const std::string b = run_cli(base);
    require(!a.empty() && a == b, "repeated runs differ");
    const std::string generic = run_cli(base + " --backend generic");
    const std::string packed = run_cli(base + " --backend bitpacked");
    require(generic == packed, "backends differ");
    require(generic == a, "explicit backend differs from auto");

    const std::string p5 = run_cli("random --p 5 --n 4 --k 1 --seed 99");
    require(p5 == run_cli("random --p 5 --n 4 --k 1 --seed 99"), "p = 5 runs differ");
    return "byte-identical across runs and backends";
}

// 9. parse(serialize(code)) == code on every fixture and 500 random codes.
std::string criterion_round_trip() {
    for (const char* name :
         {"four_two_two", "five_one_three", "steane", "shor", "free_3", "trivial_k0_5"}) {
        const StabilizerCode code = load_fixture(name);
        require(parse_code(serialize_code(code)) == code, std::string(name) + ": round trip broke");
    }
    SplitMix64 master(17);
    for (int i = 0; i < 500; ++i) {
        const std::uint32_t p = kPrimes[i % 3];
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(master.below(8));
        const std::uint32_t k = static_cast<std::uint32_t>(master.below(n + 1));
        const StabilizerCode code = random_code({Prime(p), n, k, master.next()});
        require(parse_code(serialize_code(code)) == code, "random code round trip broke");
    }
    return "6 fixtures + 500 random codes, identity";
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        std::function<std::string()> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "catalog correctness", criterion_catalog},
        {2, "singleton property suite", criterion_singleton_suite},
        {3, "cleaning identity", criterion_cleaning_identity},
        {4, "distance implies correctability", criterion_distance_correctability},
        {5, "two-disjoint lemma tightness", criterion_two_disjoint},
        {6, "distance oracle equivalence", criterion_oracle_equivalence},
        {7, "linear algebra invariants", criterion_linalg_invariants},
        {8, "generator determinism", criterion_determinism},
        {9, "serialization round trip", criterion_round_trip},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        try {
            const std::string detail = c.fn();
            std::cout << "criterion " << c.number << " (" << c.name << "): PASS (" << detail
                      << ")\n";
        } catch (const std::exception& e) {
            ++failed;
            std::cout << "criterion " << c.number << " (" << c.name << "): FAIL (" << e.what()
                      << ")\n";
        }
        std::cout.flush();
    }
    std::cout << "acceptance: " << (criteria.size() - failed) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
