#include "stabkit/code.hpp"

#include <algorithm>

#include "stabkit/generate.hpp"

namespace stabkit {

StabilizerCode::StabilizerCode(Prime p, std::size_t n, Subspace s, Subspace s_perp)
    : p_(p), n_(n), stabilizer_(std::move(s)), orthogonal_(std::move(s_perp)) {}

StabilizerCode StabilizerCode::make(Prime p, std::size_t n,
                                    const std::vector<PauliVector>& generators,
                                    Backend backend) {
    for (const PauliVector& g : generators) {
        if (g.modulus() != p) throw MismatchError("generator modulus does not match code");
        if (g.n() != n) throw MismatchError("generator length does not match n");
    }
    // Pairwise commutation of the inputs is equivalent to isotropy of the
    // span, and it lets the error name the offending pair.
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            FieldElement f = sym_form(generators[i], generators[j]);
            if (!f.is_zero()) {
                throw NotIsotropicError("generators " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1) +
                                            " do not commute (symplectic form = " +
                                            std::to_string(f.value()) + ")",
                                        i, j);
            }
        }
    }

    MatrixFp rows(p, generators.size(), 2 * n);
    for (std::size_t r = 0; r < generators.size(); ++r) {
        const auto flat = generators[r].flat();
        std::copy(flat.begin(), flat.end(), rows.row(r).begin());
    }
    Subspace s = Subspace::from_rows(rows, backend);
    if (s.dim() > n) {
        throw InternalError("isotropic subspace came out larger than n");
    }
    Subspace s_perp = sym_orth(s, backend);
    return StabilizerCode(p, n, std::move(s), std::move(s_perp));
}

std::size_t logical_space_dim(const StabilizerCode& code) {
    const std::size_t dim = code.orthogonal().dim() - code.stabilizer().dim();
    if (dim != 2 * code.k()) {
        throw InternalError("dim(S^perp/S) disagrees with 2k");
    }
    return dim;
}

CorrectabilityResult is_correctable(const StabilizerCode& code, const QubitSet& e) {
    if (e.n() != code.n()) throw MismatchError("qudit set size does not match code");
    Subspace captured = subspace_intersect(code.orthogonal(), support_subspace(e, code.modulus()));
    for (std::size_t r = 0; r < captured.dim(); ++r) {
        if (!contains(code.stabilizer(), captured.basis().row(r))) {
            return {false, PauliVector::from_flat(code.modulus(), captured.basis().row(r))};
        }
    }
    return {true, std::nullopt};
}

std::size_t g(const StabilizerCode& code, const QubitSet& m) {
    if (m.n() != code.n()) throw MismatchError("qudit set size does not match code");
    Subspace v_m = support_subspace(m, code.modulus());
    const std::size_t top = subspace_intersect(code.orthogonal(), v_m).dim();
    const std::size_t bottom = subspace_intersect(code.stabilizer(), v_m).dim();
    return top - bottom;
}

CleaningIdentityVerdict check_cleaning_identity(const StabilizerCode& code, const QubitSet& m) {
    const QubitSet mc = m.complement();
    Subspace v_m = support_subspace(m, code.modulus());
    Subspace v_mc = support_subspace(mc, code.modulus());

    const std::size_t sperp_vm = subspace_intersect(code.orthogonal(), v_m).dim();
    const std::size_t sperp_vmc = subspace_intersect(code.orthogonal(), v_mc).dim();
    const std::size_t s_m = subspace_intersect(code.stabilizer(), v_m).dim();
    const std::size_t s_mc = subspace_intersect(code.stabilizer(), v_mc).dim();

    CleaningIdentityVerdict v{};
    v.g_m = sperp_vm - s_m;
    v.g_mc = sperp_vmc - s_mc;
    v.two_k = 2 * code.k();
    v.identity_ok = v.g_m + v.g_mc == v.two_k;
    v.dim_s_m = s_m;
    v.dim_s_mc = s_mc;
    v.dim_s0 = code.stabilizer().dim() - s_m - s_mc;
    v.dim_sperp_vm = sperp_vm;
    v.restriction_dim_ok = sperp_vm == 2 * m.size() - s_m - v.dim_s0;
    v.pass = v.identity_ok && v.restriction_dim_ok;
    return v;
}

CleanResult clean(const StabilizerCode& code, const PauliVector& logical, const QubitSet& m) {
    if (logical.n() != code.n() || logical.modulus() != code.modulus()) {
        throw MismatchError("logical vector does not match code");
    }
    if (m.n() != code.n()) throw MismatchError("qudit set size does not match code");
    const auto logical_flat = logical.flat();
    if (!contains(code.orthogonal(), logical_flat)) {
        throw NotLogicalError("vector is not in S^perp");
    }

    // Solve restrict(s, M) = restrict(logical, M) for s in S, working only
    // over the coordinates of M (both x and z blocks).
    const std::size_t n = code.n();
    const auto& members = m.members();
    const std::size_t width = 2 * members.size();
    const Subspace& s = code.stabilizer();

    MatrixFp restricted(code.modulus(), s.dim(), width);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        for (std::size_t j = 0; j < members.size(); ++j) {
            restricted.set(r, j, s.basis().at(r, members[j]));
            restricted.set(r, members.size() + j, s.basis().at(r, n + members[j]));
        }
    }
    std::vector<std::uint32_t> target(width);
    for (std::size_t j = 0; j < members.size(); ++j) {
        target[j] = logical.x(members[j]);
        target[members.size() + j] = logical.z(members[j]);
    }

    auto coeffs = solve_row_combination(restricted, target);
    if (!coeffs) {
        throw NotCleanableError("no stabilizer element matches the logical on the region");
    }

    PauliVector s_elem(code.modulus(), n);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if ((*coeffs)[r] == 0) continue;
        s_elem = s_elem + PauliVector::from_flat(code.modulus(), s.basis().row(r)).scaled((*coeffs)[r]);
    }
    return {logical - s_elem, s_elem};
}

TwoDisjointVerdict check_two_disjoint(const StabilizerCode& code, const QubitSet& a,
                                      const QubitSet& b) {
    if (a.intersects(b)) throw DisjointnessError("regions A and B overlap");

    TwoDisjointVerdict v{};
    v.correctable_a = is_correctable(code, a).correctable;
    v.correctable_b = is_correctable(code, b).correctable;
    v.applicable = v.correctable_a && v.correctable_b;
    v.k = code.k();
    v.c_size = code.n() - a.size() - b.size();
    v.g_identity_ok = true;
    if (v.applicable) {
        v.pass = v.k <= v.c_size;
        v.g_a_complement = g(code, a.complement());
        v.g_identity_ok = *v.g_a_complement == 2 * code.k();
    } else {
        v.pass = true;  // hypothesis unmet
    }
    return v;
}

namespace {

std::uint64_t binomial_capped(std::size_t n, std::size_t w, std::uint64_t cap) {
    std::uint64_t b = 1;
    for (std::size_t i = 0; i < w; ++i) {
        b = b * (n - i) / (i + 1);
        if (b > cap) return cap + 1;
    }
    return b;
}

}  // namespace

DistanceCorrectabilityVerdict check_distance_correctability(
    const StabilizerCode& code, const DistanceCorrectabilityOptions& opt) {
    DistanceCorrectabilityVerdict v{};
    Distance d = distance(code, opt.distance);
    if (d.no_logicals()) {
        v.pass = true;
        v.vacuous = true;
        v.exhaustive = true;
        return v;
    }
    const std::size_t n = code.n();
    const std::size_t limit = *d.value - 1;

    std::uint64_t total = 0;
    for (std::size_t w = 0; w <= limit && total <= opt.max_sets; ++w) {
        total += binomial_capped(n, w, opt.max_sets);
    }

    auto try_set = [&](const QubitSet& e) {
        ++v.sets_checked;
        CorrectabilityResult r = is_correctable(code, e);
        if (!r.correctable) {
            v.counterexample = e;
            v.witness = r.witness;
            return false;
        }
        return true;
    };

    if (total <= opt.max_sets) {
        v.exhaustive = true;
        for (std::size_t w = 0; w <= limit; ++w) {
            std::vector<std::uint32_t> comb(w);
            for (std::size_t i = 0; i < w; ++i) comb[i] = static_cast<std::uint32_t>(i);
            while (true) {
                if (!try_set(QubitSet(n, comb))) {
                    v.pass = false;
                    return v;
                }
                // next lexicographic w-combination of [0, n)
                std::size_t i = w;
                while (i > 0 && comb[i - 1] == n - w + i - 1) --i;
                if (i == 0) break;
                ++comb[i - 1];
                for (std::size_t j = i; j < w; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
    } else {
        v.exhaustive = false;
        SplitMix64 rng(opt.sample_seed);
        for (std::uint64_t s = 0; s < opt.max_sets; ++s) {
            const std::size_t w = 1 + static_cast<std::size_t>(rng.below(limit));
            // Partial Fisher-Yates: first w entries of a shuffled [0, n).
            std::vector<std::uint32_t> pool(n);
            for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);
            for (std::size_t i = 0; i < w; ++i) {
                std::swap(pool[i], pool[i + rng.below(n - i)]);
            }
            pool.resize(w);
            if (!try_set(QubitSet(n, std::move(pool)))) {
                v.pass = false;
                return v;
            }
        }
    }
    v.pass = true;
    return v;
}

AnalysisReport check_singleton(const StabilizerCode& code, const DistanceOptions& opt) {
    AnalysisReport report{};
    report.n = code.n();
    report.k = code.k();
    report.dist = distance(code, opt);
    if (report.dist.no_logicals()) {
        report.vacuous = true;
        report.bound_holds = true;
        return report;
    }
    const std::int64_t n = static_cast<std::int64_t>(code.n());
    const std::int64_t k = static_cast<std::int64_t>(code.k());
    const std::int64_t d = static_cast<std::int64_t>(*report.dist.value);
    report.bound_holds = k + 2 * (d - 1) <= n;
    report.slack = n - k - 2 * (d - 1);
    if (n >= 2 * (d - 1)) {
        const auto w = static_cast<std::uint32_t>(d - 1);
        report.region_a = QubitSet::range(code.n(), 0, w);
        report.region_b = QubitSet::range(code.n(), w, w);
        report.two_disjoint = check_two_disjoint(code, *report.region_a, *report.region_b);
    }
    return report;
}

bool SuiteReport::all_pass() const {
    return std::none_of(lines.begin(), lines.end(),
                        [](const LemmaLine& l) { return l.status == LemmaStatus::Fail; });
}

SuiteReport run_lemma_suite(const StabilizerCode& code, const SuiteOptions& opt) {
    SuiteReport report;
    report.n = code.n();
    report.k = code.k();

    auto add = [&](std::string name, LemmaStatus status, std::string detail) {
        report.lines.push_back({std::move(name), status, std::move(detail)});
    };

    // dim(S^perp/S) = 2k
    {
        const std::size_t dim = code.orthogonal().dim() - code.stabilizer().dim();
        const bool ok = dim == 2 * code.k() &&
                        code.stabilizer().dim() + code.orthogonal().dim() == 2 * code.n() &&
                        subspace_leq(code.stabilizer(), code.orthogonal());
        add("logical_dim", ok ? LemmaStatus::Pass : LemmaStatus::Fail,
            "dim(S^perp/S)=" + std::to_string(dim) + " 2k=" + std::to_string(2 * code.k()));
    }

    std::optional<Distance> dist;
    try {
        dist = distance(code, opt.distance);
        report.dist = dist;
    } catch (const ResourceLimitError& e) {
        report.resource_limited = true;
        report.distance_lower_bound = e.lower_bound();
    }

    // |E| <= d-1 => E correctable
    if (!dist) {
        add("distance_correctability", LemmaStatus::Limit,
            "d > " + std::to_string(*report.distance_lower_bound) + " (budget exhausted)");
    } else if (dist->no_logicals()) {
        add("distance_correctability", LemmaStatus::Vacuous, "k=0, no distance");
    } else {
        DistanceCorrectabilityOptions dc;
        dc.distance = opt.distance;
        dc.max_sets = opt.correctability_max_sets;
        dc.sample_seed = opt.seed;
        DistanceCorrectabilityVerdict v = check_distance_correctability(code, dc);
        std::string detail = std::to_string(v.sets_checked) + " sets" +
                             (v.exhaustive ? " (exhaustive)" : " (sampled)");
        add("distance_correctability", v.pass ? LemmaStatus::Pass : LemmaStatus::Fail,
            std::move(detail));
    }

    // g(M) + g(M^c) = 2k
    {
        bool ok = true;
        std::string detail;
        if (code.n() <= opt.cleaning_exhaustive_max_n) {
            const std::uint64_t count = std::uint64_t(1) << code.n();
            for (std::uint64_t mask = 0; mask < count && ok; ++mask) {
                std::vector<std::uint32_t> idx;
                for (std::size_t i = 0; i < code.n(); ++i) {
                    if (mask >> i & 1) idx.push_back(static_cast<std::uint32_t>(i));
                }
                QubitSet m(code.n(), std::move(idx));
                CleaningIdentityVerdict v = check_cleaning_identity(code, m);
                if (!v.pass) {
                    ok = false;
                    detail = "falsified at M with g=" + std::to_string(v.g_m) +
                             " g_c=" + std::to_string(v.g_mc) + " 2k=" + std::to_string(v.two_k);
                }
            }
            if (ok) detail = "all " + std::to_string(count) + " subsets";
        } else {
            SplitMix64 rng(opt.seed);
            for (std::size_t s = 0; s < opt.cleaning_samples && ok; ++s) {
                std::vector<std::uint32_t> idx;
                for (std::size_t i = 0; i < code.n(); ++i) {
                    if (rng.below(2)) idx.push_back(static_cast<std::uint32_t>(i));
                }
                QubitSet m(code.n(), std::move(idx));
                CleaningIdentityVerdict v = check_cleaning_identity(code, m);
                if (!v.pass) {
                    ok = false;
                    detail = "falsified at sampled M";
                }
            }
            if (ok) detail = std::to_string(opt.cleaning_samples) + " sampled subsets";
        }
        add("cleaning_identity", ok ? LemmaStatus::Pass : LemmaStatus::Fail, std::move(detail));
    }

    // two disjoint correctable sets, at the canonical Singleton witness regions
    if (!dist) {
        add("two_disjoint", LemmaStatus::Limit, "needs d; budget exhausted");
    } else if (dist->no_logicals()) {
        add("two_disjoint", LemmaStatus::Vacuous, "k=0, no distance");
    } else {
        const std::size_t w = *dist->value - 1;
        if (2 * w <= code.n()) {
            QubitSet a = QubitSet::range(code.n(), 0, static_cast<std::uint32_t>(w));
            QubitSet b = QubitSet::range(code.n(), static_cast<std::uint32_t>(w),
                                         static_cast<std::uint32_t>(w));
            TwoDisjointVerdict v = check_two_disjoint(code, a, b);
            const bool ok = v.pass && v.g_identity_ok;
            std::string detail = "k=" + std::to_string(v.k) + " |C|=" + std::to_string(v.c_size);
            if (v.g_a_complement) detail += " g(A^c)=" + std::to_string(*v.g_a_complement);
            add("two_disjoint", ok ? LemmaStatus::Pass : LemmaStatus::Fail, std::move(detail));
        } else {
            add("two_disjoint", LemmaStatus::Vacuous, "n < 2(d-1), no disjoint witness regions");
        }
    }

    // k + 2(d-1) <= n
    if (!dist) {
        add("singleton", LemmaStatus::Limit,
            "d > " + std::to_string(*report.distance_lower_bound) + " (budget exhausted)");
    } else if (dist->no_logicals()) {
        add("singleton", LemmaStatus::Vacuous, "k=0, bound has no content");
    } else {
        const std::int64_t n = static_cast<std::int64_t>(code.n());
        const std::int64_t k = static_cast<std::int64_t>(code.k());
        const std::int64_t d = static_cast<std::int64_t>(*dist->value);
        const bool ok = k + 2 * (d - 1) <= n;
        add("singleton", ok ? LemmaStatus::Pass : LemmaStatus::Fail,
            "k+2(d-1)=" + std::to_string(k + 2 * (d - 1)) + " n=" + std::to_string(n) +
                " slack=" + std::to_string(n - k - 2 * (d - 1)));
    }

    return report;
}

}  // namespace stabkit
