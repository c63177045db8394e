// stabkit: analyze stabilizer codes as isotropic subspaces of F_p^{2n}.
//
// Subcommands: analyze, erasure, gprofile, clean, random, verify.
// Exit codes: 0 pass/success, 1 falsification or verification failure,
// 2 usage or parse errors, 3 enumeration budget exhausted.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabkit/code.hpp"
#include "stabkit/generate.hpp"
#include "stabkit/io.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CommonOpts {
    bool json = false;
    std::string backend = "auto";
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_flag("--json", opts.json, "emit one JSON object instead of text");
    sub->add_option("--backend", opts.backend, "row-reduction backend")
        ->check(CLI::IsMember({"auto", "generic", "bitpacked"}))
        ->capture_default_str();
}

void apply_backend(const CommonOpts& opts) {
    if (opts.backend == "generic") {
        stabkit::set_default_backend(stabkit::Backend::Generic);
    } else if (opts.backend == "bitpacked") {
        stabkit::set_default_backend(stabkit::Backend::Bitpacked);
    }
}

stabkit::StabilizerCode load_code(const std::string& path) {
    if (path == "-") return stabkit::parse_code(std::cin);
    std::ifstream in(path);
    if (!in) throw stabkit::Error("cannot open '" + path + "'");
    return stabkit::parse_code(in);
}

std::string render_vector(const stabkit::PauliVector& v) {
    std::string out = stabkit::format_flat_row(v);
    if (v.modulus().value() == 2) out += " = " + v.pauli_string();
    out += " (weight " + std::to_string(stabkit::wt(v)) + ")";
    return out;
}

ordered_json vector_json(const stabkit::PauliVector& v) {
    ordered_json j;
    j["row"] = v.flat();
    j["pauli"] = v.modulus().value() == 2 ? ordered_json(v.pauli_string()) : ordered_json(nullptr);
    j["weight"] = stabkit::wt(v);
    return j;
}

ordered_json qubit_set_json(const stabkit::QubitSet& s) {
    std::vector<std::uint32_t> one_based;
    one_based.reserve(s.size());
    for (std::uint32_t i : s.members()) one_based.push_back(i + 1);
    return ordered_json(one_based);
}

const char* status_word(stabkit::LemmaStatus s) {
    switch (s) {
        case stabkit::LemmaStatus::Pass: return "PASS";
        case stabkit::LemmaStatus::Fail: return "FAIL";
        case stabkit::LemmaStatus::Vacuous: return "VACUOUS";
        default: return "LIMIT";
    }
}

const char* status_key(stabkit::LemmaStatus s) {
    switch (s) {
        case stabkit::LemmaStatus::Pass: return "pass";
        case stabkit::LemmaStatus::Fail: return "fail";
        case stabkit::LemmaStatus::Vacuous: return "vacuous";
        default: return "limit";
    }
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeOpts {
    CommonOpts common;
    std::string file;
    std::uint32_t max_weight = 0;
};

int run_analyze(const AnalyzeOpts& opts) {
    apply_backend(opts.common);
    const stabkit::StabilizerCode code = load_code(opts.file);

    std::optional<stabkit::AnalysisReport> report;
    std::optional<std::uint32_t> lower_bound;
    try {
        report = stabkit::check_singleton(code, {opts.max_weight});
    } catch (const stabkit::ResourceLimitError& e) {
        lower_bound = e.lower_bound();
    }

    if (opts.common.json) {
        ordered_json j;
        j["n"] = code.n();
        j["k"] = code.k();
        if (report && report->dist.value) {
            j["d"] = *report->dist.value;
            j["slack"] = *report->slack;
        } else {
            j["d"] = nullptr;
            j["slack"] = nullptr;
            if (lower_bound) j["d_lower_bound"] = *lower_bound;
        }
        j["witness"] = report && report->dist.witness ? vector_json(*report->dist.witness)
                                                      : ordered_json(nullptr);
        ordered_json verdicts;
        if (report) {
            verdicts["singleton"] = report->vacuous ? "vacuous"
                                    : report->bound_holds ? "pass"
                                                          : "fail";
            if (report->two_disjoint) {
                const auto& td = *report->two_disjoint;
                verdicts["two_disjoint"] = td.pass && td.g_identity_ok ? "pass" : "fail";
            }
        } else {
            verdicts["singleton"] = "limit";
        }
        j["verdicts"] = verdicts;
        std::cout << j.dump(2) << "\n";
    } else {
        std::string line = "n=" + std::to_string(code.n()) + " k=" + std::to_string(code.k());
        if (!report) {
            line += " d>" + std::to_string(*lower_bound) + " slack=unknown";
        } else if (report->dist.no_logicals()) {
            line += " d=NoLogicals slack=vacuous";
        } else {
            line += " d=" + std::to_string(*report->dist.value) +
                    " slack=" + std::to_string(*report->slack);
        }
        std::cout << line << "\n";
        if (report && report->dist.witness) {
            std::cout << "witness: " << render_vector(*report->dist.witness) << "\n";
        }
    }

    if (!report) return kExitResource;
    if (!report->bound_holds) return kExitFail;
    if (report->two_disjoint && !(report->two_disjoint->pass && report->two_disjoint->g_identity_ok)) {
        return kExitFail;
    }
    return kExitPass;
}

// --- erasure ---------------------------------------------------------------

struct ErasureOpts {
    CommonOpts common;
    std::string file;
    std::string set;
};

int run_erasure(const ErasureOpts& opts) {
    apply_backend(opts.common);
    const stabkit::StabilizerCode code = load_code(opts.file);
    const stabkit::QubitSet e = stabkit::parse_qubit_set(opts.set, code.n());
    const stabkit::CorrectabilityResult r = stabkit::is_correctable(code, e);
    const std::size_t ge = stabkit::g(code, e);

    if (opts.common.json) {
        ordered_json j;
        j["n"] = code.n();
        j["k"] = code.k();
        j["set"] = qubit_set_json(e);
        j["correctable"] = r.correctable;
        j["g"] = ge;
        j["witness"] = r.witness ? vector_json(*r.witness) : ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "correctable: " << (r.correctable ? "yes" : "no") << "\n";
        if (r.witness) std::cout << "witness: " << render_vector(*r.witness) << "\n";
        std::cout << "g=" << ge << "\n";
    }
    return kExitPass;
}

// --- gprofile --------------------------------------------------------------

struct GprofileOpts {
    CommonOpts common;
    std::string file;
    std::string set;
    bool all = false;
    std::size_t cap = 16;
};

int run_gprofile(const GprofileOpts& opts) {
    apply_backend(opts.common);
    const stabkit::StabilizerCode code = load_code(opts.file);

    if (!opts.all && opts.set.empty()) {
        throw stabkit::Error("gprofile needs --set SPEC or --all");
    }
    std::vector<stabkit::QubitSet> sets;
    if (opts.all) {
        if (code.n() > opts.cap) {
            throw stabkit::CapExceededError("--all sweeps 2^n subsets; n = " +
                                            std::to_string(code.n()) + " exceeds the cap of " +
                                            std::to_string(opts.cap));
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << code.n()); ++mask) {
            std::vector<std::uint32_t> idx;
            for (std::size_t i = 0; i < code.n(); ++i) {
                if (mask >> i & 1) idx.push_back(static_cast<std::uint32_t>(i));
            }
            sets.emplace_back(code.n(), std::move(idx));
        }
    } else {
        sets.push_back(stabkit::parse_qubit_set(opts.set, code.n()));
    }

    bool all_ok = true;
    ordered_json entries = ordered_json::array();
    for (const stabkit::QubitSet& m : sets) {
        const std::size_t gm = stabkit::g(code, m);
        const std::size_t gc = stabkit::g(code, m.complement());
        const std::size_t two_k = 2 * code.k();
        const bool ok = gm + gc == two_k;
        all_ok = all_ok && ok;
        if (opts.common.json) {
            ordered_json entry;
            entry["m"] = qubit_set_json(m);
            entry["g"] = gm;
            entry["g_c"] = gc;
            entry["sum"] = gm + gc;
            entry["two_k"] = two_k;
            entry["ok"] = ok;
            entries.push_back(std::move(entry));
        } else {
            std::cout << "M=" << stabkit::format_qubit_set(m) << " g=" << gm << " g_c=" << gc
                      << " sum=" << gm + gc << " 2k=" << two_k << (ok ? " OK" : " FAIL") << "\n";
        }
    }

    if (opts.common.json) {
        ordered_json j;
        j["n"] = code.n();
        j["k"] = code.k();
        j["entries"] = std::move(entries);
        j["all_ok"] = all_ok;
        std::cout << j.dump(2) << "\n";
    }
    return all_ok ? kExitPass : kExitFail;
}

// --- clean -----------------------------------------------------------------

struct CleanOpts {
    CommonOpts common;
    std::string file;
    std::string logical;
    std::string erase;
};

int run_clean(const CleanOpts& opts) {
    apply_backend(opts.common);
    const stabkit::StabilizerCode code = load_code(opts.file);
    const stabkit::PauliVector logical =
        stabkit::parse_pauli_vector(opts.logical, code.modulus(), code.n());
    const stabkit::QubitSet m = stabkit::parse_qubit_set(opts.erase, code.n());

    const stabkit::CleanResult r = stabkit::clean(code, logical, m);

    if (opts.common.json) {
        ordered_json j;
        j["n"] = code.n();
        j["k"] = code.k();
        j["cleaned"] = vector_json(r.cleaned);
        j["stabilizer"] = vector_json(r.stabilizer_element);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "cleaned: " << render_vector(r.cleaned) << "\n";
        std::cout << "stabilizer: " << render_vector(r.stabilizer_element) << "\n";
    }
    return kExitPass;
}

// --- random ----------------------------------------------------------------

struct RandomOpts {
    CommonOpts common;
    std::uint32_t p = 2;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t seed = 0;
    std::uint32_t rounds = 0;
    std::string out;
    bool analyze = false;
    std::uint32_t max_weight = 0;
};

int run_random(const RandomOpts& opts) {
    apply_backend(opts.common);
    stabkit::GeneratorConfig cfg{stabkit::Prime(opts.p), opts.n, opts.k, opts.seed, opts.rounds};
    const stabkit::StabilizerCode code = stabkit::random_code(cfg);
    const std::string text = stabkit::serialize_code(code);

    if (!opts.out.empty()) {
        std::ofstream f(opts.out, std::ios::binary);
        if (!f) throw stabkit::Error("cannot write '" + opts.out + "'");
        f << text;
    }

    std::optional<stabkit::Distance> dist;
    if (opts.analyze) dist = stabkit::distance(code, {opts.max_weight});

    if (opts.common.json) {
        ordered_json j;
        j["n"] = code.n();
        j["k"] = code.k();
        j["path"] = opts.out.empty() ? ordered_json(nullptr) : ordered_json(opts.out);
        if (opts.out.empty()) j["code"] = text;
        if (dist) j["d"] = dist->value ? ordered_json(*dist->value) : ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
        return kExitPass;
    }

    // The summary goes to stderr when the code itself occupies stdout.
    std::ostream& info = opts.out.empty() ? std::cerr : std::cout;
    if (opts.out.empty()) std::cout << text;
    info << "n=" << code.n() << " k=" << code.k();
    if (dist) {
        if (dist->value) info << " d=" << *dist->value;
        else info << " d=NoLogicals";
    }
    info << "\n";
    return kExitPass;
}

// --- verify ----------------------------------------------------------------

struct VerifyOpts {
    CommonOpts common;
    std::string file;
    std::uint64_t random_count = 0;
    std::uint32_t p = 2;
    std::uint32_t n = 0;
    std::optional<std::uint32_t> k;
    std::uint64_t seed = 0;
    std::uint32_t rounds = 0;
    std::uint32_t max_weight = 0;
};

int suite_exit(bool any_fail, bool any_limit) {
    if (any_fail) return kExitFail;
    if (any_limit) return kExitResource;
    return kExitPass;
}

int run_verify_file(const VerifyOpts& opts) {
    const stabkit::StabilizerCode code = load_code(opts.file);
    stabkit::SuiteOptions so;
    so.distance.max_weight = opts.max_weight;
    so.seed = opts.seed;
    const stabkit::SuiteReport report = stabkit::run_lemma_suite(code, so);

    if (opts.common.json) {
        ordered_json j;
        j["n"] = report.n;
        j["k"] = report.k;
        if (report.dist && report.dist->value) j["d"] = *report.dist->value;
        else j["d"] = nullptr;
        ordered_json verdicts;
        for (const auto& line : report.lines) {
            ordered_json v;
            v["status"] = status_key(line.status);
            v["detail"] = line.detail;
            verdicts[line.name] = std::move(v);
        }
        j["verdicts"] = std::move(verdicts);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& line : report.lines) {
            std::cout << line.name << ": " << status_word(line.status);
            if (!line.detail.empty()) std::cout << " (" << line.detail << ")";
            std::cout << "\n";
        }
    }
    return suite_exit(!report.all_pass(), report.resource_limited);
}

int run_verify_random(const VerifyOpts& opts) {
    // Per-code configs come off one master stream: when --k is absent each
    // code draws k in [0, n], then its own generator seed.
    stabkit::SplitMix64 master(opts.seed);
    bool any_fail = false, any_limit = false;
    std::map<std::string, std::map<std::string, std::uint64_t>> tally;
    ordered_json failures = ordered_json::array();

    for (std::uint64_t i = 0; i < opts.random_count; ++i) {
        const std::uint32_t k =
            opts.k ? *opts.k : static_cast<std::uint32_t>(master.below(opts.n + 1));
        const std::uint64_t code_seed = master.next();
        stabkit::GeneratorConfig cfg{stabkit::Prime(opts.p), opts.n, k, code_seed, opts.rounds};
        const stabkit::StabilizerCode code = stabkit::random_code(cfg);

        stabkit::SuiteOptions so;
        so.distance.max_weight = opts.max_weight;
        so.seed = code_seed;
        const stabkit::SuiteReport report = stabkit::run_lemma_suite(code, so);

        any_limit = any_limit || report.resource_limited;
        for (const auto& line : report.lines) {
            ++tally[line.name][status_key(line.status)];
            if (line.status == stabkit::LemmaStatus::Fail) {
                any_fail = true;
                if (opts.common.json) {
                    ordered_json f;
                    f["index"] = i;
                    f["seed"] = code_seed;
                    f["k"] = k;
                    f["lemma"] = line.name;
                    f["detail"] = line.detail;
                    failures.push_back(std::move(f));
                } else {
                    std::cout << "code " << i << " (seed " << code_seed << ", k=" << k
                              << "): " << line.name << " FAIL (" << line.detail << ")\n";
                }
            }
        }
    }

    if (opts.common.json) {
        ordered_json j;
        j["codes"] = opts.random_count;
        j["all_pass"] = !any_fail;
        ordered_json lemmas;
        for (const auto& [name, counts] : tally) {
            lemmas[name] = ordered_json(counts);
        }
        j["verdicts"] = std::move(lemmas);
        j["failures"] = std::move(failures);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [name, counts] : tally) {
            std::cout << name << ":";
            for (const auto& [status, count] : counts) {
                std::cout << " " << count << " " << status;
            }
            std::cout << "\n";
        }
        if (any_fail) {
            std::cout << "FAIL\n";
        } else {
            std::cout << "all " << opts.random_count << " codes pass\n";
        }
    }
    return suite_exit(any_fail, any_limit);
}

int run_verify(const VerifyOpts& opts) {
    apply_backend(opts.common);
    if (opts.random_count > 0) return run_verify_random(opts);
    return run_verify_file(opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabilizer codes as isotropic symplectic subspaces: distance, erasures,\n"
                 "cleaning, and the quantum Singleton bound, over any prime field"};
    app.require_subcommand(1);

    AnalyzeOpts analyze_opts;
    auto* analyze = app.add_subcommand("analyze", "report n, k, d and the Singleton slack");
    analyze->add_option("file", analyze_opts.file, "code file, or - for stdin")->required();
    analyze->add_option("--max-weight", analyze_opts.max_weight,
                        "distance search budget (default: full search)");
    add_common(analyze, analyze_opts.common);

    ErasureOpts erasure_opts;
    auto* erasure = app.add_subcommand("erasure", "decide erasure correctability of a qudit set");
    erasure->add_option("file", erasure_opts.file, "code file, or - for stdin")->required();
    erasure->add_option("--set", erasure_opts.set, "qudit set, e.g. 1,3-5 or empty")->required();
    add_common(erasure, erasure_opts.common);

    GprofileOpts gprofile_opts;
    auto* gprofile = app.add_subcommand("gprofile", "supportable-logical counts g(M), g(M^c)");
    gprofile->add_option("file", gprofile_opts.file, "code file, or - for stdin")->required();
    auto* gset = gprofile->add_option("--set", gprofile_opts.set, "one qudit set");
    auto* gall = gprofile->add_flag("--all", gprofile_opts.all, "sweep every subset of [n]");
    gprofile->add_option("--cap", gprofile_opts.cap, "largest n allowed with --all")
        ->capture_default_str();
    gset->excludes(gall);
    add_common(gprofile, gprofile_opts.common);

    CleanOpts clean_opts;
    auto* cleanc = app.add_subcommand("clean", "move a logical representative off a region");
    cleanc->add_option("file", clean_opts.file, "code file, or - for stdin")->required();
    cleanc->add_option("--logical", clean_opts.logical, "vector: 2n integers or a Pauli string")
        ->required();
    cleanc->add_option("--erase", clean_opts.erase, "region to clear")->required();
    add_common(cleanc, clean_opts.common);

    RandomOpts random_opts;
    auto* randomc = app.add_subcommand("random", "generate a reproducible random code");
    randomc->add_option("--p", random_opts.p, "field characteristic (prime)")->required();
    randomc->add_option("--n", random_opts.n, "qudit count")->required();
    randomc->add_option("--k", random_opts.k, "logical count")->required();
    randomc->add_option("--seed", random_opts.seed, "64-bit seed")->capture_default_str();
    randomc->add_option("--rounds", random_opts.rounds, "transvection rounds (default 5n)");
    randomc->add_option("--out", random_opts.out, "write the code here instead of stdout");
    randomc->add_flag("--analyze", random_opts.analyze, "also run the distance search");
    randomc->add_option("--max-weight", random_opts.max_weight, "distance search budget");
    add_common(randomc, random_opts.common);

    VerifyOpts verify_opts;
    auto* verify = app.add_subcommand("verify", "run the full lemma suite");
    verify->add_option("file", verify_opts.file, "code file, or - for stdin");
    verify->add_option("--random", verify_opts.random_count, "verify this many random codes");
    verify->add_option("--p", verify_opts.p, "field characteristic for --random");
    verify->add_option("--n", verify_opts.n, "qudit count for --random");
    verify->add_option("--k", verify_opts.k, "fix k for --random (default: draw per code)");
    verify->add_option("--seed", verify_opts.seed, "master seed for --random and sampling");
    verify->add_option("--rounds", verify_opts.rounds, "transvection rounds (default 5n)");
    verify->add_option("--max-weight", verify_opts.max_weight, "distance search budget");
    add_common(verify, verify_opts.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*analyze) return run_analyze(analyze_opts);
        if (*erasure) return run_erasure(erasure_opts);
        if (*gprofile) return run_gprofile(gprofile_opts);
        if (*cleanc) return run_clean(clean_opts);
        if (*randomc) return run_random(random_opts);
        if (*verify) {
            if (verify_opts.random_count == 0 && verify_opts.file.empty()) {
                std::cerr << "verify needs a file or --random COUNT\n";
                return kExitUsage;
            }
            if (verify_opts.random_count > 0 && verify_opts.n == 0) {
                std::cerr << "verify --random needs --n\n";
                return kExitUsage;
            }
            return run_verify(verify_opts);
        }
    } catch (const stabkit::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const stabkit::NotLogicalError& e) {
        std::cerr << "not a logical operator: " << e.what() << "\n";
        return kExitFail;
    } catch (const stabkit::NotCleanableError& e) {
        std::cerr << "not cleanable: " << e.what() << "\n";
        return kExitFail;
    } catch (const stabkit::InternalError& e) {
        std::cerr << "internal invariant broken: " << e.what() << "\n";
        return kExitFail;
    } catch (const stabkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
