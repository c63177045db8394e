#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabkit/pauli.hpp"

namespace stabkit {

/// Stabilizer code on n qudits over F_p: an isotropic subspace S of
/// F_p^{2n} with k = n - dim S. Immutable after construction; S^perp is
/// computed once up front.
class StabilizerCode {
  public:
    /// Span the generators, canonicalize, and validate. Dependent or
    /// duplicate generators are fine; the RREF dedupes them. Throws
    /// NotIsotropicError with a witness pair of generator indices when two
    /// generators fail to commute.
    static StabilizerCode make(Prime p, std::size_t n,
                               const std::vector<PauliVector>& generators,
                               Backend backend = Backend::Auto);

    Prime modulus() const { return p_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return n_ - stabilizer_.dim(); }

    const Subspace& stabilizer() const { return stabilizer_; }   // S
    const Subspace& orthogonal() const { return orthogonal_; }   // S^perp

    friend bool operator==(const StabilizerCode& a, const StabilizerCode& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.stabilizer_ == b.stabilizer_;
    }

  private:
    StabilizerCode(Prime p, std::size_t n, Subspace s, Subspace s_perp);

    Prime p_;
    std::size_t n_;
    Subspace stabilizer_;
    Subspace orthogonal_;
};

/// Minimum weight over S^perp \ S. When k = 0 that set is empty and the
/// result is the distinguished NoLogicals state rather than a number.
struct Distance {
    std::optional<std::uint32_t> value;    // nullopt = NoLogicals
    std::optional<PauliVector> witness;    // attains the minimum when finite

    bool no_logicals() const { return !value.has_value(); }
};

struct DistanceOptions {
    /// Largest candidate weight to try; 0 means n (a full search, which
    /// always terminates with an answer). If the cap is hit first, the
    /// search throws ResourceLimitError carrying the proven bound d > cap.
    std::uint32_t max_weight = 0;
};

/// Exact minimum-weight search: supports in lexicographic order by
/// increasing weight, all (p^2-1)^w nonzero local patterns per support,
/// membership tested against S^perp and S. The first hit in this fixed
/// order is the witness, so results are reproducible.
Distance distance(const StabilizerCode& code, const DistanceOptions& opt = {});

/// dim(S^perp / S); always 2k.
std::size_t logical_space_dim(const StabilizerCode& code);

struct CorrectabilityResult {
    bool correctable;
    /// Element of (S^perp cap V_E) \ S when not correctable.
    std::optional<PauliVector> witness;

    explicit operator bool() const { return correctable; }
};

/// Erasure criterion S^perp cap V_E <= S, decided exactly.
CorrectabilityResult is_correctable(const StabilizerCode& code, const QubitSet& e);

/// g(M) = dim((S^perp cap V_M) / (S cap V_M)): the number of independent
/// logical operators supportable on M.
std::size_t g(const StabilizerCode& code, const QubitSet& m);

struct CleaningIdentityVerdict {
    bool pass;  // identity_ok && restriction_dim_ok
    std::size_t g_m, g_mc, two_k;
    bool identity_ok;  // g(M) + g(M^c) == 2k
    // Dimensions of the decomposition S = S_M + S_{M^c} + S_0 and the
    // restriction count they predict.
    std::size_t dim_s_m, dim_s_mc, dim_s0;
    std::size_t dim_sperp_vm;
    bool restriction_dim_ok;  // dim(S^perp cap V_M) == 2|M| - dim S_M - dim S_0
};

/// Verify g(M) + g(M^c) = 2k and the dimension bookkeeping behind it.
CleaningIdentityVerdict check_cleaning_identity(const StabilizerCode& code, const QubitSet& m);

struct CleanResult {
    PauliVector cleaned;             // logical - stabilizer_element, zero on M
    PauliVector stabilizer_element;  // the s in S that was subtracted
};

/// Move a logical representative off the region m by subtracting a
/// stabilizer element with the same restriction to m. Always possible when
/// m is a correctable erasure. Throws NotLogicalError if logical is not in
/// S^perp, NotCleanableError if no stabilizer element matches on m.
CleanResult clean(const StabilizerCode& code, const PauliVector& logical, const QubitSet& m);

struct TwoDisjointVerdict {
    bool pass;        // k <= |C| when applicable; vacuously true otherwise
    bool applicable;  // both regions correctable
    bool correctable_a, correctable_b;
    std::size_t k, c_size;
    std::optional<std::size_t> g_a_complement;  // re-derived, equals 2k when applicable
    bool g_identity_ok;
};

/// Disjoint correctable regions A, B leave k <= |C| logical qudits, where
/// C is everything else. Throws DisjointnessError if a and b overlap.
TwoDisjointVerdict check_two_disjoint(const StabilizerCode& code, const QubitSet& a,
                                      const QubitSet& b);

struct DistanceCorrectabilityOptions {
    DistanceOptions distance;
    /// Exhaust all sets with |E| <= d-1 when their count is within this
    /// budget; otherwise test a seeded random sample of the same size.
    std::uint64_t max_sets = 100000;
    std::uint64_t sample_seed = 0;
};

struct DistanceCorrectabilityVerdict {
    bool pass;
    bool vacuous;     // k = 0: no distance, nothing to check
    bool exhaustive;  // every set was tried (vs. a random sample)
    std::uint64_t sets_checked;
    std::optional<QubitSet> counterexample;
    std::optional<PauliVector> witness;
};

/// Every erasure of at most d-1 qudits must be correctable. A
/// counterexample would falsify the implementation, not the result.
DistanceCorrectabilityVerdict check_distance_correctability(
    const StabilizerCode& code, const DistanceCorrectabilityOptions& opt = {});

/// Everything analyze reports: parameters, distance, Singleton slack, and
/// the two-disjoint verdict for the canonical witness regions
/// A = {1..d-1}, B = {d..2d-2}.
struct AnalysisReport {
    std::size_t n, k;
    Distance dist;
    std::optional<std::int64_t> slack;  // n - k - 2(d-1) when d is finite
    bool bound_holds;                   // k + 2(d-1) <= n; true when vacuous
    bool vacuous;                       // k = 0
    std::optional<QubitSet> region_a, region_b;
    std::optional<TwoDisjointVerdict> two_disjoint;
};

AnalysisReport check_singleton(const StabilizerCode& code, const DistanceOptions& opt = {});

enum class LemmaStatus { Pass, Fail, Vacuous, Limit };

struct LemmaLine {
    std::string name;
    LemmaStatus status;
    std::string detail;
};

struct SuiteOptions {
    DistanceOptions distance;
    /// Check the cleaning identity on every subset up to this n, on
    /// cleaning_samples seeded random subsets beyond it.
    std::size_t cleaning_exhaustive_max_n = 8;
    std::size_t cleaning_samples = 64;
    std::uint64_t seed = 0;
    std::uint64_t correctability_max_sets = 100000;
};

struct SuiteReport {
    std::size_t n, k;
    std::optional<Distance> dist;  // absent when the distance search hit its budget
    std::optional<std::uint32_t> distance_lower_bound;  // set in that case
    std::vector<LemmaLine> lines;
    bool resource_limited = false;

    bool all_pass() const;  // no Fail lines
};

/// Run the full verdict suite on one code: logical space dimension,
/// distance-implies-correctability, cleaning identity, two disjoint
/// correctable sets, and the Singleton bound. Budget exhaustion marks the
/// distance-dependent lines Limit instead of aborting the suite.
SuiteReport run_lemma_suite(const StabilizerCode& code, const SuiteOptions& opt = {});

}  // namespace stabkit
