#pragma once

#include <cstdint>
#include <string_view>

#include "stabkit/code.hpp"

namespace stabkit {

/// SplitMix64 with the published constants. Picked over std::mt19937
/// because the whole algorithm is four lines that can be reproduced
/// bit-for-bit in any language, which keeps generated fixtures portable.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Unbiased draw in [0, bound): discard words below 2^64 mod bound,
    /// then reduce. bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

struct GeneratorConfig {
    Prime p;
    std::uint32_t n = 1;
    std::uint32_t k = 0;
    std::uint64_t seed = 0;
    std::uint32_t transvection_rounds = 0;  // 0 selects the default of 5n

    std::uint32_t effective_rounds() const {
        return transvection_rounds == 0 ? 5 * n : transvection_rounds;
    }
};

/// T_v(u) = u + <u,v> v. Form-preserving, so it maps isotropic subspaces
/// to isotropic subspaces of the same dimension.
PauliVector transvect(const PauliVector& u, const PauliVector& v);

/// Deterministic random stabilizer code: start from the isotropic seed
/// span{(0|e_1), ..., (0|e_{n-k})} and stir it with seeded random
/// transvections. Identical configs produce bit-identical codes.
///
/// Sampling order, fixed for reproducibility: one SplitMix64 stream seeded
/// with cfg.seed; each round draws a candidate vector coordinate by
/// coordinate (x[0..n) then z[0..n), each via SplitMix64::below(p)) and
/// redraws the whole vector if it came out zero.
StabilizerCode random_code(const GeneratorConfig& cfg);

/// Fixed catalog of canonical codes: "four_two_two", "five_one_three",
/// "steane", "shor", and the parametrized "free(n)" / "trivial_k0(n)".
StabilizerCode catalog(std::string_view name);

}  // namespace stabkit
