#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace stabkit::detail {

/// Advance a sorted w-combination of {0, ..., n-1} to its lexicographic
/// successor. Returns false (leaving the contents unspecified) after the
/// last combination.
inline bool next_combination(std::span<std::uint32_t> comb, std::size_t n) {
    const std::size_t w = comb.size();
    std::size_t i = w;
    while (i > 0 && comb[i - 1] == n - w + i - 1) --i;
    if (i == 0) return false;
    ++comb[i - 1];
    for (std::size_t j = i; j < w; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

}  // namespace stabkit::detail
