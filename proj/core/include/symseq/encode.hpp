#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symseq/core.hpp"

namespace symseq {

/// Maps every sample of `signal` to the symbol of the range it falls in.
/// Requires |alphabet| == bounds.num_ranges.
SymbolicSequence map_signal(const Signal& signal, const RangeBounds& bounds,
                            const Alphabet& alphabet);

/// All overlapping substrings of length `ksize`, in order: the windows
/// chars[i : i+ksize] for i in 0 .. |chars| - ksize. Empty when the
/// sequence is shorter than ksize.
std::vector<std::string> compute_kmers(std::string_view chars, int ksize);

}  // namespace symseq
