#pragma once

#include <functional>
#include <vector>

#include "rainbow/structure.hpp"

namespace rainbow {

/// Enumeration is exponential; this is the refusal threshold for n.
inline constexpr int kEnumerationCap = 18;

/// Visits every structure of length n admitted by `params` exactly once.
/// Arc sets are generated recursively with the min-arc constraint applied
/// during generation; the min-stack constraint is filtered afterwards.
/// This is the correctness oracle for the counting recurrences, so it
/// favors obviousness over speed.
void enumerate_all(const Params& params, int n,
                   const std::function<void(const SecondaryStructure&)>& visit,
                   int hard_cap = kEnumerationCap);

std::vector<SecondaryStructure> enumerate_all(const Params& params, int n,
                                              int hard_cap = kEnumerationCap);

}  // namespace rainbow
