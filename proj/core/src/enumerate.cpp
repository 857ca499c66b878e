#include "rainbow/enumerate.hpp"

#include <algorithm>

namespace rainbow {

namespace {

// Generates every non-crossing arc set with pairwise-distinct endpoints and
// arc length >= min_arc on [lo, hi]. The first vertex of the active segment
// is either unpaired or paired to some q; pairing splits off the enclosed
// segment, and the suffix segment is parked on `pending`.
void generate(int lo, int hi, int min_arc,
              std::vector<std::pair<int, int>>& pending, std::vector<Arc>& acc,
              const std::function<void(const std::vector<Arc>&)>& emit) {
  if (lo > hi) {
    if (pending.empty()) {
      emit(acc);
      return;
    }
    auto [l2, h2] = pending.back();
    pending.pop_back();
    generate(l2, h2, min_arc, pending, acc, emit);
    pending.push_back({l2, h2});
    return;
  }

  generate(lo + 1, hi, min_arc, pending, acc, emit);

  for (int q = lo + min_arc; q <= hi; ++q) {
    acc.push_back({lo, q});
    pending.push_back({q + 1, hi});
    generate(lo + 1, q - 1, min_arc, pending, acc, emit);
    pending.pop_back();
    acc.pop_back();
  }
}

}  // namespace

void enumerate_all(const Params& params, int n,
                   const std::function<void(const SecondaryStructure&)>& visit,
                   int hard_cap) {
  check_params(params);
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (n > hard_cap)
    throw std::invalid_argument("refusing to enumerate n = " +
                                std::to_string(n) + " > cap " +
                                std::to_string(hard_cap));

  std::vector<std::pair<int, int>> pending;
  std::vector<Arc> acc;
  generate(1, n, params.min_arc, pending, acc,
           [&](const std::vector<Arc>& arcs) {
             SecondaryStructure st(n, arcs);
             const auto runs = maximal_stack_lengths(st);
             bool ok = std::all_of(runs.begin(), runs.end(), [&](int r) {
               return r >= params.min_stack;
             });
             if (ok) visit(st);
           });
}

std::vector<SecondaryStructure> enumerate_all(const Params& params, int n,
                                              int hard_cap) {
  std::vector<SecondaryStructure> out;
  enumerate_all(
      params, n, [&](const SecondaryStructure& st) { out.push_back(st); },
      hard_cap);
  return out;
}

}  // namespace rainbow
