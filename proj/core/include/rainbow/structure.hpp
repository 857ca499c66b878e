#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/params.hpp"

namespace rainbow {

/// One base pair (open, close), 1-based, open < close. Arc length is
/// close - open, so the shortest conceivable arc (i, i+1) has length 1.
struct Arc {
  int open = 0;
  int close = 0;

  int length() const { return close - open; }

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A secondary-structure diagram: n ordered vertices plus a set of arcs
/// drawn in the upper half-plane. Construction enforces well-formedness
/// (endpoints in range, open < close); the combinatorial side conditions
/// (no shared endpoints, non-crossing, arc/stack minima) are reported by
/// validate() rather than enforced here.
class SecondaryStructure {
 public:
  SecondaryStructure() = default;
  SecondaryStructure(int length, std::vector<Arc> arcs);

  int length() const { return length_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// partner[i] = j when (i, j) or (j, i) is an arc, 0 when i is unpaired;
  /// index 0 is unused. Requires pairwise-distinct endpoints.
  std::vector<int> partner_map() const;

  friend bool operator==(const SecondaryStructure&, const SecondaryStructure&) = default;

 private:
  int length_ = 0;
  std::vector<Arc> arcs_;  // sorted by opening position
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int position);

  /// 1-based offset of the offending character in the structure text.
  int position() const { return position_; }

 private:
  int position_;
};

/// Parses a single dot-bracket line. A trailing parenthesized energy
/// annotation ("...((..)) (-12.30)") is stripped.
SecondaryStructure parse_dotbracket(std::string_view text);

std::string to_dotbracket(const SecondaryStructure& st);

enum class ViolationKind {
  SharedEndpoint,
  CrossingArcs,
  ArcTooShort,
  StackTooShort,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind k) const;
};

/// Checks the diagram conditions: no shared endpoints, non-crossing,
/// every arc length >= min_arc, every maximal stack length >= min_stack.
/// An empty report is equivalent to "counted by s(n) for these params".
ValidationReport validate(const SecondaryStructure& st, const Params& params);

/// Lengths of the maximal runs of parallel arcs ((i,j), (i+1,j-1), ...).
/// Requires a non-crossing structure without shared endpoints.
std::vector<int> maximal_stack_lengths(const SecondaryStructure& st);

/// Rainbows are the arcs maximal under the nesting order; the spectrum
/// records their lengths in descending order together with the unpaired
/// vertices lying outside every rainbow.
struct RainbowSpectrum {
  std::vector<int> rainbow_lengths;  // descending
  int external_unpaired = 0;
  int five_three_distance = 0;  // rainbow count + external unpaired

  /// 1 = longest, 2 = second longest, ...; 0 when absent.
  int longest(int rank = 1) const {
    if (rank < 1 || static_cast<size_t>(rank) > rainbow_lengths.size()) return 0;
    return rainbow_lengths[rank - 1];
  }
};

/// Requires a non-crossing structure without shared endpoints.
RainbowSpectrum rainbow_spectrum(const SecondaryStructure& st);

}  // namespace rainbow
