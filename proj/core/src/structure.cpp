#include "rainbow/structure.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace rainbow {

SecondaryStructure::SecondaryStructure(int length, std::vector<Arc> arcs)
    : length_(length), arcs_(std::move(arcs)) {
  if (length_ < 0) throw std::invalid_argument("structure length must be >= 0");
  for (const Arc& a : arcs_) {
    if (a.open < 1 || a.close > length_ || a.open >= a.close)
      throw std::invalid_argument("arc endpoints must satisfy 1 <= open < close <= n");
  }
  std::sort(arcs_.begin(), arcs_.end());
}

std::vector<int> SecondaryStructure::partner_map() const {
  std::vector<int> partner(length_ + 1, 0);
  for (const Arc& a : arcs_) {
    if (partner[a.open] != 0 || partner[a.close] != 0)
      throw std::invalid_argument("shared arc endpoints: partner map undefined");
    partner[a.open] = a.close;
    partner[a.close] = a.open;
  }
  return partner;
}

ParseError::ParseError(const std::string& msg, int position)
    : std::runtime_error(msg), position_(position) {}

namespace {

// "(-12.34)" possibly padded with blanks, as appended by folding tools.
bool is_energy_annotation(std::string_view s) {
  size_t i = 0, j = s.size();
  while (i < j && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  while (j > i && std::isspace(static_cast<unsigned char>(s[j - 1]))) --j;
  if (j - i < 3 || s[i] != '(' || s[j - 1] != ')') return false;
  std::string_view body = s.substr(i + 1, j - i - 2);
  bool digit_seen = false;
  for (size_t p = 0; p < body.size(); ++p) {
    char ch = body[p];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digit_seen = true;
    } else if (ch == '.' || ch == '+' || ch == '-' ||
               std::isspace(static_cast<unsigned char>(ch))) {
      continue;
    } else {
      return false;
    }
  }
  return digit_seen;
}

}  // namespace

SecondaryStructure parse_dotbracket(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);

  size_t ws = text.find_first_of(" \t");
  std::string_view body = text.substr(0, ws);
  if (ws != std::string_view::npos) {
    std::string_view tail = text.substr(ws);
    if (!is_energy_annotation(tail))
      throw ParseError("unexpected trailing text after structure",
                       static_cast<int>(ws) + 1);
  }

  std::vector<Arc> arcs;
  std::vector<int> open_stack;
  for (size_t i = 0; i < body.size(); ++i) {
    int pos = static_cast<int>(i) + 1;
    switch (body[i]) {
      case '(':
        open_stack.push_back(pos);
        break;
      case ')':
        if (open_stack.empty())
          throw ParseError("unmatched ')' at position " + std::to_string(pos), pos);
        arcs.push_back({open_stack.back(), pos});
        open_stack.pop_back();
        break;
      case '.':
        break;
      default:
        throw ParseError(std::string("invalid character '") + body[i] +
                             "' at position " + std::to_string(pos),
                         pos);
    }
  }
  if (!open_stack.empty()) {
    int pos = open_stack.front();
    throw ParseError("unmatched '(' at position " + std::to_string(pos), pos);
  }
  return SecondaryStructure(static_cast<int>(body.size()), std::move(arcs));
}

std::string to_dotbracket(const SecondaryStructure& st) {
  std::string out(static_cast<size_t>(st.length()), '.');
  for (const Arc& a : st.arcs()) {
    if (out[a.open - 1] != '.' || out[a.close - 1] != '.')
      throw std::invalid_argument("shared arc endpoints: not serializable");
    out[a.open - 1] = '(';
    out[a.close - 1] = ')';
  }
  return out;
}

bool ValidationReport::has(ViolationKind k) const {
  return std::any_of(violations.begin(), violations.end(),
                     [k](const Violation& v) { return v.kind == k; });
}

namespace {

std::string arc_str(const Arc& a) {
  return "(" + std::to_string(a.open) + "," + std::to_string(a.close) + ")";
}

}  // namespace

std::vector<int> maximal_stack_lengths(const SecondaryStructure& st) {
  std::set<std::pair<int, int>> arc_set;
  for (const Arc& a : st.arcs()) arc_set.insert({a.open, a.close});

  std::vector<int> runs;
  for (const Arc& a : st.arcs()) {
    if (arc_set.count({a.open - 1, a.close + 1})) continue;  // not a stack head
    int len = 1;
    while (arc_set.count({a.open + len, a.close - len})) ++len;
    runs.push_back(len);
  }
  return runs;
}

ValidationReport validate(const SecondaryStructure& st, const Params& params) {
  check_params(params);
  ValidationReport report;

  std::vector<int> uses(st.length() + 1, 0);
  for (const Arc& a : st.arcs()) {
    ++uses[a.open];
    ++uses[a.close];
  }
  for (int v = 1; v <= st.length(); ++v) {
    if (uses[v] > 1)
      report.violations.push_back(
          {ViolationKind::SharedEndpoint,
           "vertex " + std::to_string(v) + " belongs to " +
               std::to_string(uses[v]) + " arcs"});
  }

  const auto& arcs = st.arcs();
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      const Arc &x = arcs[i], &y = arcs[j];
      if (x.open < y.open && y.open < x.close && x.close < y.close)
        report.violations.push_back(
            {ViolationKind::CrossingArcs,
             "arcs " + arc_str(x) + " and " + arc_str(y) + " cross"});
    }
  }

  for (const Arc& a : arcs) {
    if (a.length() < params.min_arc)
      report.violations.push_back(
          {ViolationKind::ArcTooShort,
           "arc " + arc_str(a) + " has length " + std::to_string(a.length()) +
               " < " + std::to_string(params.min_arc)});
  }

  // Stack decomposition needs a well-formed diagram.
  if (!report.has(ViolationKind::SharedEndpoint) &&
      !report.has(ViolationKind::CrossingArcs)) {
    for (int run : maximal_stack_lengths(st)) {
      if (run < params.min_stack)
        report.violations.push_back(
            {ViolationKind::StackTooShort,
             "maximal stack of length " + std::to_string(run) + " < " +
                 std::to_string(params.min_stack)});
    }
  }
  return report;
}

RainbowSpectrum rainbow_spectrum(const SecondaryStructure& st) {
  std::vector<int> partner = st.partner_map();
  RainbowSpectrum spec;
  int pos = 1;
  while (pos <= st.length()) {
    if (partner[pos] > pos) {
      spec.rainbow_lengths.push_back(partner[pos] - pos);
      pos = partner[pos] + 1;
    } else {
      ++spec.external_unpaired;
      ++pos;
    }
  }
  std::sort(spec.rainbow_lengths.rbegin(), spec.rainbow_lengths.rend());
  spec.five_three_distance =
      static_cast<int>(spec.rainbow_lengths.size()) + spec.external_unpaired;
  return spec;
}

}  // namespace rainbow
