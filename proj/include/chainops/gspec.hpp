#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainops/core.hpp"

namespace chainops {

/// Tie-break choice at a critical pair: take the minimum or the maximum.
enum class Tie { Min, Max };

std::string to_string(Tie t);

/// An ordered pair (a, b) with g[a] = b and g[b] = a (both chain points).
/// The generated operation's value is freely choosable exactly there.
struct CriticalPair {
  Element a = 0;
  Element b = 0;

  friend auto operator<=>(const CriticalPair&, const CriticalPair&) = default;
  friend bool operator==(const CriticalPair&, const CriticalPair&) = default;
};

/// Generating data of a threshold operation: a non-increasing function g on
/// the doubled grid with g[e] = e, plus a tie-break map on the ordered
/// off-diagonal critical pairs. tie(a, b) and tie(b, a) are independent.
struct GSpec {
  int k = 0;
  Element e = 0;
  std::vector<ExtValue> g;
  std::map<std::pair<Element, Element>, Tie> ties;

  /// Tie-break for an ordered pair; Min when unspecified.
  Tie tie(Element a, Element b) const {
    auto it = ties.find({a, b});
    return it == ties.end() ? Tie::Min : it->second;
  }

  friend bool operator==(const GSpec&, const GSpec&) = default;
};

struct GSpecIssue {
  std::string message;
  int index = -1;  // offending row / element where applicable
};

struct GSpecValidation {
  bool ok = true;
  std::vector<GSpecIssue> issues;
  /// Input with the tie map completed: Min on every unspecified ordered
  /// off-diagonal critical pair. Meaningful only when ok.
  GSpec normalized;
};

/// Checks all GSpec invariants: g non-increasing, g[e] = e exactly, tie
/// entries only on ordered off-diagonal critical pairs.
GSpecValidation validate_gspec(const GSpec& s);

/// Throws InputError with the first issue when s is invalid.
void require_valid(const GSpec& s);

/// All ordered pairs (a, b) with g[a] = b and g[b] = a as chain points,
/// including the fixed point (e, e). Sorted.
std::vector<CriticalPair> critical_pairs(const GSpec& s);

/// Discrete symmetry surrogate for the completed graph of g:
/// for all chain elements a, b:
///   b < g[a]  implies  a <= g[b],  and  b > g[a]  implies  a >= g[b].
bool sym_check(const GSpec& s);

struct MmtReport {
  bool holds = true;
  /// Rows whose g value is a gap; g^2 is undefined there and the row is
  /// skipped.
  std::vector<Element> skipped_rows;
  std::optional<Element> failing_row;
};

/// Level-set condition on g: for every row x with a chain-point g[x],
/// min L <= g[g[x]] <= max L where L = { y : g[y] = g[x] }.
MmtReport mmt_report(const GSpec& s);
bool mmt_condition(const GSpec& s);

/// True iff t(a, b) != t(b, a). Defined on tables, not on GSpecs: which
/// pairs are critical depends on the representing g, but noncommutativity
/// is intrinsic to the table.
bool is_extra_critical_table(const BinTable& t, Element a, Element b);

}  // namespace chainops
