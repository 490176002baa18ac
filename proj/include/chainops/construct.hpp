#pragma once

#include <span>
#include <string>

#include "chainops/core.hpp"
#include "chainops/gspec.hpp"

namespace chainops {

/// Min/max threshold construction. For each cell (x, y):
///   y < g[x]  -> min(x, y)
///   y > g[x]  -> max(x, y)
///   y = g[x]  -> min if x < g[g[x]], max if x > g[g[x]],
///                and the tie-break choice tie(x, y) when x = g[g[x]].
BinTable build_table(const GSpec& s);

/// Direct n-ary evaluation from the generating data: with c/d the tuple's
/// minimum/maximum, returns c when c < g[d] and d when c > g[d]. The boundary
/// case c = g[d] is settled by the one-pass evaluator on the built table so
/// the result always matches the derived operation. Requires the symmetry
/// surrogate to hold for g.
Element build_nary_direct(const GSpec& s, std::span<const Element> tuple);

/// Commutative-subclass evaluation (tie-break map symmetric): returns c when
/// c < g[d] or d < g[c], d when c > g[d] or d > g[c], and the tie-chosen
/// value when c = g[d] and d = g[c].
Element build_commutative_uninorm(const GSpec& s, std::span<const Element> tuple);

/// A named generating datum together with the table it builds.
struct Fixture {
  std::string name;
  GSpec gspec;
  BinTable table;
};

/// k=3 reflection with tie-breaks max at (0,2) and min at (2,0); rows
/// [0,0,2], [0,1,2], [0,2,2]. The smallest noncommutative member.
const Fixture& rx3();
/// k=3 minimum operation (g constant at the top, neutral 2).
const Fixture& min3();
/// k=3 maximum operation (g constant at the bottom, neutral 0).
const Fixture& max3();

}  // namespace chainops
