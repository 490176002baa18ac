#pragma once

#include <optional>

#include "chainops/core.hpp"
#include "chainops/gspec.hpp"
#include "chainops/verify.hpp"

namespace chainops {

/// Threshold shape of one table row: off-diagonal cells split into a LOW
/// prefix (t(x,y) = min(x,y)) and a HIGH suffix (t(x,y) = max(x,y)).
struct RowProfile {
  Element x = 0;
  std::optional<Element> lo;  // largest LOW y, if any
  std::optional<Element> hi;  // smallest HIGH y, if any
};

/// Classifies row x. Throws InputError when some off-diagonal cell is
/// neither min nor max of its arguments, or when LOW and HIGH interleave
/// (the row is not a threshold row).
RowProfile row_profile(const BinTable& t, Element x);

/// Binary restriction through the neutral element: T(a,b) = f(a,e,…,e,b).
/// Requires arity >= 2 and e neutral for f.
BinTable extract_binary(const NaryOp& f, Element e);

/// f agrees with the right-nested fold of t on every tuple. Supports
/// operations without neutral elements (it only compares values).
CheckReport derived_report(const NaryOp& f, const BinTable& t, long long max_cases = 10'000'000);
bool check_derived(const NaryOp& f, const BinTable& t, long long max_cases = 10'000'000);

/// Canonical generating data for a table passing the class check: per-row
/// threshold candidates bounded by the row profile (preferring the row's own
/// index, then integer thresholds from above, then gaps from below), searched
/// under the non-increasing and fixed-point constraints, accepting the first
/// assignment whose built table equals t; the tie-break map is read off t at
/// the resulting critical pairs. Deterministic.
GSpec reconstruct_gspec(const BinTable& t);

/// extract_binary(derived n-ary of t, neutral of t) equals t.
bool bijection_roundtrip(const BinTable& t, int n);

}  // namespace chainops
