#include "chainops/extract.hpp"

#include <algorithm>
#include <stdexcept>

#include "chainops/construct.hpp"

namespace chainops {

RowProfile row_profile(const BinTable& t, Element x) {
  if (x < 0 || x >= t.k) throw InputError("row index out of range");
  RowProfile p;
  p.x = x;
  for (Element y = 0; y < t.k; ++y) {
    if (y == x) continue;
    const Element v = t(x, y);
    if (v == std::min(x, y)) {
      if (p.hi && *p.hi < y) {
        throw InputError("row is not a threshold row: low cell above a high cell");
      }
      p.lo = y;  // ys are scanned in increasing order
    } else if (v == std::max(x, y)) {
      if (!p.hi) p.hi = y;
    } else {
      throw InputError("row cell is neither the minimum nor the maximum of its arguments");
    }
  }
  return p;
}

BinTable extract_binary(const NaryOp& f, Element e) {
  if (f.n < 2) throw InputError("extraction needs arity at least 2");
  if (e < 0 || e >= f.k) throw InputError("neutral element out of range");
  std::vector<Element> tup(f.n, e);
  for (int pos = 0; pos < f.n; ++pos) {
    for (Element x = 0; x < f.k; ++x) {
      std::fill(tup.begin(), tup.end(), e);
      tup[pos] = x;
      if (f(tup) != x) throw InputError("given element is not neutral for the operation");
    }
  }
  std::vector<Element> entries(static_cast<size_t>(f.k) * f.k, 0);
  for (Element a = 0; a < f.k; ++a) {
    for (Element b = 0; b < f.k; ++b) {
      std::fill(tup.begin(), tup.end(), e);
      tup.front() = a;
      tup.back() = b;
      entries[static_cast<size_t>(a) * f.k + b] = f(tup);
    }
  }
  return BinTable(f.k, std::move(entries));
}

CheckReport derived_report(const NaryOp& f, const BinTable& t, long long max_cases) {
  if (f.k != t.k) throw InputError("operation and table have different domains");
  CheckReport r;
  long long total = 1;
  for (int i = 0; i < f.n; ++i) {
    if (total > max_cases / f.k) throw GuardError("derivation check would exceed the tuple budget");
    total *= f.k;
  }
  std::vector<Element> tup(f.n, 0);
  do {
    ++r.cases_checked;
    const Element lhs = f(tup);
    const Element rhs = fold_eval(t, tup);
    if (lhs != rhs) {
      r.ok = false;
      r.witnesses.push_back(
          {"derived from table", std::vector<long long>(tup.begin(), tup.end()), lhs, rhs, -1});
      return r;
    }
  } while (next_tuple(tup, f.k));
  return r;
}

bool check_derived(const NaryOp& f, const BinTable& t, long long max_cases) {
  return derived_report(f, t, max_cases).ok;
}

namespace {

/// Candidate thresholds for one row, most-preferred first: the row's own
/// index when admissible, then integer points from the top down, then gaps
/// from the bottom up. Bounds are inclusive, in doubled units.
std::vector<ExtValue> row_candidates(Element x, int lo_twice, int hi_twice) {
  std::vector<ExtValue> out;
  if (2 * x >= lo_twice && 2 * x <= hi_twice) out.push_back(ExtValue::point(x));
  for (int tw = hi_twice - hi_twice % 2; tw >= lo_twice; tw -= 2) {
    if (tw != 2 * x) out.push_back(ExtValue::from_twice(tw));
  }
  for (int tw = lo_twice + (lo_twice % 2 == 0 ? 1 : 0); tw <= hi_twice; tw += 2) {
    out.push_back(ExtValue::from_twice(tw));
  }
  return out;
}

/// Completes a threshold assignment into generating data by reading the
/// tie-break choices off the table, then tests regeneration.
std::optional<GSpec> regenerates(const BinTable& t, Element e, const std::vector<ExtValue>& g) {
  GSpec s;
  s.k = t.k;
  s.e = e;
  s.g = g;
  for (Element a = 0; a < t.k; ++a) {
    if (!g[a].is_point()) continue;
    const Element b = g[a].as_point();
    if (a == b || g[b] != ExtValue::point(a)) continue;
    s.ties.emplace(std::pair{a, b}, t(a, b) == std::max(a, b) ? Tie::Max : Tie::Min);
  }
  if (build_table(s) == t) return s;
  return std::nullopt;
}

std::optional<GSpec> search_rows(const BinTable& t, Element e,
                                 const std::vector<std::vector<ExtValue>>& candidates,
                                 std::vector<ExtValue>& g, int row) {
  if (row == t.k) return regenerates(t, e, g);
  for (ExtValue v : candidates[row]) {
    if (row > 0 && v > g[row - 1]) continue;  // g must stay non-increasing
    g[row] = v;
    if (auto s = search_rows(t, e, candidates, g, row + 1)) return s;
  }
  return std::nullopt;
}

}  // namespace

GSpec reconstruct_gspec(const BinTable& t) {
  ClassReport rep = class_check(t);
  if (!rep.in_class) {
    throw InputError("table is not associative idempotent monotone with a neutral element");
  }
  const Element e = rep.neutrals.front();
  const int max_twice = 2 * (t.k - 1);
  std::vector<std::vector<ExtValue>> candidates(t.k);
  for (Element x = 0; x < t.k; ++x) {
    if (x == e) {
      candidates[x] = {ExtValue::point(e)};  // the fixed point is forced
      continue;
    }
    const RowProfile p = row_profile(t, x);
    const int lo_twice = p.lo ? 2 * *p.lo : 0;
    const int hi_twice = p.hi ? 2 * *p.hi : max_twice;
    candidates[x] = row_candidates(x, lo_twice, hi_twice);
  }
  std::vector<ExtValue> g(t.k, ExtValue::point(0));
  if (auto s = search_rows(t, e, candidates, g, 0)) return *s;
  throw std::logic_error("no generating data regenerates a class table");
}

bool bijection_roundtrip(const BinTable& t, int n) {
  if (n < 2) throw InputError("round trip needs arity at least 2");
  const std::vector<Element> neutrals = find_neutral_elements(NaryOp::from_table(t));
  if (neutrals.empty()) throw InputError("table has no neutral element");
  const NaryOp f = NaryOp::derived(t, n);
  return extract_binary(f, neutrals.front()) == t;
}

}  // namespace chainops
