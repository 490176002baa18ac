#include "chainops/gspec.hpp"

#include <algorithm>

namespace chainops {

std::string to_string(Tie t) { return t == Tie::Min ? "min" : "max"; }

GSpecValidation validate_gspec(const GSpec& s) {
  GSpecValidation v;
  v.normalized = s;
  auto fail = [&](std::string msg, int idx = -1) {
    v.ok = false;
    v.issues.push_back({std::move(msg), idx});
  };

  if (s.k < 1) {
    fail("chain size must be at least 1");
    return v;
  }
  Chain chain(s.k);
  if (!chain.contains(s.e)) {
    fail("neutral element out of range", s.e);
    return v;
  }
  if (static_cast<int>(s.g.size()) != s.k) {
    fail("g must have exactly one value per chain element");
    return v;
  }
  const int max_twice = 2 * (s.k - 1);
  for (int x = 0; x < s.k; ++x) {
    if (s.g[x].twice() < 0 || s.g[x].twice() > max_twice) {
      fail("g value out of range", x);
    }
  }
  if (!v.ok) return v;
  for (int x = 0; x + 1 < s.k; ++x) {
    if (s.g[x] < s.g[x + 1]) {
      fail("g must be non-increasing", x);
    }
  }
  if (s.g[s.e] != ExtValue::point(s.e)) {
    fail("g must fix the neutral element", s.e);
  }
  if (!v.ok) return v;

  // Tie entries are allowed only on ordered off-diagonal critical pairs.
  auto is_critical = [&](Element a, Element b) {
    return a != b && s.g[a] == ExtValue::point(b) && s.g[b] == ExtValue::point(a);
  };
  for (const auto& [pair, tie] : s.ties) {
    auto [a, b] = pair;
    (void)tie;
    if (!chain.contains(a) || !chain.contains(b)) {
      fail("tie entry outside the chain", a);
    } else if (!is_critical(a, b)) {
      fail("tie entry on a non-critical pair", a);
    }
  }
  if (!v.ok) return v;

  // Complete the tie map: Min on every unspecified ordered pair.
  for (Element a = 0; a < s.k; ++a) {
    for (Element b = 0; b < s.k; ++b) {
      if (is_critical(a, b) && !v.normalized.ties.contains({a, b})) {
        v.normalized.ties.emplace(std::pair{a, b}, Tie::Min);
      }
    }
  }
  return v;
}

void require_valid(const GSpec& s) {
  GSpecValidation v = validate_gspec(s);
  if (!v.ok) {
    throw InputError("invalid generating data: " + v.issues.front().message);
  }
}

std::vector<CriticalPair> critical_pairs(const GSpec& s) {
  require_valid(s);
  std::vector<CriticalPair> out;
  for (Element a = 0; a < s.k; ++a) {
    if (!s.g[a].is_point()) continue;
    Element b = s.g[a].as_point();
    if (s.g[b] == ExtValue::point(a)) out.push_back({a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool sym_check(const GSpec& s) {
  require_valid(s);
  for (Element a = 0; a < s.k; ++a) {
    for (Element b = 0; b < s.k; ++b) {
      const int tb = 2 * b;
      const int ta = 2 * a;
      if (tb < s.g[a].twice() && ta > s.g[b].twice()) return false;
      if (tb > s.g[a].twice() && ta < s.g[b].twice()) return false;
    }
  }
  return true;
}

MmtReport mmt_report(const GSpec& s) {
  require_valid(s);
  MmtReport r;
  for (Element x = 0; x < s.k; ++x) {
    if (!s.g[x].is_point()) {
      r.skipped_rows.push_back(x);
      continue;
    }
    const ExtValue gx = s.g[x];
    Element lo = -1, hi = -1;
    for (Element y = 0; y < s.k; ++y) {
      if (s.g[y] == gx) {
        if (lo < 0) lo = y;
        hi = y;
      }
    }
    // x itself is in the level set, so lo/hi are set.
    const ExtValue g2 = s.g[gx.as_point()];
    if (g2 < ExtValue::point(lo) || g2 > ExtValue::point(hi)) {
      r.holds = false;
      r.failing_row = x;
      return r;
    }
  }
  return r;
}

bool mmt_condition(const GSpec& s) { return mmt_report(s).holds; }

bool is_extra_critical_table(const BinTable& t, Element a, Element b) {
  return t(a, b) != t(b, a);
}

}  // namespace chainops
