#include "chainops/construct.hpp"

#include <algorithm>

#include "chainops/evaluate.hpp"

namespace chainops {

BinTable build_table(const GSpec& s) {
  require_valid(s);
  Chain chain(s.k);
  std::vector<Element> entries(static_cast<size_t>(s.k) * s.k, 0);
  for (Element x = 0; x < s.k; ++x) {
    for (Element y = 0; y < s.k; ++y) {
      bool take_min;
      switch (ext_compare(chain, s.g[x], y)) {
        case Ordering::Greater:  // y < g[x]
          take_min = true;
          break;
        case Ordering::Less:  // y > g[x]
          take_min = false;
          break;
        default: {
          // y = g[x] is a chain point; settle by x against g[g[x]].
          const ExtValue g2 = s.g[s.g[x].as_point()];
          switch (ext_compare(chain, g2, x)) {
            case Ordering::Greater:  // x < g[g[x]]
              take_min = true;
              break;
            case Ordering::Less:  // x > g[g[x]]
              take_min = false;
              break;
            default:
              take_min = s.tie(x, y) == Tie::Min;
              break;
          }
          break;
        }
      }
      entries[static_cast<size_t>(x) * s.k + y] = take_min ? std::min(x, y) : std::max(x, y);
    }
  }
  return BinTable(s.k, std::move(entries));
}

namespace {

void require_symmetric_g(const GSpec& s) {
  if (!sym_check(s)) {
    throw InputError("generating data fails the symmetry surrogate");
  }
}

}  // namespace

Element build_nary_direct(const GSpec& s, std::span<const Element> tuple) {
  require_valid(s);
  require_symmetric_g(s);
  if (tuple.empty()) throw InputError("cannot evaluate an empty tuple");
  Chain chain(s.k);
  Element c = tuple[0], d = tuple[0];
  for (Element x : tuple) {
    if (!chain.contains(x)) throw InputError("tuple element out of range");
    c = std::min(c, x);
    d = std::max(d, x);
  }
  switch (ext_compare(chain, s.g[d], c)) {
    case Ordering::Greater:  // c < g[d]
      return c;
    case Ordering::Less:  // c > g[d]
      return d;
    default:
      return fast_eval(build_table(s), s.e, tuple);
  }
}

Element build_commutative_uninorm(const GSpec& s, std::span<const Element> tuple) {
  GSpecValidation v = validate_gspec(s);
  if (!v.ok) {
    throw InputError("invalid generating data: " + v.issues.front().message);
  }
  require_symmetric_g(s);
  for (const auto& [pair, choice] : v.normalized.ties) {
    if (v.normalized.tie(pair.second, pair.first) != choice) {
      throw InputError("tie-break map is not symmetric; the operation would not commute");
    }
  }
  if (tuple.empty()) throw InputError("cannot evaluate an empty tuple");
  Chain chain(s.k);
  Element c = tuple[0], d = tuple[0];
  for (Element x : tuple) {
    if (!chain.contains(x)) throw InputError("tuple element out of range");
    c = std::min(c, x);
    d = std::max(d, x);
  }
  const Ordering c_vs_gd = ext_compare(chain, s.g[d], c);
  const Ordering d_vs_gc = ext_compare(chain, s.g[c], d);
  if (c_vs_gd == Ordering::Greater || d_vs_gc == Ordering::Greater) return c;  // below threshold
  if (c_vs_gd == Ordering::Less || d_vs_gc == Ordering::Less) return d;        // above threshold
  return v.normalized.tie(c, d) == Tie::Min ? c : d;
}

namespace {

Fixture make_fixture(std::string name, GSpec s) {
  BinTable t = build_table(s);
  return {std::move(name), std::move(s), std::move(t)};
}

}  // namespace

const Fixture& rx3() {
  static const Fixture f = make_fixture(
      "rx3", GSpec{3,
                   1,
                   {ExtValue::point(2), ExtValue::point(1), ExtValue::point(0)},
                   {{{0, 2}, Tie::Max}, {{2, 0}, Tie::Min}}});
  return f;
}

const Fixture& min3() {
  static const Fixture f = make_fixture(
      "min3", GSpec{3, 2, {ExtValue::point(2), ExtValue::point(2), ExtValue::point(2)}, {}});
  return f;
}

const Fixture& max3() {
  static const Fixture f = make_fixture(
      "max3", GSpec{3, 0, {ExtValue::point(0), ExtValue::point(0), ExtValue::point(0)}, {}});
  return f;
}

}  // namespace chainops
