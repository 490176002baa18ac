#include "chainops/verify.hpp"

#include <algorithm>

namespace chainops {

namespace {

/// k^n as long long, or -1 on overflow past cap.
long long checked_pow(int k, int n, long long cap) {
  long long r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > cap / k) return -1;
    r *= k;
  }
  return r;
}

std::vector<long long> to_longs(std::span<const Element> tuple) {
  return std::vector<long long>(tuple.begin(), tuple.end());
}

}  // namespace

Poset::Poset(int size, std::vector<std::uint8_t> leq) : size(size), leq(std::move(leq)) {
  if (size < 1) throw InputError("poset must have at least one element");
  if (this->leq.size() != static_cast<size_t>(size) * size) {
    throw InputError("poset relation matrix has the wrong shape");
  }
}

void Poset::validate() const {
  if (size < 1 || leq.size() != static_cast<size_t>(size) * size) {
    throw InputError("poset relation matrix has the wrong shape");
  }
  for (int a = 0; a < size; ++a) {
    if (!le(a, a)) throw InputError("poset relation is not reflexive");
  }
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (a != b && le(a, b) && le(b, a)) {
        throw InputError("poset relation is not antisymmetric");
      }
    }
  }
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (!le(a, b)) continue;
      for (int c = 0; c < size; ++c) {
        if (le(b, c) && !le(a, c)) {
          throw InputError("poset relation is not transitive");
        }
      }
    }
  }
}

Poset Poset::chain(int k) {
  if (k < 1) throw InputError("chain must have at least one element");
  Poset p;
  p.size = k;
  p.leq.assign(static_cast<size_t>(k) * k, 0);
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) p.leq[static_cast<size_t>(a) * k + b] = 1;
  }
  return p;
}

Element NaryOp::operator()(std::span<const Element> tuple) const {
  if (static_cast<int>(tuple.size()) != n) {
    throw InputError("tuple length does not match the operation arity");
  }
  for (Element x : tuple) {
    if (x < 0 || x >= k) throw InputError("tuple element out of range");
  }
  Element v = fn(tuple);
  if (v < 0 || v >= k) throw InputError("operation produced an out-of-range value");
  return v;
}

NaryOp NaryOp::from_table(BinTable t) {
  int k = t.k;
  return {k, 2, [t = std::move(t)](std::span<const Element> tup) { return t(tup[0], tup[1]); }};
}

NaryOp NaryOp::derived(BinTable t, int n) {
  if (n < 1) throw InputError("arity must be at least 1");
  int k = t.k;
  return {k, n, [t = std::move(t)](std::span<const Element> tup) { return fold_eval(t, tup); }};
}

NaryOp NaryOp::from_values(int k, int n, std::vector<Element> values) {
  if (k < 1 || n < 1) throw InputError("domain size and arity must be positive");
  long long want = checked_pow(k, n, 1LL << 62);
  if (want < 0 || static_cast<long long>(values.size()) != want) {
    throw InputError("value table size does not match k^n");
  }
  for (Element v : values) {
    if (v < 0 || v >= k) throw InputError("value table entry out of range");
  }
  return {k, n, [k, vals = std::move(values)](std::span<const Element> tup) {
            size_t idx = 0;
            for (Element x : tup) idx = idx * k + static_cast<size_t>(x);
            return vals[idx];
          }};
}

std::vector<Element> materialize(const NaryOp& f, long long max_cases) {
  long long total = checked_pow(f.k, f.n, max_cases);
  if (total < 0) throw GuardError("value table too large to materialize");
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(total));
  std::vector<Element> tup(f.n, 0);
  do {
    out.push_back(f(tup));
  } while (next_tuple(tup, f.k));
  return out;
}

CheckReport check_n_associative(const NaryOp& f, long long max_cases) {
  CheckReport r;
  const int n = f.n;
  if (n < 2) return r;  // nothing to compare at arity 1
  const int m = 2 * n - 1;
  if (checked_pow(f.k, m, max_cases) < 0) {
    throw GuardError("associativity check would exceed the tuple budget");
  }
  std::vector<Element> tup(m, 0);
  std::vector<Element> outer(n, 0);
  auto collapse = [&](int pos) {
    Element inner = f(std::span<const Element>(tup).subspan(pos, n));
    for (int j = 0; j < pos; ++j) outer[j] = tup[j];
    outer[pos] = inner;
    for (int j = pos + 1; j < n; ++j) outer[j] = tup[j + n - 1];
    return f(outer);
  };
  do {
    Element v0 = collapse(0);
    for (int i = 1; i < n; ++i) {
      ++r.cases_checked;
      Element vi = collapse(i);
      if (vi != v0) {
        r.ok = false;
        r.witnesses.push_back({"n-associativity", to_longs(tup), v0, vi, i});
        return r;
      }
    }
  } while (next_tuple(tup, f.k));
  return r;
}

CheckReport idempotency_report(const NaryOp& f) {
  CheckReport r;
  for (Element a = 0; a < f.k; ++a) {
    std::vector<Element> tup(f.n, a);
    ++r.cases_checked;
    Element v = f(tup);
    if (v != a) {
      r.ok = false;
      r.witnesses.push_back({"idempotency", {a}, v, a, -1});
      return r;
    }
  }
  return r;
}

bool check_idempotent(const NaryOp& f) { return idempotency_report(f).ok; }

CheckReport quasitriviality_report(const NaryOp& f) {
  CheckReport r;
  if (checked_pow(f.k, f.n, 10'000'000) < 0) {
    throw GuardError("quasitriviality check would exceed the tuple budget");
  }
  std::vector<Element> tup(f.n, 0);
  do {
    ++r.cases_checked;
    Element v = f(tup);
    if (std::find(tup.begin(), tup.end(), v) == tup.end()) {
      r.ok = false;
      r.witnesses.push_back({"quasitriviality", to_longs(tup), v, -1, -1});
      return r;
    }
  } while (next_tuple(tup, f.k));
  return r;
}

bool check_quasitrivial(const NaryOp& f) { return quasitriviality_report(f).ok; }

std::string to_string(Trend t) {
  switch (t) {
    case Trend::Preserving: return "preserving";
    case Trend::Reversing: return "reversing";
    default: return "mixed";
  }
}

namespace {

/// Shared section scan over an n-ary operation on an arbitrary domain.
/// eval(tuple of domain indices) -> output; out_le compares outputs;
/// dom_le compares domain indices. Sections must be order-preserving or
/// order-reversing w.r.t. those relations.
template <typename Eval, typename DomLe, typename OutLe, typename Out>
MonotoneReport scan_sections(int domain, int n, Eval&& eval, DomLe&& dom_le, OutLe&& out_le,
                             std::vector<Out>& section, bool* increasing_only = nullptr) {
  MonotoneReport rep;
  rep.coordinate_trends.assign(n, Trend::Preserving);
  if (increasing_only) *increasing_only = true;
  std::vector<Element> tup(n, 0);
  for (int coord = 0; coord < n; ++coord) {
    bool all_preserving = true;
    bool all_reversing = true;
    std::vector<Element> context(n, 0);
    bool more = true;
    while (more) {
      for (int j = 0; j < n; ++j) tup[j] = context[j];
      for (int v = 0; v < domain; ++v) {
        tup[coord] = v;
        section[v] = eval(tup);
      }
      bool preserving = true, reversing = true;
      int bad_up_v = -1, bad_up_w = -1, bad_down_v = -1, bad_down_w = -1;
      for (int v = 0; v < domain; ++v) {
        for (int w = 0; w < domain; ++w) {
          if (v == w || !dom_le(v, w)) continue;
          if (!out_le(section[v], section[w])) {
            if (preserving) { bad_up_v = v; bad_up_w = w; }
            preserving = false;
          }
          if (!out_le(section[w], section[v])) {
            if (reversing) { bad_down_v = v; bad_down_w = w; }
            reversing = false;
          }
        }
      }
      all_preserving = all_preserving && preserving;
      all_reversing = all_reversing && reversing;
      if (increasing_only && !preserving) *increasing_only = false;
      if (!preserving && !reversing && rep.ok) {
        rep.ok = false;
        auto add = [&](int v, int w) {
          Witness wit;
          wit.property = "monotonicity";
          wit.position = coord;
          tup[coord] = v;
          wit.inputs = to_longs(tup);
          wit.lhs = static_cast<long long>(section[v]);
          tup[coord] = w;
          for (Element x : tup) wit.inputs.push_back(x);
          wit.rhs = static_cast<long long>(section[w]);
          rep.witnesses.push_back(std::move(wit));
        };
        add(bad_up_v, bad_up_w);
        add(bad_down_v, bad_down_w);
      }
      // Advance the context over the other coordinates (coord stays 0).
      more = false;
      for (int j = n - 1; j >= 0; --j) {
        if (j == coord) continue;
        if (context[j] + 1 < domain) {
          ++context[j];
          more = true;
          break;
        }
        context[j] = 0;
      }
    }
    rep.coordinate_trends[coord] = all_preserving ? Trend::Preserving
                                   : all_reversing ? Trend::Reversing
                                                   : Trend::Mixed;
  }
  return rep;
}

}  // namespace

MonotoneReport check_monotone(const NaryOp& f, const Poset& order) {
  if (order.size != f.k) throw InputError("order size does not match the operation domain");
  order.validate();
  std::vector<Element> section(f.k, 0);
  return scan_sections(
      f.k, f.n, [&](std::span<const Element> tup) { return f(tup); },
      [&](int v, int w) { return order.le(v, w); },
      [&](Element a, Element b) { return order.le(a, b); }, section);
}

MonotoneReport check_monotone(const NaryOp& f) { return check_monotone(f, Poset::chain(f.k)); }

bool check_monotone_increasing(const NaryOp& f, const Poset& order) {
  if (order.size != f.k) throw InputError("order size does not match the operation domain");
  order.validate();
  std::vector<Element> section(f.k, 0);
  bool increasing = true;
  scan_sections(
      f.k, f.n, [&](std::span<const Element> tup) { return f(tup); },
      [&](int v, int w) { return order.le(v, w); },
      [&](Element a, Element b) { return order.le(a, b); }, section, &increasing);
  return increasing;
}

bool check_monotone_increasing(const NaryOp& f) {
  return check_monotone_increasing(f, Poset::chain(f.k));
}

std::vector<Element> find_neutral_elements(const NaryOp& f) {
  std::vector<Element> out;
  std::vector<Element> tup(f.n, 0);
  for (Element e = 0; e < f.k; ++e) {
    bool neutral = true;
    for (int pos = 0; pos < f.n && neutral; ++pos) {
      for (Element x = 0; x < f.k && neutral; ++x) {
        std::fill(tup.begin(), tup.end(), e);
        tup[pos] = x;
        if (f(tup) != x) neutral = false;
      }
    }
    if (neutral) out.push_back(e);
  }
  return out;
}

CheckReport check_nary_group(const NaryOp& f) {
  CheckReport r;
  std::vector<Element> tup(f.n, 0);
  std::vector<Element> hit_at(f.k, -1);
  for (int coord = 0; coord < f.n; ++coord) {
    std::vector<Element> context(f.n, 0);
    bool more = true;
    while (more) {
      std::fill(hit_at.begin(), hit_at.end(), -1);
      for (int j = 0; j < f.n; ++j) tup[j] = context[j];
      for (Element v = 0; v < f.k; ++v) {
        tup[coord] = v;
        ++r.cases_checked;
        Element out = f(tup);
        if (hit_at[out] >= 0) {
          r.ok = false;
          Witness wit;
          wit.property = "unique solvability";
          wit.position = coord;
          tup[coord] = hit_at[out];
          wit.inputs = to_longs(tup);
          tup[coord] = v;
          for (Element x : tup) wit.inputs.push_back(x);
          wit.lhs = out;
          wit.rhs = out;
          r.witnesses.push_back(std::move(wit));
          return r;
        }
        hit_at[out] = v;
      }
      more = false;
      for (int j = f.n - 1; j >= 0; --j) {
        if (j == coord) continue;
        if (context[j] + 1 < f.k) {
          ++context[j];
          more = true;
          break;
        }
        context[j] = 0;
      }
    }
  }
  return r;
}

std::vector<std::pair<Element, Element>> noncommutative_pairs(const BinTable& t) {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < t.k; ++x) {
    for (Element y = 0; y < t.k; ++y) {
      if (t(x, y) != t(y, x)) out.emplace_back(x, y);
    }
  }
  return out;
}

ClassReport class_check(const BinTable& t) {
  ClassReport rep;
  NaryOp f = NaryOp::from_table(t);

  CheckReport assoc = check_n_associative(f);
  rep.associative = assoc.ok;
  CheckReport idem = idempotency_report(f);
  rep.idempotent = idem.ok;
  MonotoneReport mono = check_monotone(f);
  rep.monotone = mono.ok;
  rep.monotone_increasing = check_monotone_increasing(f);
  rep.quasitrivial = check_quasitrivial(f);
  rep.neutrals = find_neutral_elements(f);
  rep.in_class = rep.associative && rep.idempotent && rep.monotone && !rep.neutrals.empty();

  for (auto& w : assoc.witnesses) rep.witnesses.push_back(std::move(w));
  for (auto& w : idem.witnesses) rep.witnesses.push_back(std::move(w));
  for (auto& w : mono.witnesses) rep.witnesses.push_back(std::move(w));
  return rep;
}

bool is_class_table(const BinTable& t) {
  const int k = t.k;
  for (Element x = 0; x < k; ++x) {
    if (t(x, x) != x) return false;
  }
  bool has_neutral = false;
  for (Element e = 0; e < k && !has_neutral; ++e) {
    bool ok = true;
    for (Element x = 0; x < k && ok; ++x) {
      ok = t(e, x) == x && t(x, e) == x;
    }
    has_neutral = ok;
  }
  if (!has_neutral) return false;
  // Per-context monotonicity of a binary table: every row and every column,
  // read as a unary section, is nondecreasing or nonincreasing.
  for (Element x = 0; x < k; ++x) {
    bool up = false, down = false;
    for (Element y = 0; y + 1 < k; ++y) {
      if (t(x, y) < t(x, y + 1)) up = true;
      if (t(x, y) > t(x, y + 1)) down = true;
    }
    if (up && down) return false;
    up = down = false;
    for (Element y = 0; y + 1 < k; ++y) {
      if (t(y, x) < t(y + 1, x)) up = true;
      if (t(y, x) > t(y + 1, x)) down = true;
    }
    if (up && down) return false;
  }
  for (Element x = 0; x < k; ++x) {
    for (Element y = 0; y < k; ++y) {
      const Element xy = t(x, y);
      for (Element z = 0; z < k; ++z) {
        if (t(xy, z) != t(x, t(y, z))) return false;
      }
    }
  }
  return true;
}

long long IntWindowOp::operator()(std::span<const long long> tuple) const {
  if (static_cast<int>(tuple.size()) != n) {
    throw InputError("tuple length does not match the operation arity");
  }
  for (long long x : tuple) {
    if (x < lo || x > hi) throw InputError("tuple value outside the window");
  }
  return fn(tuple);
}

CheckReport window_idempotency_report(const IntWindowOp& f) {
  CheckReport r;
  for (long long a = f.lo; a <= f.hi; ++a) {
    std::vector<long long> tup(f.n, a);
    ++r.cases_checked;
    long long v = f(tup);
    if (v != a) {
      r.ok = false;
      r.witnesses.push_back({"idempotency", {a}, v, a, -1});
      return r;
    }
  }
  return r;
}

namespace {

MonotoneReport window_scan(const IntWindowOp& f, bool* increasing_only) {
  const int domain = static_cast<int>(f.hi - f.lo + 1);
  std::vector<long long> tup(f.n, 0);
  std::vector<long long> section(domain, 0);
  auto eval = [&](std::span<const Element> idx) {
    for (int j = 0; j < f.n; ++j) tup[j] = f.lo + idx[j];
    return f(tup);
  };
  MonotoneReport rep =
      scan_sections(domain, f.n, eval, [](int v, int w) { return v <= w; },
                    [](long long a, long long b) { return a <= b; }, section, increasing_only);
  // Witness inputs were recorded as domain indices; shift them to values.
  for (auto& w : rep.witnesses) {
    for (auto& x : w.inputs) x += f.lo;
  }
  return rep;
}

}  // namespace

MonotoneReport window_check_monotone(const IntWindowOp& f) { return window_scan(f, nullptr); }

bool window_check_monotone_increasing(const IntWindowOp& f) {
  bool increasing = true;
  window_scan(f, &increasing);
  return increasing;
}

CheckReport window_associative2(const IntWindowOp& f) {
  if (f.n != 2) throw InputError("associativity on a window is a binary check");
  CheckReport r;
  std::vector<long long> ab(2, 0);
  for (long long x = f.lo; x <= f.hi; ++x) {
    for (long long y = f.lo; y <= f.hi; ++y) {
      ab[0] = x;
      ab[1] = y;
      long long xy = f(ab);
      if (xy < f.lo || xy > f.hi) continue;
      for (long long z = f.lo; z <= f.hi; ++z) {
        ab[0] = y;
        ab[1] = z;
        long long yz = f(ab);
        if (yz < f.lo || yz > f.hi) continue;
        ++r.cases_checked;
        ab[0] = xy;
        ab[1] = z;
        long long lhs = f(ab);
        ab[0] = x;
        ab[1] = yz;
        long long rhs = f(ab);
        if (lhs != rhs) {
          r.ok = false;
          r.witnesses.push_back({"associativity", {x, y, z}, lhs, rhs, -1});
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace chainops
