#include "chainops/explore.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

#include "chainops/construct.hpp"

namespace chainops {

namespace {

void append_tau_assignments(const GSpec& base, const std::vector<CriticalPair>& pairs,
                            std::vector<GSpec>& out) {
  const size_t bits = pairs.size();
  for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
    GSpec s = base;
    for (size_t i = 0; i < bits; ++i) {
      s.ties.emplace(std::pair{pairs[i].a, pairs[i].b},
                     (mask >> i) & 1 ? Tie::Max : Tie::Min);
    }
    out.push_back(std::move(s));
  }
}

void enumerate_g_rec(int k, int max_twice, std::vector<ExtValue>& g, int row,
                     std::vector<GSpec>& out) {
  if (row == k) {
    Element e = -1;
    for (Element x = 0; x < k; ++x) {
      if (g[x] == ExtValue::point(x)) {
        e = x;
        break;  // a non-increasing g has at most one integer fixed point
      }
    }
    if (e < 0) return;
    GSpec base{k, e, g, {}};
    std::vector<CriticalPair> pairs;
    for (Element a = 0; a < k; ++a) {
      if (!g[a].is_point()) continue;
      const Element b = g[a].as_point();
      if (a != b && g[b] == ExtValue::point(a)) pairs.push_back({a, b});
    }
    append_tau_assignments(base, pairs, out);
    return;
  }
  const int upper = row == 0 ? max_twice : g[row - 1].twice();
  for (int tw = 0; tw <= upper; ++tw) {
    g[row] = ExtValue::from_twice(tw);
    enumerate_g_rec(k, max_twice, g, row + 1, out);
  }
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  if (const char* env = std::getenv("CHAINOPS_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

/// Runs check(i) for i in [0, total) across `workers` threads and returns
/// the accepted tables sorted. decode(i) must be a pure function of i.
template <typename Decode>
std::vector<BinTable> parallel_filter(long long total, int workers, Decode&& decode) {
  if (workers < 1) workers = 1;
  if (total > 0 && workers > total) workers = static_cast<int>(total);
  std::vector<std::vector<BinTable>> found(workers);
  auto work = [&](int w) {
    const long long begin = total * w / workers;
    const long long end = total * (w + 1) / workers;
    for (long long i = begin; i < end; ++i) {
      BinTable t = decode(i);
      if (is_class_table(t)) found[w].push_back(std::move(t));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  std::vector<BinTable> out;
  for (auto& part : found) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<GSpec> enumerate_gspecs(int k) {
  if (k < 1) throw InputError("chain size must be at least 1");
  if (k > 6) throw GuardError("generating-data enumeration is limited to chains of size 6");
  std::vector<GSpec> out;
  std::vector<ExtValue> g(k, ExtValue::point(0));
  enumerate_g_rec(k, 2 * (k - 1), g, 0, out);
  return out;
}

std::vector<BinTable> enumerate_class_brute(int k, BruteSpace space, int workers) {
  if (k < 1) throw InputError("chain size must be at least 1");
  if (space == BruteSpace::Auto) {
    space = k <= 3 ? BruteSpace::Full : BruteSpace::Quasitrivial;
  }
  workers = resolve_workers(workers);
  if (space == BruteSpace::Full) {
    if (k > 3) throw GuardError("full table space is enumerable only up to chains of size 3");
    const int cells = k * k;
    long long total = 1;
    for (int i = 0; i < cells; ++i) total *= k;
    return parallel_filter(total, workers, [k, cells](long long idx) {
      std::vector<Element> entries(cells, 0);
      for (int c = cells - 1; c >= 0; --c) {
        entries[c] = static_cast<Element>(idx % k);
        idx /= k;
      }
      return BinTable(k, std::move(entries));
    });
  }
  if (k > 5) throw GuardError("quasitrivial table space is enumerable only up to chains of size 5");
  const int cells = k * k - k;  // off-diagonal cells, row-major order
  const long long total = 1LL << cells;
  return parallel_filter(total, workers, [k](long long idx) {
    std::vector<Element> entries(static_cast<size_t>(k) * k, 0);
    int bit = 0;
    for (Element x = 0; x < k; ++x) {
      for (Element y = 0; y < k; ++y) {
        if (x == y) {
          entries[static_cast<size_t>(x) * k + y] = x;
        } else {
          const bool take_max = (idx >> bit) & 1;
          entries[static_cast<size_t>(x) * k + y] = take_max ? std::max(x, y) : std::min(x, y);
          ++bit;
        }
      }
    }
    return BinTable(k, std::move(entries));
  });
}

GspecEnumeration enumerate_class_gspec(int k) {
  if (k < 1) throw InputError("chain size must be at least 1");
  if (k > 5) throw GuardError("generating-data table enumeration is limited to chains of size 5");
  std::map<BinTable, GeneratorAudit> seen;
  for (const GSpec& s : enumerate_gspecs(k)) {
    BinTable t = build_table(s);
    if (!is_class_table(t)) continue;
    GeneratorAudit& audit = seen[std::move(t)];
    const bool sym = sym_check(s);
    audit.has_sym_generator = audit.has_sym_generator || sym;
    bool tie_symmetric = true;
    for (const auto& [pair, choice] : s.ties) {
      if (s.tie(pair.second, pair.first) != choice) {
        tie_symmetric = false;
        break;
      }
    }
    // A generator certifies commutativity only when its completed graph is
    // id-symmetric and its tie choices are symmetric across critical pairs.
    audit.has_commutative_generator = audit.has_commutative_generator || (sym && tie_symmetric);
  }
  GspecEnumeration out;
  out.tables.reserve(seen.size());
  out.audits.reserve(seen.size());
  for (auto& [table, audit] : seen) {
    out.tables.push_back(table);
    out.audits.push_back(audit);
  }
  return out;
}

EnumReport compare_enumerations(int k, int workers) {
  EnumReport rep;
  rep.k = k;
  rep.brute_restricted_quasitrivial = k > 3;
  rep.tables_brute = enumerate_class_brute(k, BruteSpace::Auto, workers);
  rep.tables_gspec = enumerate_class_gspec(k).tables;
  rep.count_brute = static_cast<long long>(rep.tables_brute.size());
  rep.count_gspec = static_cast<long long>(rep.tables_gspec.size());
  rep.matched = rep.tables_brute == rep.tables_gspec;
  for (const BinTable& t : rep.tables_gspec) {
    if (!noncommutative_pairs(t).empty()) ++rep.extra_critical_count;
  }
  return rep;
}

std::vector<MmtGapWitness> find_mmt_gap(int kmax) {
  if (kmax < 1) throw InputError("chain size must be at least 1");
  if (kmax > 6) throw GuardError("gap search is limited to chains of size 6");
  std::vector<MmtGapWitness> out;
  for (int k = 1; k <= kmax; ++k) {
    for (const GSpec& s : enumerate_gspecs(k)) {
      if (!mmt_condition(s) || sym_check(s)) continue;
      MmtGapWitness w;
      w.gspec = s;
      w.table_in_class = is_class_table(build_table(s));
      out.push_back(std::move(w));
    }
  }
  return out;
}

PosetFixture build_poset_fixture(int q) {
  if (q < 2) throw InputError("group order must be at least 2");
  const int size = q + 2;
  const Element bottom = 0;
  const Element top = q + 1;
  PosetFixture fx;
  fx.q = q;
  fx.neutral = 1;

  std::vector<std::uint8_t> leq(static_cast<size_t>(size) * size, 0);
  auto set_le = [&](Element a, Element b) { leq[static_cast<size_t>(a) * size + b] = 1; };
  for (Element a = 0; a < size; ++a) {
    set_le(a, a);
    set_le(bottom, a);
    set_le(a, top);
  }
  fx.poset = Poset(size, std::move(leq));
  fx.poset.validate();

  std::vector<Element> entries(static_cast<size_t>(size) * size, 0);
  for (Element x = 0; x < size; ++x) {
    for (Element y = 0; y < size; ++y) {
      Element v;
      if (x == top || y == top) {
        v = top;
      } else if (x == bottom || y == bottom) {
        v = bottom;
      } else {
        v = 1 + (x - 1 + y - 1) % q;
      }
      entries[static_cast<size_t>(x) * size + y] = v;
    }
  }
  fx.op = BinTable(size, std::move(entries));
  return fx;
}

NaryOp build_alternating(int m, int n) {
  if (n % 2 == 0) throw InputError("alternating sum needs an odd arity");
  if (n < 3) throw InputError("alternating sum needs arity at least 3");
  if (m < 2) throw InputError("modulus must be at least 2");
  return {m, n, [m](std::span<const Element> tup) {
            long long acc = 0;
            for (size_t i = 0; i < tup.size(); ++i) {
              acc += i % 2 == 0 ? tup[i] : -static_cast<long long>(tup[i]);
            }
            return static_cast<Element>(((acc % m) + m) % m);
          }};
}

IntWindowOp alternating_window(int n, long long lo, long long hi) {
  if (n % 2 == 0) throw InputError("alternating sum needs an odd arity");
  if (n < 3) throw InputError("alternating sum needs arity at least 3");
  if (lo > hi) throw InputError("window bounds are reversed");
  return {lo, hi, n, [](std::span<const long long> tup) {
            long long acc = 0;
            for (size_t i = 0; i < tup.size(); ++i) {
              acc += i % 2 == 0 ? tup[i] : -tup[i];
            }
            return acc;
          }};
}

}  // namespace chainops
