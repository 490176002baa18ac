// Acceptance gate: twelve end-to-end criteria, each printed as one PASS/FAIL
// line with its elapsed time and enforced runtime limit. Every comparison is
// exact integer equality; there are no tolerances anywhere. Exit code 0 means
// every criterion passed within its limit.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chainops/construct.hpp"
#include "chainops/core.hpp"
#include "chainops/evaluate.hpp"
#include "chainops/explore.hpp"
#include "chainops/extract.hpp"
#include "chainops/gspec.hpp"
#include "chainops/verify.hpp"

using namespace chainops;

namespace {

Element neutral_of(const BinTable& t) {
  return find_neutral_elements(NaryOp::from_table(t)).front();
}

// 1. The shipped fixtures rebuild from their generating data, pass the class
//    check, and the reflection table's noncommutative pairs are exactly
//    (0,2) and (2,0).
bool fixtures_pass() {
  for (const Fixture* fx : {&rx3(), &min3(), &max3()}) {
    if (build_table(fx->gspec) != fx->table) return false;
    if (!class_check(fx->table).in_class) return false;
  }
  const std::vector<std::pair<Element, Element>> want{{0, 2}, {2, 0}};
  return noncommutative_pairs(rx3().table) == want &&
         noncommutative_pairs(min3().table).empty() &&
         noncommutative_pairs(max3().table).empty();
}

// 2. One-pass evaluation agrees with the right-nested fold on every tuple of
//    every class table up to chain size 4, arity 1 through 5.
bool fast_matches_fold() {
  for (int k = 1; k <= 4; ++k) {
    for (const BinTable& t : enumerate_class_brute(k)) {
      const Element e = neutral_of(t);
      for (int n = 1; n <= 5; ++n) {
        std::vector<Element> tup(n, 0);
        do {
          if (fast_eval(t, e, tup) != fold_eval(t, tup)) return false;
        } while (next_tuple(tup, k));
      }
    }
  }
  return true;
}

// 3. Tuples reduce to their endpoints: padding with the neutral element, and
//    more generally any middle entries between min(a,b) and max(a,b), leave
//    the value at t(first, last).
bool endpoint_reduction() {
  for (int k = 1; k <= 4; ++k) {
    for (const BinTable& t : enumerate_class_brute(k)) {
      const Element e = neutral_of(t);
      for (int n = 2; n <= 5; ++n) {
        std::vector<Element> tup(n, e);
        for (Element a = 0; a < k; ++a) {
          for (Element b = 0; b < k; ++b) {
            std::fill(tup.begin(), tup.end(), e);
            tup.front() = a;
            tup.back() = b;
            if (fast_eval(t, e, tup) != t(a, b)) return false;

            const Element lo = std::min(a, b);
            const int width = std::max(a, b) - lo + 1;
            std::vector<int> mid(n - 2, 0);
            bool more = true;
            while (more) {
              tup.front() = a;
              tup.back() = b;
              for (int i = 0; i < n - 2; ++i) tup[i + 1] = lo + mid[i];
              if (fast_eval(t, e, tup) != t(a, b)) return false;
              more = false;
              for (int i = n - 3; i >= 0; --i) {
                if (mid[i] + 1 < width) {
                  ++mid[i];
                  more = true;
                  break;
                }
                mid[i] = 0;
              }
            }
          }
        }
      }
    }
  }
  return true;
}

// 4. Extracting the binary table back out of the derived 3-ary operation is
//    the identity, and distinct tables derive distinct operations.
bool extraction_inverts() {
  for (int k = 1; k <= 4; ++k) {
    const std::vector<BinTable> tables = enumerate_class_brute(k);
    std::set<std::vector<Element>> images;
    for (const BinTable& t : tables) {
      const NaryOp f3 = NaryOp::derived(t, 3);
      if (extract_binary(f3, neutral_of(t)) != t) return false;
      images.insert(materialize(f3));
    }
    if (images.size() != tables.size()) return false;
  }
  return true;
}

// 5. Every class table on chains up to size 3 (searched over the full table
//    space) is quasitrivial, and stays quasitrivial at arities 2 through 4.
bool quasitriviality_small() {
  for (int k = 1; k <= 3; ++k) {
    for (const BinTable& t : enumerate_class_brute(k, BruteSpace::Full)) {
      for (int n = 2; n <= 4; ++n) {
        if (!check_quasitrivial(NaryOp::derived(t, n))) return false;
      }
    }
  }
  return true;
}

// 6. The generating-data enumeration and the direct table search find the
//    same tables: exactly 2, 6 and 16 of them for chain sizes 2, 3 and 4.
bool enumerations_agree() {
  const long long expected[] = {0, 1, 2, 6, 16};
  for (int k = 2; k <= 4; ++k) {
    const EnumReport r = compare_enumerations(k);
    if (!r.matched) return false;
    if (r.count_gspec != expected[k] || r.count_brute != expected[k]) return false;
  }
  return true;
}

// 7. Monotonicity sharpens on class tables: every one of them, up to chain
//    size 4, is monotone increasing in both coordinates.
bool increasing_everywhere() {
  for (int k = 1; k <= 4; ++k) {
    for (const BinTable& t : enumerate_class_brute(k)) {
      if (!check_monotone_increasing(NaryOp::from_table(t))) return false;
    }
  }
  return true;
}

// 8. Idempotency persists under derivation: for every class table up to
//    chain size 4 the derived operations of arity 2 through 5 are idempotent.
bool derived_idempotent() {
  for (int k = 1; k <= 4; ++k) {
    for (const BinTable& t : enumerate_class_brute(k)) {
      for (int j = 2; j <= 5; ++j) {
        if (!check_idempotent(NaryOp::derived(t, j))) return false;
      }
    }
  }
  return true;
}

// 9. The bounded-poset fixture (group order 3): associative, monotone over
//    its poset, neutral element 1; folding 4 arguments is idempotent while
//    folding 3 is not, witnessed by a non-identity residue.
bool poset_fixture_behaves() {
  const PosetFixture fx = build_poset_fixture(3);
  const NaryOp f = NaryOp::from_table(fx.op);
  if (!check_n_associative(f).ok) return false;
  if (!check_monotone(f, fx.poset).ok) return false;
  if (find_neutral_elements(f) != std::vector<Element>{1}) return false;
  if (!check_idempotent(NaryOp::derived(fx.op, 4))) return false;
  const CheckReport idem3 = idempotency_report(NaryOp::derived(fx.op, 3));
  return !idem3.ok && !idem3.witnesses.empty() &&
         idem3.witnesses.front().inputs == std::vector<long long>{2};
}

// 10. The ternary alternating sum mod 5: 3-associative and uniquely solvable
//     in every coordinate, yet without a neutral element; on an integer window
//     its coordinates are alternately preserving / reversing, so it is
//     monotone without being monotone increasing.
bool alternating_behaves() {
  const NaryOp g3 = build_alternating(5, 3);
  if (!check_n_associative(g3).ok) return false;
  if (!check_nary_group(g3).ok) return false;
  if (!find_neutral_elements(g3).empty()) return false;
  const IntWindowOp w = alternating_window(3, -5, 5);
  const MonotoneReport mr = window_check_monotone(w);
  const std::vector<Trend> want{Trend::Preserving, Trend::Reversing, Trend::Preserving};
  return mr.ok && mr.coordinate_trends == want && !window_check_monotone_increasing(w);
}

// 11. The level-set condition does not imply the symmetry surrogate: the
//     search up to chain size 3 finds separating generating data, among them
//     the constant threshold g = 1 on the 3-chain.
bool gap_exists() {
  const std::vector<MmtGapWitness> ws = find_mmt_gap(3);
  if (ws.empty()) return false;
  bool flat_seen = false;
  for (const MmtGapWitness& w : ws) {
    if (!w.mmt || w.sym) return false;
    if (!mmt_condition(w.gspec) || sym_check(w.gspec)) return false;
    if (w.gspec.g == std::vector<ExtValue>(3, ExtValue::point(1))) flat_seen = true;
  }
  return flat_seen;
}

// 12. The concatenation law holds exhaustively up to word length 5 on every
//     class table of chain size 3.
bool word_law_holds() {
  for (const BinTable& t : enumerate_class_brute(3)) {
    const WordLawReport r = check_word_law(t, 5);
    if (!r.ok || !r.exhaustive) return false;
  }
  return true;
}

struct Criterion {
  std::string description;
  long long limit_ms;  // -1 means no limit (measured only)
  std::function<bool()> fn;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"shipped fixtures rebuild, pass the class check, and the reflection table's "
       "noncommutative pairs are exactly (0,2),(2,0)",
       1000, fixtures_pass},
      {"one-pass evaluation equals the fold oracle on all class tables (chains to size 4, "
       "arities to 5)",
       60000, fast_matches_fold},
      {"neutral padding and inner-range middles reduce every tuple to its endpoint value",
       60000, endpoint_reduction},
      {"binary extraction inverts 3-ary derivation and derivation is injective (chains to "
       "size 4)",
       60000, extraction_inverts},
      {"class tables on chains to size 3 are quasitrivial at arities 2 through 4", 10000,
       quasitriviality_small},
      {"generating-data and direct enumeration agree: 2, 6, 16 tables for chain sizes 2, 3, 4",
       300000, enumerations_agree},
      {"every class table to chain size 4 is monotone increasing", 60000,
       increasing_everywhere},
      {"derived operations of class tables stay idempotent at arities 2 through 5", -1,
       derived_idempotent},
      {"bounded-poset fixture: associative, poset-monotone, neutral 1, fold of 4 idempotent "
       "but fold of 3 not",
       1000, poset_fixture_behaves},
      {"alternating sum mod 5: 3-associative group without neutral element, mixed-trend "
       "monotone on a window",
       5000, alternating_behaves},
      {"level-set condition without the symmetry surrogate exists, including constant g = 1 "
       "on the 3-chain",
       1000, gap_exists},
      {"concatenation law holds exhaustively to word length 5 on all chain-size-3 class "
       "tables",
       60000, word_law_holds},
  };

  std::cout << "acceptance: 12 criteria, exact integer comparisons, no tolerances\n";
  int passed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto started = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      ok = false;
      error = e.what();
    }
    const auto elapsed = std::chrono::steady_clock::now() - started;
    const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    const bool within = c.limit_ms < 0 || ms <= c.limit_ms;
    const bool pass = ok && within;
    if (pass) ++passed;
    std::cout << "criterion " << std::setw(2) << (i + 1) << ": " << (pass ? "PASS" : "FAIL")
              << " - " << c.description << " (" << ms << " ms, ";
    if (c.limit_ms < 0) {
      std::cout << "no limit";
    } else {
      std::cout << "limit " << c.limit_ms << " ms";
    }
    std::cout << ")\n";
    if (!error.empty()) std::cout << "  error: " << error << '\n';
    if (ok && !within) std::cout << "  exceeded the runtime limit\n";
  }
  std::cout << passed << "/12 criteria passed\n";
  return passed == 12 ? 0 : 1;
}
