#include <vector>

#include "doctest.h"

#include "chainops/construct.hpp"
#include "chainops/core.hpp"
#include "chainops/explore.hpp"
#include "chainops/verify.hpp"

using namespace chainops;

namespace {

/// f(x,y) = x when x == y, else 0: associative and idempotent on {0,1,2} but
/// not monotone (the section f(., 1) goes 0, 1, 0).
BinTable diagonal_table() { return BinTable(3, {0, 0, 0, 0, 1, 0, 0, 0, 2}); }

/// f(x,y) = x + 2y mod 3: not associative.
BinTable affine_table() { return BinTable(3, {0, 2, 1, 1, 0, 2, 2, 1, 0}); }

/// The reflection table with row 0 corrupted to [0,2,2]: still associative
/// and idempotent, but column 1 reads 2, 1, 2, so monotonicity fails and no
/// neutral element survives.
BinTable corrupted_table() { return BinTable(3, {0, 2, 2, 0, 1, 2, 0, 2, 2}); }

/// f(x,y) = 1 except f(2,2) = 0: associative and monotone, not idempotent.
BinTable near_constant_table() { return BinTable(3, {1, 1, 1, 1, 1, 1, 1, 1, 0}); }

}  // namespace

TEST_CASE("binary associativity verdicts on small tables") {
  CHECK(check_n_associative(NaryOp::from_table(rx3().table)).ok);
  CHECK(check_n_associative(NaryOp::from_table(diagonal_table())).ok);

  const CheckReport bad = check_n_associative(NaryOp::from_table(affine_table()));
  CHECK_FALSE(bad.ok);
  REQUIRE_FALSE(bad.witnesses.empty());
  const Witness& w = bad.witnesses.front();
  // The witness records a 3-tuple and the insertion position that disagreed
  // with position 0; replaying it must reproduce the inequality.
  REQUIRE(w.inputs.size() == 3);
  CHECK(w.position >= 1);
  CHECK(w.lhs != w.rhs);
  const BinTable t = affine_table();
  const Element x0 = static_cast<Element>(w.inputs[0]);
  const Element x1 = static_cast<Element>(w.inputs[1]);
  const Element x2 = static_cast<Element>(w.inputs[2]);
  CHECK(t(t(x0, x1), x2) == w.lhs);
  if (w.position == 1) CHECK(t(x0, t(x1, x2)) == w.rhs);
}

TEST_CASE("collapse-anywhere associativity holds for derived operations") {
  const NaryOp f3 = NaryOp::derived(rx3().table, 3);
  const CheckReport r = check_n_associative(f3);
  CHECK(r.ok);
  CHECK(r.cases_checked == 486);  // 3^(2*3-1) tuples, two collapse comparisons each
  CHECK(check_n_associative(NaryOp::derived(min3().table, 4)).ok);
}

TEST_CASE("the alternating sum is 3-associative and uniquely solvable mod 5") {
  const NaryOp g3 = build_alternating(5, 3);
  CHECK(g3(std::vector<Element>{1, 2, 3}) == 2);  // 1 - 2 + 3
  CHECK(check_n_associative(g3).ok);
  CHECK(check_nary_group(g3).ok);

  // Tables whose sections are not bijections fail unique solvability.
  CHECK_FALSE(check_nary_group(NaryOp::from_table(min3().table)).ok);
}

TEST_CASE("idempotency reports carry replayable witnesses") {
  CHECK(check_idempotent(NaryOp::from_table(min3().table)));
  CHECK(check_idempotent(NaryOp::derived(rx3().table, 5)));
  // a - a + a = a, so the alternating sum is idempotent at every modulus.
  CHECK(check_idempotent(build_alternating(5, 3)));

  const CheckReport r = idempotency_report(NaryOp::from_table(near_constant_table()));
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front().inputs == std::vector<long long>{0});
  CHECK(r.witnesses.front().lhs == 1);
  CHECK(r.witnesses.front().rhs == 0);
}

TEST_CASE("quasitriviality accepts choice functions and rejects the rest") {
  CHECK(check_quasitrivial(NaryOp::from_table(rx3().table)));
  CHECK(check_quasitrivial(NaryOp::derived(rx3().table, 4)));
  CHECK(check_quasitrivial(NaryOp::from_table(min3().table)));

  const CheckReport r = quasitriviality_report(build_alternating(5, 3));
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.witnesses.empty());
  // 0 - 1 + 0 = -1 = 4 mod 5, which is not among the inputs.
  CHECK(r.witnesses.front().inputs == std::vector<long long>{0, 1, 0});
  CHECK(r.witnesses.front().lhs == 4);
}

TEST_CASE("per-variable monotonicity allows order-reversing sections") {
  CHECK(check_monotone(NaryOp::from_table(rx3().table)).ok);
  CHECK(check_monotone(NaryOp::from_table(near_constant_table())).ok);

  const MonotoneReport bad = check_monotone(NaryOp::from_table(diagonal_table()));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.witnesses.empty());

  // x XOR y: every section is monotone in one direction or the other, but the
  // directions differ between sections of the same coordinate.
  const NaryOp x0r = NaryOp::from_table(BinTable(2, {0, 1, 1, 0}));
  const MonotoneReport xr = check_monotone(x0r);
  CHECK(xr.ok);
  REQUIRE(xr.coordinate_trends.size() == 2);
  CHECK(xr.coordinate_trends[0] == Trend::Mixed);
  CHECK(xr.coordinate_trends[1] == Trend::Mixed);
  CHECK_FALSE(check_monotone_increasing(x0r));
}

TEST_CASE("the order-preserving refinement separates the fixtures from windows") {
  CHECK(check_monotone_increasing(NaryOp::from_table(rx3().table)));
  CHECK(check_monotone_increasing(NaryOp::from_table(max3().table)));

  const IntWindowOp g3 = alternating_window(3, -5, 5);
  const MonotoneReport r = window_check_monotone(g3);
  CHECK(r.ok);
  REQUIRE(r.coordinate_trends.size() == 3);
  CHECK(r.coordinate_trends[0] == Trend::Preserving);
  CHECK(r.coordinate_trends[1] == Trend::Reversing);
  CHECK(r.coordinate_trends[2] == Trend::Preserving);
  CHECK_FALSE(window_check_monotone_increasing(g3));
}

TEST_CASE("neutral element discovery") {
  CHECK(find_neutral_elements(NaryOp::from_table(min3().table)) == std::vector<Element>{2});
  CHECK(find_neutral_elements(NaryOp::from_table(max3().table)) == std::vector<Element>{0});
  CHECK(find_neutral_elements(NaryOp::from_table(rx3().table)) == std::vector<Element>{1});
  CHECK(find_neutral_elements(NaryOp::derived(rx3().table, 3)) == std::vector<Element>{1});
  CHECK(find_neutral_elements(build_alternating(5, 3)).empty());
  // Whether the alternating sum has neutral elements depends on the modulus:
  // mod 2, negation is the identity, so both elements are neutral (ternary
  // operations, unlike binary ones, can have several).
  CHECK(find_neutral_elements(build_alternating(2, 3)) == std::vector<Element>{0, 1});
  CHECK(check_idempotent(build_alternating(2, 3)));
}

TEST_CASE("class membership verdicts match the property checkers") {
  const ClassReport good = class_check(rx3().table);
  CHECK(good.in_class);
  CHECK(good.associative);
  CHECK(good.idempotent);
  CHECK(good.monotone);
  CHECK(good.monotone_increasing);
  CHECK(good.quasitrivial);
  CHECK(good.neutrals == std::vector<Element>{1});
  CHECK(good.witnesses.empty());

  const ClassReport corrupted = class_check(corrupted_table());
  CHECK_FALSE(corrupted.in_class);
  CHECK(corrupted.associative);
  CHECK(corrupted.idempotent);
  CHECK_FALSE(corrupted.monotone);
  CHECK(corrupted.neutrals.empty());
  CHECK_FALSE(corrupted.witnesses.empty());

  // Left projection: associative, idempotent, monotone, but no neutral.
  const ClassReport proj = class_check(BinTable(3, {0, 0, 0, 1, 1, 1, 2, 2, 2}));
  CHECK_FALSE(proj.in_class);
  CHECK(proj.associative);
  CHECK(proj.neutrals.empty());
  CHECK(proj.witnesses.empty());
}

TEST_CASE("the fast class predicate agrees with the full report everywhere") {
  // Every binary table on a 2-chain, and targeted 3-chain tables.
  for (int idx = 0; idx < 16; ++idx) {
    std::vector<Element> cells(4);
    int rest = idx;
    for (auto& c : cells) {
      c = rest % 2;
      rest /= 2;
    }
    const BinTable t(2, cells);
    CHECK(is_class_table(t) == class_check(t).in_class);
  }
  for (const BinTable& t :
       {rx3().table, min3().table, max3().table, diagonal_table(), affine_table(),
        corrupted_table(), near_constant_table()}) {
    CHECK(is_class_table(t) == class_check(t).in_class);
  }
}

TEST_CASE("class tables have exactly one neutral element and are nondecreasing") {
  for (int k = 1; k <= 3; ++k) {
    for (const BinTable& t : enumerate_class_brute(k, BruteSpace::Full)) {
      const ClassReport r = class_check(t);
      CHECK(r.in_class);
      CHECK(r.neutrals.size() == 1);
      CHECK(r.monotone_increasing);
      CHECK(r.quasitrivial);
    }
  }
}

TEST_CASE("each defining property is independent of the other two") {
  // Associative + idempotent without monotonicity.
  const ClassReport a = class_check(diagonal_table());
  CHECK(a.associative);
  CHECK(a.idempotent);
  CHECK_FALSE(a.monotone);

  // Associative + monotone without idempotency.
  const ClassReport b = class_check(near_constant_table());
  CHECK(b.associative);
  CHECK(b.monotone);
  CHECK_FALSE(b.idempotent);

  // Idempotent + monotone without associativity: f(x,y) = 2x - y on a window.
  IntWindowOp lin;
  lin.lo = -5;
  lin.hi = 5;
  lin.n = 2;
  lin.fn = [](std::span<const long long> v) { return 2 * v[0] - v[1]; };
  CHECK(window_idempotency_report(lin).ok);
  CHECK(window_check_monotone(lin).ok);
  const CheckReport c = window_associative2(lin);
  CHECK_FALSE(c.ok);
  REQUIRE_FALSE(c.witnesses.empty());
  const Witness& w = c.witnesses.front();
  // First triple in scan order with both intermediates inside the window:
  // f(f(-4,-5),-5) = f(-3,-5) = -1 but f(-4,f(-5,-5)) = f(-4,-5) = -3.
  CHECK(w.inputs == std::vector<long long>{-4, -5, -5});
  CHECK(w.lhs == -1);
  CHECK(w.rhs == -3);
}

TEST_CASE("poset validation rejects broken order relations") {
  CHECK_THROWS_AS(Poset(2, {0, 0, 0, 1}).validate(), InputError);  // not reflexive
  CHECK_THROWS_AS(Poset(2, {1, 1, 1, 1}).validate(), InputError);  // not antisymmetric
  CHECK_THROWS_AS(Poset(3, {1, 1, 0, 0, 1, 1, 0, 0, 1}).validate(),
                  InputError);  // not transitive
  CHECK_NOTHROW(Poset::chain(4).validate());
  CHECK(Poset::chain(3).le(0, 2));
  CHECK_FALSE(Poset::chain(3).le(2, 0));
}

TEST_CASE("monotonicity over an explicit poset constrains only comparable pairs") {
  const PosetFixture fx = build_poset_fixture(3);
  const NaryOp f = NaryOp::from_table(fx.op);
  CHECK(check_monotone(f, fx.poset).ok);
  // Group addition on the incomparable middle layer is wildly non-monotone
  // once the same table is read against the chain order.
  CHECK_FALSE(check_monotone(f).ok);
}

TEST_CASE("operations verify their input tuples") {
  const NaryOp f = NaryOp::from_table(rx3().table);
  CHECK_THROWS_AS(f(std::vector<Element>{0}), InputError);
  CHECK_THROWS_AS(f(std::vector<Element>{0, 3}), InputError);
  CHECK_THROWS_AS(NaryOp::derived(rx3().table, 0), InputError);
  CHECK_THROWS_AS(NaryOp::from_values(3, 2, std::vector<Element>(8, 0)), InputError);
  CHECK_THROWS_AS(materialize(NaryOp::derived(rx3().table, 3), 10), GuardError);
}

TEST_CASE("materialized value tables round-trip through from_values") {
  const NaryOp f3 = NaryOp::derived(rx3().table, 3);
  const std::vector<Element> values = materialize(f3);
  REQUIRE(values.size() == 27);
  const NaryOp g3 = NaryOp::from_values(3, 3, values);
  std::vector<Element> tup(3, 0);
  do {
    CHECK(f3(tup) == g3(tup));
  } while (next_tuple(tup, 3));
}
