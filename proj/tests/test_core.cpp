#include "doctest.h"

#include "chainops/construct.hpp"
#include "chainops/core.hpp"

using namespace chainops;

TEST_CASE("chain validates its size") {
  CHECK_THROWS_AS(Chain(0), InputError);
  CHECK_THROWS_AS(Chain(-2), InputError);
  Chain c(3);
  CHECK(c.top() == 2);
  CHECK(c.contains(0));
  CHECK(c.contains(2));
  CHECK_FALSE(c.contains(3));
  CHECK_FALSE(c.contains(-1));
}

TEST_CASE("extended values distinguish points from gaps") {
  const ExtValue p = ExtValue::point(1);
  CHECK(p.is_point());
  CHECK(p.as_point() == 1);
  CHECK(p.twice() == 2);
  CHECK(p.numeric() == doctest::Approx(1.0));

  const ExtValue gap = ExtValue::gap_above(1);  // the value 1.5
  CHECK_FALSE(gap.is_point());
  CHECK(gap.twice() == 3);
  CHECK(gap.numeric() == doctest::Approx(1.5));
  CHECK_THROWS_AS(gap.as_point(), std::logic_error);

  CHECK(ExtValue::from_twice(3) == gap);
  CHECK(p < gap);
  CHECK(gap < ExtValue::point(2));
}

TEST_CASE("comparison of extended values against chain elements") {
  Chain c(3);
  CHECK(ext_compare(c, ExtValue::gap_above(1), 2) == Ordering::Less);
  CHECK(ext_compare(c, ExtValue::point(1), 1) == Ordering::Equal);
  CHECK(ext_compare(c, ExtValue::gap_above(1), 1) == Ordering::Greater);

  // A gap value never compares equal to a chain element.
  for (int tw = 1; tw <= 3; tw += 2) {
    for (Element y = 0; y < 3; ++y) {
      CHECK(ext_compare(c, ExtValue::from_twice(tw), y) != Ordering::Equal);
    }
  }

  CHECK_THROWS_AS(ext_compare(c, ExtValue::point(3), 0), InputError);  // beyond the top
  CHECK_THROWS_AS(ext_compare(c, ExtValue::point(1), 3), InputError);
  CHECK_THROWS_AS(ext_compare(c, ExtValue::point(1), -1), InputError);
}

TEST_CASE("table construction validates shape and entries") {
  CHECK_THROWS_AS(BinTable(0, {}), InputError);
  CHECK_THROWS_AS(BinTable(2, {0, 1, 1}), InputError);         // wrong size
  CHECK_THROWS_AS(BinTable(2, {0, 1, 1, 2}), InputError);      // entry out of range
  CHECK_THROWS_AS(BinTable(2, {0, -1, 1, 1}), InputError);     // negative entry
  const BinTable t(2, {0, 0, 0, 1});
  CHECK(t(0, 0) == 0);
  CHECK(t(1, 1) == 1);
  CHECK(t(1, 0) == 0);
}

TEST_CASE("table lookups are range checked") {
  const BinTable& t = rx3().table;
  CHECK(table_apply(t, 0, 2) == 2);
  CHECK(table_apply(t, 1, 0) == 0);
  CHECK(table_apply(t, 2, 2) == 2);
  CHECK_THROWS_AS(table_apply(t, 3, 0), InputError);
  CHECK_THROWS_AS(table_apply(t, 0, -1), InputError);
}

TEST_CASE("fold evaluation right-nests the table") {
  const BinTable& t = rx3().table;
  CHECK(fold_eval(t, Word{0, 1, 2}) == 2);  // F(0, F(1, 2)) = F(0, 2)
  CHECK(fold_eval(t, Word{2, 1, 0}) == 0);  // F(2, F(1, 0)) = F(2, 0)
  for (Element x = 0; x < 3; ++x) {
    CHECK(fold_eval(t, Word{x}) == x);
  }
  CHECK_THROWS_AS(fold_eval(t, Word{}), InputError);
  CHECK_THROWS_AS(fold_eval(t, Word{0, 3}), InputError);
}

TEST_CASE("length-two folds equal table lookups") {
  for (const Fixture* fx : {&rx3(), &min3(), &max3()}) {
    const BinTable& t = fx->table;
    for (Element x = 0; x < t.k; ++x) {
      for (Element y = 0; y < t.k; ++y) {
        CHECK(fold_eval(t, Word{x, y}) == table_apply(t, x, y));
      }
    }
  }
}

TEST_CASE("folds split across concatenation for associative tables") {
  for (const Fixture* fx : {&rx3(), &min3(), &max3()}) {
    const BinTable& t = fx->table;
    for (int len1 = 1; len1 <= 3; ++len1) {
      for (int len2 = 1; len2 <= 3; ++len2) {
        Word w1(len1, 0), w2(len2, 0);
        do {
          do {
            Word joined = w1;
            joined.insert(joined.end(), w2.begin(), w2.end());
            CHECK(fold_eval(t, joined) ==
                  table_apply(t, fold_eval(t, w1), fold_eval(t, w2)));
          } while (next_tuple(w2, t.k));
        } while (next_tuple(w1, t.k));
      }
    }
  }
}

TEST_CASE("tuple odometer walks the whole space in lexicographic order") {
  std::vector<Element> tup(2, 0);
  std::vector<std::vector<Element>> seen;
  do {
    seen.push_back(tup);
  } while (next_tuple(tup, 2));
  const std::vector<std::vector<Element>> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(seen == expected);
}
