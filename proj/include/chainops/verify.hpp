#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chainops/core.hpp"

namespace chainops {

/// A concrete counterexample: the inputs that broke a property and, where the
/// property is an equation, its two sides. `position` identifies the
/// insertion position / coordinate when the property has one; -1 otherwise.
struct Witness {
  std::string property;
  std::vector<long long> inputs;
  long long lhs = 0;
  long long rhs = 0;
  int position = -1;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  bool ok = true;
  std::vector<Witness> witnesses;
  long long cases_checked = 0;
};

/// Explicit partial order on {0, …, size-1}: leq[a*size+b] != 0 means a <= b.
struct Poset {
  int size = 0;
  std::vector<std::uint8_t> leq;

  Poset() = default;
  Poset(int size, std::vector<std::uint8_t> leq);

  bool le(Element a, Element b) const { return leq[static_cast<size_t>(a) * size + b] != 0; }

  /// Throws InputError unless leq is reflexive, antisymmetric and transitive.
  void validate() const;

  /// The total order 0 < 1 < … < k-1.
  static Poset chain(int k);
};

/// An n-ary operation on {0, …, k-1}, given extensionally or by a callback.
struct NaryOp {
  int k = 0;
  int n = 0;
  std::function<Element(std::span<const Element>)> fn;

  /// Evaluates after validating tuple length and element ranges.
  Element operator()(std::span<const Element> tuple) const;

  /// The binary operation of a table (n = 2).
  static NaryOp from_table(BinTable t);

  /// The n-ary operation obtained by folding n-1 applications of t.
  static NaryOp derived(BinTable t, int n);

  /// An explicit value table in lexicographic tuple order, last coordinate
  /// varying fastest. values.size() must be k^n.
  static NaryOp from_values(int k, int n, std::vector<Element> values);
};

/// Flattens f to its value table (lexicographic, last coordinate fastest).
/// Guard: k^n must not exceed max_cases.
std::vector<Element> materialize(const NaryOp& f, long long max_cases = 10'000'000);

/// Generalized associativity: for every (2n-1)-tuple the n results of
/// collapsing a contiguous n-block at positions 0..n-1 agree. Reports the
/// first violating tuple with the differing position. Guard: k^(2n-1) tuples.
CheckReport check_n_associative(const NaryOp& f, long long max_cases = 10'000'000);

/// Constant tuples map to their element.
CheckReport idempotency_report(const NaryOp& f);
bool check_idempotent(const NaryOp& f);

/// Every output occurs among the inputs (choice function).
CheckReport quasitriviality_report(const NaryOp& f);
bool check_quasitrivial(const NaryOp& f);

/// Aggregated direction of all unary sections in one coordinate.
enum class Trend { Preserving, Reversing, Mixed };

std::string to_string(Trend t);

struct MonotoneReport {
  /// Every section is order-preserving or order-reversing (direction may
  /// differ between sections of the same coordinate).
  bool ok = true;
  std::vector<Trend> coordinate_trends;
  std::vector<Witness> witnesses;
};

/// Per-variable monotonicity: for each coordinate and each fixed choice of
/// the other coordinates, the unary section must be order-preserving or
/// order-reversing. On posets only comparable argument pairs constrain the
/// section, and outputs must themselves be comparable the right way.
MonotoneReport check_monotone(const NaryOp& f, const Poset& order);
MonotoneReport check_monotone(const NaryOp& f);  // chain order on {0..k-1}

/// Strict form: every section order-preserving.
bool check_monotone_increasing(const NaryOp& f, const Poset& order);
bool check_monotone_increasing(const NaryOp& f);

/// All e such that substituting e in every coordinate except one is the
/// identity in the remaining coordinate, for every position.
std::vector<Element> find_neutral_elements(const NaryOp& f);

/// In each coordinate, with the other coordinates fixed, the section is a
/// bijection (unique solvability of f(..., b, ...) = t for b).
CheckReport check_nary_group(const NaryOp& f);

/// All ordered pairs (x, y) with t(x,y) != t(y,x), sorted.
std::vector<std::pair<Element, Element>> noncommutative_pairs(const BinTable& t);

/// Bundled verdict for a binary table. in_class requires associativity,
/// idempotency, per-variable monotonicity and an existing neutral element;
/// the remaining fields are informational.
struct ClassReport {
  bool associative = false;
  bool idempotent = false;
  bool monotone = false;
  bool monotone_increasing = false;
  bool quasitrivial = false;
  std::vector<Element> neutrals;
  bool in_class = false;
  std::vector<Witness> witnesses;
};

ClassReport class_check(const BinTable& t);

/// Same verdict as class_check(t).in_class with cheap early exits, for use
/// inside enumeration loops.
bool is_class_table(const BinTable& t);

/// A binary or n-ary operation on an integer window [lo, hi] whose outputs
/// may leave the window; used for operations that have no faithful model on
/// a finite chain.
struct IntWindowOp {
  long long lo = 0;
  long long hi = 0;
  int n = 0;
  std::function<long long(std::span<const long long>)> fn;

  long long operator()(std::span<const long long> tuple) const;
};

CheckReport window_idempotency_report(const IntWindowOp& f);
MonotoneReport window_check_monotone(const IntWindowOp& f);
bool window_check_monotone_increasing(const IntWindowOp& f);

/// Binary associativity on a window, skipping triples whose intermediate
/// value falls outside the window (the composition is undefined there).
CheckReport window_associative2(const IntWindowOp& f);

}  // namespace chainops
