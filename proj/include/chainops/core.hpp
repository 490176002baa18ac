#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainops {

/// A chain element, identified by its index 0..k-1.
using Element = int;

/// Malformed input: out-of-range elements, bad files, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive check would exceed its enumeration guard.
class GuardError : public InputError {
 public:
  using InputError::InputError;
};

enum class Ordering { Less, Equal, Greater };

std::string to_string(Ordering o);

/// The finite chain 0 < 1 < ... < k-1. Element i models the grid point
/// i/(k-1) of a closed interval; only the order is ever used.
struct Chain {
  int k;

  explicit Chain(int size) : k(size) {
    if (k < 1) throw InputError("chain size must be at least 1");
  }

  bool contains(Element x) const { return 0 <= x && x < k; }
  Element top() const { return k - 1; }
};

/// A point of the doubled grid: a chain element or the gap between two
/// adjacent ones. Stored as twice its numeric value (even = chain point,
/// odd = gap), so every comparison is exact integer arithmetic.
class ExtValue {
 public:
  static ExtValue point(Element x) { return ExtValue(2 * x); }
  static ExtValue gap_above(Element x) { return ExtValue(2 * x + 1); }
  static ExtValue from_twice(int t) { return ExtValue(t); }

  int twice() const { return twice_; }
  bool is_point() const { return twice_ % 2 == 0; }

  Element as_point() const {
    if (!is_point()) throw std::logic_error("ExtValue is a gap, not a chain point");
    return twice_ / 2;
  }

  double numeric() const { return twice_ / 2.0; }

  friend auto operator<=>(const ExtValue&, const ExtValue&) = default;
  friend bool operator==(const ExtValue&, const ExtValue&) = default;

 private:
  explicit ExtValue(int t) : twice_(t) {}
  int twice_;
};

/// Three-way comparison of an extended value against a chain element of the
/// same chain. EQUAL can only occur when v is a chain point.
Ordering ext_compare(const Chain& chain, ExtValue v, Element y);

/// A k x k operation table; entry (x, y) is the value of the binary
/// operation at row x, column y.
struct BinTable {
  int k = 0;
  std::vector<Element> entries;  // row-major, entries[x*k + y]

  BinTable() = default;
  BinTable(int size, std::vector<Element> values);

  Element operator()(Element x, Element y) const { return entries[x * k + y]; }

  friend auto operator<=>(const BinTable&, const BinTable&) = default;
  friend bool operator==(const BinTable&, const BinTable&) = default;
};

/// A nonempty finite sequence of chain elements.
using Word = std::vector<Element>;

/// Checked table lookup.
Element table_apply(const BinTable& t, Element x, Element y);

/// Right-nested fold of the table over a word:
/// the value of t(w[0], t(w[1], ... t(w[n-2], w[n-1]))).
/// A singleton word evaluates to its element. This is the brute-force
/// oracle for every derived n-ary operation.
Element fold_eval(const BinTable& t, std::span<const Element> word);

/// Advances a mixed-radix tuple over {0..k-1}^n in lexicographic order.
/// Returns false once the tuple wraps back to all zeros.
bool next_tuple(std::span<Element> tuple, int k);

}  // namespace chainops
