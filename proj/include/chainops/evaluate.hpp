#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chainops/core.hpp"

namespace chainops {

/// Constant-size accumulator for a single left-to-right scan of a tuple:
/// running minimum c and maximum d, plus first/last positions at which the
/// final extremes occur. c only ever decreases and d only ever increases, so
/// the recorded positions are correct for the final values without a second
/// pass.
class ScanState {
 public:
  void push(Element x) {
    if (n_ == 0) {
      c_ = d_ = x;
      first_min_ = last_min_ = first_max_ = last_max_ = 0;
    } else {
      if (x < c_) {
        c_ = x;
        first_min_ = last_min_ = n_;
      } else if (x == c_) {
        last_min_ = n_;
      }
      if (x > d_) {
        d_ = x;
        first_max_ = last_max_ = n_;
      } else if (x == d_) {
        last_max_ = n_;
      }
    }
    ++n_;
  }

  bool empty() const { return n_ == 0; }
  long long size() const { return n_; }
  Element min() const { return c_; }
  Element max() const { return d_; }

  /// Value of the earliest scanned item equal to the final min or max.
  Element first_extreme() const { return first_min_ <= first_max_ ? c_ : d_; }
  /// Value of the latest scanned item equal to the final min or max.
  Element last_extreme() const { return last_min_ >= last_max_ ? c_ : d_; }

 private:
  Element c_ = 0;
  Element d_ = 0;
  long long first_min_ = -1;
  long long last_min_ = -1;
  long long first_max_ = -1;
  long long last_max_ = -1;
  long long n_ = 0;
};

/// Finishes a completed scan against t: returns t(c,d) when that agrees with
/// t(d,c), otherwise t(first extreme, last extreme).
Element resolve_scan(const BinTable& t, const ScanState& s);

/// One-pass, constant-memory evaluation of the n-ary operation derived from
/// t, valid when t is associative, idempotent, per-variable monotone and has
/// neutral element e. With check_class the hypotheses are verified up front
/// (costly; intended for untrusted tables), otherwise they are trusted.
/// Agrees with fold_eval on every tuple for class tables.
Element fast_eval(const BinTable& t, Element e, std::span<const Element> tuple,
                  bool check_class = false);

/// fast_eval for arbitrary nonempty words; the arity-uniform rule needs no
/// neutral element at evaluation time.
Element word_eval(const BinTable& t, std::span<const Element> w);

/// Single-pass evaluation over an input iterator range; each item is read
/// exactly once.
template <typename InputIt>
Element fast_eval_stream(const BinTable& t, InputIt first, InputIt last) {
  ScanState s;
  for (; first != last; ++first) {
    Element x = *first;
    if (x < 0 || x >= t.k) throw InputError("tuple element out of range");
    s.push(x);
  }
  return resolve_scan(t, s);
}

struct WordLawWitness {
  Word left;
  Word right;
  Element lhs = 0;  // word_eval(left ++ right)
  Element rhs = 0;  // t(word_eval(left), word_eval(right))

  friend bool operator==(const WordLawWitness&, const WordLawWitness&) = default;
};

struct WordLawReport {
  bool ok = true;
  bool exhaustive = true;
  long long cases_checked = 0;
  std::vector<WordLawWitness> witnesses;  // capped at 25 entries
};

/// Concatenation law: word_eval(w ++ w') = t(word_eval(w), word_eval(w'))
/// over all word pairs with lengths in [1, max_len]. Runs exhaustively while
/// the pair count stays within exhaustive_limit, otherwise draws `samples`
/// seeded pseudo-random pairs.
WordLawReport check_word_law(const BinTable& t, int max_len, std::uint64_t seed = 12345,
                             long long exhaustive_limit = 2'000'000, long long samples = 50'000);

}  // namespace chainops
