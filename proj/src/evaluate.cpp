#include "chainops/evaluate.hpp"

#include <random>

#include "chainops/verify.hpp"

namespace chainops {

Element resolve_scan(const BinTable& t, const ScanState& s) {
  if (s.empty()) throw InputError("cannot evaluate an empty tuple");
  const Element c = s.min();
  const Element d = s.max();
  const Element cd = t(c, d);
  if (cd == t(d, c)) return cd;
  return t(s.first_extreme(), s.last_extreme());
}

Element fast_eval(const BinTable& t, Element e, std::span<const Element> tuple,
                  bool check_class) {
  if (e < 0 || e >= t.k) throw InputError("neutral element out of range");
  if (check_class) {
    if (!is_class_table(t)) {
      throw InputError("table is not associative idempotent monotone with a neutral element");
    }
    for (Element x = 0; x < t.k; ++x) {
      if (t(e, x) != x || t(x, e) != x) {
        throw InputError("given element is not neutral for the table");
      }
    }
  }
  return fast_eval_stream(t, tuple.begin(), tuple.end());
}

Element word_eval(const BinTable& t, std::span<const Element> w) {
  return fast_eval_stream(t, w.begin(), w.end());
}

namespace {

constexpr size_t kMaxWordLawWitnesses = 25;

/// All words over {0..k-1} of lengths 1..max_len, lexicographic within each
/// length, or empty when their number would exceed `limit`.
std::vector<Word> all_words(int k, int max_len, long long limit) {
  long long total = 0;
  long long pow = 1;
  for (int len = 1; len <= max_len; ++len) {
    if (pow > limit / k) return {};
    pow *= k;
    total += pow;
    if (total > limit) return {};
  }
  std::vector<Word> words;
  words.reserve(static_cast<size_t>(total));
  for (int len = 1; len <= max_len; ++len) {
    Word w(len, 0);
    do {
      words.push_back(w);
    } while (next_tuple(w, k));
  }
  return words;
}

}  // namespace

WordLawReport check_word_law(const BinTable& t, int max_len, std::uint64_t seed,
                             long long exhaustive_limit, long long samples) {
  if (max_len < 1) throw InputError("maximum word length must be at least 1");
  WordLawReport rep;
  Word scratch;
  auto compare_pair = [&](const Word& a, const Word& b) {
    scratch.assign(a.begin(), a.end());
    scratch.insert(scratch.end(), b.begin(), b.end());
    const Element lhs = word_eval(t, scratch);
    const Element rhs = t(word_eval(t, a), word_eval(t, b));
    ++rep.cases_checked;
    if (lhs != rhs) {
      rep.ok = false;
      if (rep.witnesses.size() < kMaxWordLawWitnesses) {
        rep.witnesses.push_back({a, b, lhs, rhs});
      }
    }
  };

  // The pair count is words^2; stay exhaustive while it fits the budget.
  long long word_budget = exhaustive_limit;
  for (long long w = 1; w * w <= exhaustive_limit; ++w) word_budget = w;
  std::vector<Word> words = all_words(t.k, max_len, word_budget);
  if (!words.empty()) {
    for (const Word& a : words) {
      for (const Word& b : words) compare_pair(a, b);
    }
    return rep;
  }

  rep.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<Element> elem_dist(0, t.k - 1);
  auto draw = [&]() {
    Word w(static_cast<size_t>(len_dist(rng)));
    for (Element& x : w) x = elem_dist(rng);
    return w;
  };
  for (long long i = 0; i < samples; ++i) {
    const Word a = draw();
    const Word b = draw();
    compare_pair(a, b);
  }
  return rep;
}

}  // namespace chainops
