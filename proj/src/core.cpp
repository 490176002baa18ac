#include "chainops/core.hpp"

namespace chainops {

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "LESS";
    case Ordering::Equal: return "EQUAL";
    case Ordering::Greater: return "GREATER";
  }
  return "?";
}

Ordering ext_compare(const Chain& chain, ExtValue v, Element y) {
  if (v.twice() < 0 || v.twice() > 2 * (chain.k - 1))
    throw InputError("extended value does not belong to a chain of size " +
                     std::to_string(chain.k));
  if (!chain.contains(y))
    throw InputError("element " + std::to_string(y) +
                     " does not belong to a chain of size " + std::to_string(chain.k));
  const int diff = v.twice() - 2 * y;
  if (diff < 0) return Ordering::Less;
  if (diff > 0) return Ordering::Greater;
  return Ordering::Equal;
}

BinTable::BinTable(int size, std::vector<Element> values)
    : k(size), entries(std::move(values)) {
  if (k < 1) throw InputError("table size must be at least 1");
  if (entries.size() != static_cast<std::size_t>(k) * k)
    throw InputError("table must have exactly k*k entries");
  for (Element v : entries)
    if (v < 0 || v >= k) throw InputError("table entry out of range");
}

Element table_apply(const BinTable& t, Element x, Element y) {
  if (x < 0 || x >= t.k || y < 0 || y >= t.k)
    throw InputError("table index out of range");
  return t(x, y);
}

Element fold_eval(const BinTable& t, std::span<const Element> word) {
  if (word.empty()) throw InputError("cannot evaluate the empty word");
  for (Element x : word)
    if (x < 0 || x >= t.k) throw InputError("word item out of range");
  Element acc = word.back();
  for (std::size_t i = word.size() - 1; i-- > 0;) acc = t(word[i], acc);
  return acc;
}

bool next_tuple(std::span<Element> tuple, int k) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < k) return true;
    tuple[i] = 0;
  }
  return false;
}

}  // namespace chainops
