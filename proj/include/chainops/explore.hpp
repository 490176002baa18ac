#pragma once

#include <vector>

#include "chainops/core.hpp"
#include "chainops/gspec.hpp"
#include "chainops/verify.hpp"

namespace chainops {

/// Candidate space for the direct table search.
enum class BruteSpace {
  Auto,          // Full for k <= 3, Quasitrivial above
  Full,          // all k^(k*k) tables; k <= 3
  Quasitrivial,  // diagonal fixed, off-diagonal cells in {min, max}; k <= 5
};

/// Every valid generating datum for chain size k: each non-increasing g over
/// the doubled grid that has an integer fixed point, combined with every
/// tie-break assignment on its critical pairs. Deterministic order (g
/// lexicographic in doubled units, then tie maps). k <= 6.
std::vector<GSpec> enumerate_gspecs(int k);

/// All tables passing the class check, found by filtering the candidate
/// space directly. Sorted. workers = 0 reads CHAINOPS_WORKERS (default 1).
std::vector<BinTable> enumerate_class_brute(int k, BruteSpace space = BruteSpace::Auto,
                                            int workers = 0);

struct GeneratorAudit {
  bool has_sym_generator = false;          // some generating g passes sym_check
  bool has_commutative_generator = false;  // some generator has a symmetric tie map
};

struct GspecEnumeration {
  std::vector<BinTable> tables;  // sorted, deduplicated by table identity
  std::vector<GeneratorAudit> audits;
};

/// All class tables reachable from generating data, with per-table audits of
/// which kinds of generators produce them. k <= 5.
GspecEnumeration enumerate_class_gspec(int k);

struct EnumReport {
  int k = 0;
  std::vector<BinTable> tables_gspec;
  std::vector<BinTable> tables_brute;
  long long count_gspec = 0;
  long long count_brute = 0;
  bool matched = false;
  long long extra_critical_count = 0;       // tables with a noncommutative pair
  bool brute_restricted_quasitrivial = false;
};

/// Cross-validates the two enumerations and reports set equality.
EnumReport compare_enumerations(int k, int workers = 0);

/// A generating datum passing the level-set condition but failing the
/// symmetry surrogate, annotated with whether its table is still in class.
struct MmtGapWitness {
  GSpec gspec;
  bool mmt = true;
  bool sym = false;
  bool table_in_class = false;
};

/// All such witnesses for every chain size up to kmax (<= 6).
std::vector<MmtGapWitness> find_mmt_gap(int kmax);

/// Bounded poset {bottom} ∪ Z_q ∪ {top} with the q group elements mutually
/// incomparable, carrying: top absorbing from either side, bottom absorbing
/// among the rest, group addition on Z_q. Element 0 is the bottom, 1..q are
/// the residues 0..q-1 (so 1 is the group identity and the operation's
/// neutral element), q+1 is the top.
struct PosetFixture {
  int q = 0;
  Poset poset;
  BinTable op;
  Element neutral = 0;
};

PosetFixture build_poset_fixture(int q);

/// Alternating-sum operation on Z_m: (x_1, …, x_n) -> x_1 - x_2 + … + x_n
/// reduced mod m. Arity must be odd and >= 3.
NaryOp build_alternating(int m, int n);

/// The same alternating sum as an operation on an integer window, where its
/// per-variable monotonicity is meaningful.
IntWindowOp alternating_window(int n, long long lo, long long hi);

}  // namespace chainops
