#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sidex/hom.hpp"
#include "sidex/hypergraph.hpp"
#include "sidex/rational.hpp"

namespace sidex {

// Discrete symmetric step kernel: a fully symmetric map from r-multisets of
// cells {0..n-1} to rationals. Stands in for a measurable f on [0,1]^r;
// integrals over it are exact finite averages.
class WeightedKernel {
 public:
  WeightedKernel(int uniformity, int resolution);

  static WeightedKernel constant(int uniformity, int resolution, const Rat& value);
  // 0/1 kernel of a hypergraph: entry 1 exactly on its edges.
  static WeightedKernel from_hypergraph(const Hypergraph& h);

  int uniformity() const { return r_; }
  int resolution() const { return n_; }

  // key: sorted r-multiset of cells
  void set(std::vector<int> key, const Rat& value);
  const Rat& at(std::vector<int> key) const;  // canonicalizes the key
  Rat value(std::span<const int> cells) const;  // arbitrary order

  const std::map<std::vector<int>, Rat>& entries() const { return entries_; }

  WeightedKernel operator+(const WeightedKernel& o) const;
  WeightedKernel scaled(const Rat& lambda) const;
  WeightedKernel abs() const;
  bool nonnegative() const;

 private:
  int r_, n_;
  std::map<std::vector<int>, Rat> entries_;  // zero entries omitted
};

// ∫ Π_{e∈E(F)} f(x_e) dμ^{v(F)} as an exact average over all n^{v(F)} cell
// assignments; with absolute_inside, |f| replaces f (the w-functional's
// e(F)-th power). The signed F-functional's power is |result| with
// absolute_inside = false.
Rat kernel_density(const Hypergraph& f, const WeightedKernel& kernel,
                   bool absolute_inside);

// Independent evaluation path over common-denominator integer entries;
// used to re-verify counterexamples.
Rat kernel_density_integerized(const Hypergraph& f, const WeightedKernel& kernel,
                               bool absolute_inside);

// Sign of (a^{1/e} + b^{1/e}) - c^{1/e} for nonnegative rationals, decided
// exactly: interval refinement with integer e-th roots, escalating
// precision, with a commensurability test for the equality case.
int compare_root_sum(const Rat& a, const Rat& b, const Rat& c, unsigned long e);

// Edge coloring of F (not necessarily proper): color per canonical edge
// index, values in 0..e(F)-1.
using EdgeColoring = std::vector<int>;

struct CsgResult {
  bool holds;
  Rat lhs;          // ⟨F;χ⟩_F, signed
  Rat rhs_powered;  // Π_e ‖f_{χ(e)}‖_w^{e(F)} (the e(F)-th power of the RHS)
};

// Cauchy-Schwarz-Gowers check: ⟨F;χ⟩ ≤ Π ‖f_{χ(e)}‖_w, compared by
// cross-powering to clear the 1/e(F) exponents.
CsgResult csg_check(const Hypergraph& f, const EdgeColoring& coloring,
                    const std::vector<WeightedKernel>& kernels, bool require_nonneg);

struct DominationResult {
  bool holds;
  Rat lhs;  // t_F(H)^{e(F')}
  Rat rhs;  // t_{F'}(H)^{e(F)}
  std::vector<Vertex> embedding;  // F' -> F witness
};

// t_F(H)^{1/e(F)} >= t_{F'}(H)^{1/e(F')} via exact cross-powering. F' must
// embed into F (verified; embedding returned in the result).
DominationResult domination_check(const Hypergraph& f, const Hypergraph& sub,
                                  const Hypergraph& host, const HomOptions& opts = {});

struct FalsifyPool {
  int max_exhaustive_n = 5;   // canonical hosts up to this size
  int random_hosts = 200;     // seeded random hosts on top
  int random_host_n = 6;
  long long pair_budget = 2'000'000;
};

struct FalsifyOutcome {
  bool found = false;
  bool exhausted = false;  // pool fully scanned without a violation
  Hypergraph sub, host;
  Rat lhs, rhs;
  long long pairs_checked = 0;
  uint64_t seed = 0;
};

// Searches sub-hypergraphs and hosts for a domination violation. A found
// counterexample is re-verified through the independent brute-force count
// before being reported; exhaustion certifies nothing.
FalsifyOutcome dominating_falsify(const Hypergraph& f, const FalsifyPool& pool,
                                  uint64_t seed);

struct NormingCounterexample {
  WeightedKernel f, g;
  Rat moment_f, moment_g, moment_sum;  // the three powered functionals
  int trial = 0;
  bool from_csg = false;
  EdgeColoring coloring;  // when from_csg
};

struct NormingSuiteReport {
  int trials_run = 0;
  bool all_passed = true;
  std::optional<NormingCounterexample> counterexample;
  uint64_t seed = 0;
};

// Randomized triangle-inequality and CSG trials over seeded rational step
// kernels. signed_variant tests the norming functional ‖·‖_F on signed
// kernels; otherwise the weak-norming ‖·‖_w on nonnegative ones. The suite
// can only falsify or corroborate, never certify.
NormingSuiteReport weakly_norming_suite(const Hypergraph& f, int trials, uint64_t seed,
                                        int max_resolution = 4, int max_denominator = 16,
                                        bool signed_variant = false);

struct CatalogEntry {
  std::string family;      // e.g. "even-cycle"
  std::string detail;      // e.g. "C_6"
  std::string provenance;  // literature tag
};

// Known dominating families with provenance; feeds bound certificates.
std::vector<CatalogEntry> catalog_dominating();

// Structural recognizers against the catalogs. Matching is desk-scale.
std::optional<CatalogEntry> match_dominating(const Hypergraph& m);
std::optional<CatalogEntry> match_sidorenko(const Hypergraph& m);

// Recognizer helpers (exposed for tests and the CLI).
std::optional<std::vector<int>> complete_partite_sizes(const Hypergraph& f);
bool is_even_cycle(const Hypergraph& f);
bool is_tree(const Hypergraph& f);
bool is_hypercube(const Hypergraph& f);

}  // namespace sidex
