#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sidex/hom.hpp"
#include "sidex/hypergraph.hpp"
#include "sidex/kernels.hpp"
#include "sidex/rational.hpp"

namespace sidex {

struct SidorenkoCheck {
  bool holds;
  Rat t_pattern;       // t_F(H)
  Rat t_edge_powered;  // t_{K_r^{(r)}}(H)^{e(F)}
  Rat margin;          // t_F - t^{e(F)}, signed
};

// Eq-(2)-style check: t_F(H) >= t_{K_r^{(r)}}(H)^{e(F)}, exact.
SidorenkoCheck sidorenko_check(const Hypergraph& f, const Hypergraph& host,
                               const HomOptions& opts = {});

// A host certifying a rational lower bound on s(F): with densities in (0,1),
// t_F(H)^q <= t_K(H)^p pins ln t_F/ln t_K >= p/q, so s(F) >= p/q.
struct ExponentWitness {
  Hypergraph pattern, host;
  Rat t_pattern, t_edge;
  double float_ratio = 0;  // ln t_F / ln t_K, advisory (1e-9 relative)
  Int p = 0, q = 1;
  Rat certified;           // p/q
  bool exact = false;      // t_F^q == t_K^p
};

// Largest p/q with q <= q_cap certified by exact cross-powering.
ExponentWitness exponent_ratio(const Hypergraph& f, const Hypergraph& host,
                               int q_cap = 10, const HomOptions& opts = {});

struct Assumption {
  std::string property;    // "dominating" | "sidorenko"
  std::string object_desc;
  std::string provenance;  // catalog tag or "user-asserted"
};

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct BoundCertificate {
  std::string theorem;  // unified-case-1 | unified-case-2 | tight-cycle |
                        // sparse | grid-links | lift | bipartite-links
  Rat bound;
  std::vector<HypothesisCheck> checks;
  std::vector<Assumption> assumptions;
  std::map<std::string, std::string> data;
};

enum class BoundCase { sidorenko_components, dominating };

// Link-profile upper bound on s(F): sum of d_M(V(L_i)) over the designated
// part, after validating L(v_1) = M and every link inside M under parent
// vertex names. Case 1 needs each link to be an exact union of components
// of M (the identity sum = e(F) is then asserted); case 2 needs a
// dominating assumption on M from the catalog or the caller.
BoundCertificate bound_unified(const PartiteHypergraph& f, int part,
                               const std::vector<Edge>& m_edges, BoundCase bcase,
                               const std::vector<Assumption>& user_assumptions = {},
                               const HomOptions& opts = {});

// 7l bound for the 3-uniform tight cycle of length 3l, via the apex
// augmentation with the union-of-links cycle. The certificate carries both
// the formula value 7l and the instance-exact sum (smaller at l = 2 where
// the wrap-around makes the paths span the whole 4-cycle).
BoundCertificate bound_tight_cycle(int ell, const HomOptions& opts = {});

// 2c v^{r-1} with c = e(F)/v(F); isolated vertices rejected.
BoundCertificate bound_sparse(const PartiteHypergraph& f);

// 8 e(F) + 8 k^2 when the union of designated-part links fits in the
// (k x k)-grid.
BoundCertificate bound_grid_links(const PartiteHypergraph& f, int part, int k);

// s(F(t_1,...,t_l)) <= s_F * prod t_i.
BoundCertificate lift_bound(const Rat& s_f, const std::vector<int>& ts);

struct AmplifyStep {
  int power = 0;
  bool holds = false;     // t_F(H)^k >= c * t_K(H)^{s k}, cross-powered
  std::optional<Rat> slack;  // (t_F / t_K^s)^k when s is an integer
};

struct AmplifyReport {
  Rat t_pattern, t_edge;
  std::vector<AmplifyStep> steps;
  std::optional<int> first_violation;
};

// Demonstrates the tensor-power amplification: any fixed slack c is
// eventually violated when t_F(H) < t_K(H)^s.
AmplifyReport tensor_amplify(const Hypergraph& f, const Hypergraph& host, const Rat& c,
                             const Rat& s, int max_power, const HomOptions& opts = {});

struct HomRatioResult {
  bool holds;
  Int hom_whole, hom_rest;   // hom(M,H), hom(M - V(M'), H)
  Rat lhs;                   // hom(M,H)/hom(M-V(M'),H)
  Rat rhs;                   // t_K(H)^{d} n^{v(M')}
  int boundary = 0;          // d_M(V(M'))
  std::vector<Assumption> assumptions;
};

// hom(M,H)/hom(M-V(M'),H) >= t_K(H)^{d_M(V(M'))} n^{v(M')}, compared by
// cross-multiplication. M' is the sub-hypergraph spanned by the selected
// edges of M; in components mode it must be component-closed.
HomRatioResult hom_ratio_check(const Hypergraph& m, const std::vector<int>& sub_edges,
                               const Hypergraph& host, BoundCase mode,
                               const std::vector<Assumption>& user_assumptions = {},
                               const HomOptions& opts = {});

struct TraceLinkData {
  Vertex anchor = -1;
  int boundary = 0;          // d_M(V(M_i))
  Rat threshold;             // (2t)^{-e(M)} t_K^{d} n
  Int rare_count = 0;        // rare maps among all n^{v(M_i)}
  Int z_total = 0;           // Z^{(i)}
  std::vector<Int> z_per_vertex;
  std::vector<char> bad;     // per host vertex
};

struct ProofTrace {
  int t = 0;                 // profile length
  int m_edge_count = 0;
  Rat t_edge;                // t_K(H)
  std::vector<TraceLinkData> links;  // entries for i = 2..t
  std::vector<char> good;    // per host vertex
  Rat claim1_lhs, claim1_rhs;
  bool claim1_holds = false;
  bool claim2_holds = false;  // every good vertex has >= half rich
  std::vector<Int> rich_count, hom_m_downward;  // per host vertex (good only filled)
  Int hom_f;                 // hom(F,H)
  Rat constant_c;            // (1/4) (2t)^{-t e(M)}
  int exponent_sum = 0;      // sum of all d_M(V(M_i))
  bool final_holds = false;  // t_F(H) >= c t_K^{sum}
  std::vector<HypothesisCheck> checks;
  std::vector<Assumption> assumptions;
};

// Runs the rare/bad/good/rich machinery on a concrete instance and verifies
// both Claims and the final bound, everything exact. Maps psi range over all
// n^{v(M_i)} functions; edge-degenerate images have empty neighborhoods.
ProofTrace proof_trace(const PartiteHypergraph& f, int part,
                       const std::vector<Edge>& m_edges, const Hypergraph& host,
                       BoundCase bcase,
                       const std::vector<Assumption>& user_assumptions = {},
                       long long budget = 100'000'000, const HomOptions& opts = {});

// ---- exponent search ----

struct SearchConfig {
  uint64_t seed = 0;
  long long evaluations = 4000;    // objective-evaluation budget
  int exhaustive_n = -1;           // default: 6 for graphs, 5 for 3-graphs
  int complete_host_max = 8;
  int sa_host_n = -1;              // default: exhaustive_n + 1
  int sa_restarts = 2;
  int sa_steps = 1500;
  int q_cap = 10;
  long long tensor_vertex_cap = 80;
  HomOptions hom;
};

struct SearchReport {
  ExponentWitness best;
  long long evaluations_used = 0;
  int hosts_seen = 0;
  uint64_t seed = 0;
};

// Host search maximizing ln t_F / ln t_K: exhaustive canonical hosts, the
// complete-host baseline, seeded annealing on edge bitmasks, and tensor
// products of incumbents as extra seeds. Deterministic given the seed.
SearchReport exponent_lower_search(const Hypergraph& f, const SearchConfig& cfg);

}  // namespace sidex
