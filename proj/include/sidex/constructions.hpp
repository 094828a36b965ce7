#pragma once

#include <string>
#include <vector>

#include "sidex/hypergraph.hpp"

namespace sidex {

// Every builder is deterministic with a frozen vertex numbering, so the
// same parameters always produce identical serialized bytes.

// K^{(r)}_{t_1,...,t_r}: part i occupies a consecutive block of t_i vertices
// (in argument order); all transversal r-sets are edges.
PartiteHypergraph complete_partite(const std::vector<int>& part_sizes);

// Complete simple r-graph on n vertices (all r-subsets).
Hypergraph complete_hypergraph(int n, int r);

// Tight cycle: vertices 0..k-1, edges {i,...,i+r-1} mod k. Needs k >= r+1.
Hypergraph tight_cycle(int r, int k);
// Partite variant: residue classes mod r; needs r | k and k >= 2r.
PartiteHypergraph tight_cycle_partite(int r, int k);

// (k x k)-grid, cartesian product of two k-vertex paths; (i,j) -> i*k + j.
Hypergraph grid(int k);

// Unordered tensor product: an r-set of product vertices is an edge iff it
// admits a simultaneous ordering projecting to an edge on each side;
// realized by pairing the two edges under every bijection. (a,b) -> a*v2+b.
Hypergraph tensor_product(const Hypergraph& f1, const Hypergraph& f2);
Hypergraph tensor_power(const Hypergraph& f, int k, long long vertex_cap = 100'000);

// F(t): raise uniformity by one with t apex vertices, each linked to all
// of F. Apexes are appended after the original vertices.
Hypergraph lift_hypergraph(const Hypergraph& f, int t);
PartiteHypergraph lift(const PartiteHypergraph& f, int t);
PartiteHypergraph lift_chain(const PartiteHypergraph& f, const std::vector<int>& ts);

// Adds one vertex to `part` whose link is exactly M (edges in parent vertex
// names, transversal to the other parts). Every existing link of `part`
// must be contained in M; validated, offending anchor reported on failure.
PartiteHypergraph apex_augment(const PartiteHypergraph& f, int part,
                               const std::vector<Edge>& m_edges);

// Realizes an r-graph from a designated-part link profile: `base` supplies
// the first r-1 classes (its own edges are ignored), links[i] is the edge
// set of anchor i over base vertex names. Anchors are appended, class r-1.
PartiteHypergraph build_from_link_profile(const PartiteHypergraph& base,
                                          const std::vector<std::vector<Edge>>& links);

struct GridEmbedding {
  Hypergraph torus;              // C_{2k} (x) C_{2k}
  Hypergraph grid_graph;         // G_k
  std::vector<Vertex> injection; // grid vertex -> torus vertex
};

// The explicit grid-in-torus injection; verified on construction (failure
// would be a build bug and throws logic_error).
GridEmbedding grid_embedding(int k);

// Named small families: pN (path on N vertices), cN (cycle), qN (hypercube),
// kN (complete graph), kA,B,... (complete partite), mK (K disjoint edges),
// loose-triangle, eR (single r-edge). Unknown names throw.
Hypergraph catalog(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace sidex
