#pragma once

#include <vector>

#include "sidex/hypergraph.hpp"
#include "sidex/rational.hpp"
#include "sidex/util.hpp"

namespace sidex {

struct HomOptions {
  int jobs = 1;
  long long budget = 1'000'000'000;  // branch visits before giving up
};

// Exact |Hom(F,H)|. Backtracking over a most-constrained-next order per
// connected component of F, multiplied across components. Bitset candidate
// filtering for r <= 3, hash-free edge membership otherwise.
Int count_homomorphisms(const Hypergraph& pattern, const Hypergraph& host,
                        const HomOptions& opts = {});

// Edge-valid map count into the complete simple r-graph on n vertices,
// via set partitions with no edge inside a block (exact for any n).
Int count_hom_complete(const Hypergraph& pattern, const Int& n);

struct Density {
  Int hom;              // |Hom(F,H)|
  int pattern_vertices; // v(F), the denominator exponent
  int host_vertices;    // n
  Rat value;            // hom / n^{v(F)}
};

Density density(const Hypergraph& pattern, const Hypergraph& host,
                const HomOptions& opts = {});

// t_{K_r^{(r)}}(H) = r! e(H) / n^r.
Rat edge_density(const Hypergraph& host);

struct Homomorphism {
  int pattern_vertices = 0;
  int host_vertices = 0;
  std::vector<Vertex> map;  // total on V(F)
};

// Restriction along a declared inclusion V(F') -> V(F); the inclusion must
// map E(F') into E(F).
Homomorphism restrict_hom(const Homomorphism& phi, const Hypergraph& sub,
                          const Hypergraph& pattern,
                          std::span<const Vertex> inclusion);

enum class HomClass { proper, degenerate };

// proper iff injective; for simple patterns this is exactly "image
// isomorphic to the pattern" (asserted against explicit isomorphism search
// in the test suite).
HomClass classify(const Homomorphism& phi);

struct FactorCount {
  Int whole;  // hom(M, H)
  Int part;   // hom(M', H)
  Int rest;   // hom(M - V(M'), H)
};

// M' is the sub-hypergraph induced by the vertex set `part_vertices`,
// which must be a union of connected components of M.
FactorCount factor_count(const Hypergraph& m, const Hypergraph& host,
                         std::span<const Vertex> part_vertices,
                         const HomOptions& opts = {});

// Both sides of t_F(H^{⊗k}) = t_F(H)^k, materializing the power under the
// vertex cap. They are equal exactly; callers may assert.
std::pair<Density, Rat> tensor_density_identity(const Hypergraph& pattern,
                                                const Hypergraph& host, int k,
                                                const HomOptions& opts = {},
                                                long long vertex_cap = 100'000);

}  // namespace sidex
