#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sidex {

using Vertex = int;
using Edge = std::vector<Vertex>;  // r distinct vertices, stored ascending

// An r-uniform hypergraph on dense vertices 0..n-1. Edges are canonical:
// each edge sorted ascending, the edge list sorted lexicographically,
// no duplicates. Equal hypergraphs compare equal bit-for-bit.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int uniformity, int vertex_count, std::vector<Edge> edges);

  int uniformity() const { return r_; }
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  // Membership of a sorted r-set.
  bool has_edge(const Edge& sorted) const;

  int degree(Vertex v) const;
  std::vector<int> degrees() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int r_ = 1;
  int n_ = 0;
  std::vector<Edge> edges_;
};

// r-partite r-graph: every edge has exactly one vertex in each class.
class PartiteHypergraph {
 public:
  PartiteHypergraph() = default;
  // parts[v] in 0..r-1; every class must be nonempty and edges transversal.
  PartiteHypergraph(Hypergraph base, std::vector<int> parts);

  const Hypergraph& base() const { return base_; }
  const std::vector<int>& parts() const { return parts_; }
  int part_of(Vertex v) const { return parts_[v]; }
  int uniformity() const { return base_.uniformity(); }
  std::vector<Vertex> part_vertices(int part) const;

  bool operator==(const PartiteHypergraph&) const = default;

 private:
  Hypergraph base_;
  std::vector<int> parts_;
};

// A link compacted to its co-occurring vertices, with the map back into the
// parent: names[i] is the parent vertex behind link vertex i.
struct Link {
  Vertex anchor = -1;
  Hypergraph graph;
  std::vector<Vertex> names;

  // Link edges written back in parent vertex names.
  std::vector<Edge> parent_edges() const;
};

struct LinkProfile {
  int designated_part = 0;
  std::vector<Link> entries;  // ascending anchor order, covering the part
};

struct DegreeStats {
  int max_degree = 0;
  int min_degree = 0;
};

struct RemovalResult {
  Hypergraph graph;
  std::vector<Vertex> old_to_new;  // -1 for removed vertices
};

struct Component {
  Hypergraph graph;                // compact re-indexed component
  std::vector<Vertex> names;       // back into the parent
};

Link link_hypergraph(const PartiteHypergraph& f, Vertex v);
LinkProfile link_profile(const PartiteHypergraph& f, int part);

// Same edge remainders as the link, but on the full parent vertex set.
Hypergraph downward_hypergraph(const Hypergraph& f, Vertex v);

// Number of edges meeting U.
int boundary_degree(const Hypergraph& f, std::span<const Vertex> u);

RemovalResult remove_vertices(const Hypergraph& f, std::span<const Vertex> u);

// Vertices u of h such that every edge of s extends to an edge of h with u.
// s has uniformity r-1 and is named inside V(h); edges of s containing u
// cannot extend (h is simple), which the test handles implicitly.
std::vector<Vertex> common_neighborhood(const Hypergraph& h,
                                        const std::vector<Edge>& s_edges,
                                        int s_uniformity);

std::vector<Component> components(const Hypergraph& f);

// Verifies the supplied injection maps E(f) into E(g). Throws on a malformed
// injection (wrong length, out of range, repeated targets).
bool is_subhypergraph(const Hypergraph& f, const Hypergraph& g,
                      std::span<const Vertex> injection);

DegreeStats degree_stats(const Hypergraph& f);

bool is_connected(const Hypergraph& f);

// ---- isomorphism & embedding (tiny-instance machinery) ----

// Backtracking search for an injection V(f) -> V(g) mapping edges to edges.
std::optional<std::vector<Vertex>> find_embedding(const Hypergraph& f,
                                                  const Hypergraph& g,
                                                  long long node_budget = 50'000'000);

// Does g contain a sub-hypergraph isomorphic to f? Optionally requires the
// embedding to cover a specific edge of g (anchored variant for incremental
// callers); anchor < 0 means unanchored.
bool contains_copy(const Hypergraph& g, const Hypergraph& f, int anchor_edge = -1,
                   long long node_budget = 50'000'000);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b,
                   long long node_budget = 50'000'000);

// Canonically relabeled copy: the lexicographically smallest edge list over
// all vertex relabelings (degree-class pruned search; desk scale only).
Hypergraph canonical_form(const Hypergraph& f);

// Serialized canonical bytes, usable as a dedupe key.
std::string canonical_key(const Hypergraph& f);

// Deterministic search for an r-partition making f r-partite (transversal
// edges, all classes nonempty). Fails for non-partite inputs.
std::optional<std::vector<int>> find_partition(const Hypergraph& f);

// Convenience: partition via find_partition or throw.
PartiteHypergraph as_partite(const Hypergraph& f);

}  // namespace sidex
