#include "sidex/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sidex/util.hpp"

namespace sidex {

PartiteHypergraph complete_partite(const std::vector<int>& part_sizes) {
  int r = static_cast<int>(part_sizes.size());
  if (r < 1) throw std::invalid_argument("need at least one part");
  for (int t : part_sizes)
    if (t < 1) throw std::invalid_argument("non-positive part size");
  std::vector<int> offset(r + 1, 0);
  for (int i = 0; i < r; ++i) offset[i + 1] = offset[i] + part_sizes[i];
  int n = offset[r];
  std::vector<int> parts(n);
  for (int i = 0; i < r; ++i)
    for (int v = offset[i]; v < offset[i + 1]; ++v) parts[v] = i;

  std::vector<Edge> edges;
  Edge cur(r);
  std::vector<int> idx(r, 0);
  while (true) {
    for (int i = 0; i < r; ++i) cur[i] = offset[i] + idx[i];
    edges.push_back(cur);
    int i = r - 1;
    while (i >= 0 && ++idx[i] == part_sizes[i]) idx[i--] = 0;
    if (i < 0) break;
  }
  return PartiteHypergraph(Hypergraph(r, n, std::move(edges)), std::move(parts));
}

Hypergraph complete_hypergraph(int n, int r) {
  if (r < 1) throw std::invalid_argument("uniformity must be >= 1");
  std::vector<Edge> edges;
  if (n >= r) {
    Edge cur(r);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
      edges.push_back(cur);
      int i = r - 1;
      while (i >= 0 && cur[i] == n - r + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return Hypergraph(r, n, std::move(edges));
}

Hypergraph tight_cycle(int r, int k) {
  if (r < 2) throw std::invalid_argument("tight cycles need r >= 2");
  if (k < r + 1) throw std::invalid_argument("tight cycle needs k >= r+1 (duplicate edges otherwise)");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    Edge e;
    for (int j = 0; j < r; ++j) e.push_back((i + j) % k);
    edges.push_back(std::move(e));
  }
  return Hypergraph(r, k, std::move(edges));
}

PartiteHypergraph tight_cycle_partite(int r, int k) {
  if (k % r != 0) throw std::invalid_argument("partite tight cycle needs r | k");
  if (k < 2 * r) throw std::invalid_argument("partite tight cycle needs k >= 2r");
  Hypergraph base = tight_cycle(r, k);
  std::vector<int> parts(k);
  for (int v = 0; v < k; ++v) parts[v] = v % r;
  return PartiteHypergraph(std::move(base), std::move(parts));
}

Hypergraph grid(int k) {
  if (k < 2) throw std::invalid_argument("grid needs k >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (j + 1 < k) edges.push_back({i * k + j, i * k + j + 1});
      if (i + 1 < k) edges.push_back({i * k + j, (i + 1) * k + j});
    }
  return Hypergraph(2, k * k, std::move(edges));
}

Hypergraph tensor_product(const Hypergraph& f1, const Hypergraph& f2) {
  if (f1.uniformity() != f2.uniformity())
    throw std::invalid_argument("tensor product needs equal uniformity");
  int r = f1.uniformity();
  long long n = static_cast<long long>(f1.vertex_count()) * f2.vertex_count();
  std::set<Edge> edges;
  for (const auto& e1 : f1.edges()) {
    for (const auto& e2 : f2.edges()) {
      Edge perm = e2;
      std::sort(perm.begin(), perm.end());
      do {
        Edge prod(r);
        for (int i = 0; i < r; ++i)
          prod[i] = e1[i] * f2.vertex_count() + perm[i];
        std::sort(prod.begin(), prod.end());
        edges.insert(std::move(prod));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return Hypergraph(r, static_cast<int>(n),
                    std::vector<Edge>(edges.begin(), edges.end()));
}

Hypergraph tensor_power(const Hypergraph& f, int k, long long vertex_cap) {
  if (k < 1) throw std::invalid_argument("tensor power needs k >= 1");
  double v = 1;
  for (int i = 0; i < k; ++i) {
    v *= f.vertex_count();
    if (v > static_cast<double>(vertex_cap))
      throw budget_error("tensor power exceeds the vertex cap");
  }
  Hypergraph acc = f;
  for (int i = 1; i < k; ++i) acc = tensor_product(acc, f);
  return acc;
}

Hypergraph lift_hypergraph(const Hypergraph& f, int t) {
  if (t < 1) throw std::invalid_argument("lift needs t >= 1");
  int n = f.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(t) * f.edge_count());
  for (int a = 0; a < t; ++a)
    for (const auto& e : f.edges()) {
      Edge g = e;
      g.push_back(n + a);
      edges.push_back(std::move(g));
    }
  return Hypergraph(f.uniformity() + 1, n + t, std::move(edges));
}

PartiteHypergraph lift(const PartiteHypergraph& f, int t) {
  Hypergraph base = lift_hypergraph(f.base(), t);
  std::vector<int> parts = f.parts();
  parts.resize(parts.size() + t, f.uniformity());
  return PartiteHypergraph(std::move(base), std::move(parts));
}

PartiteHypergraph lift_chain(const PartiteHypergraph& f, const std::vector<int>& ts) {
  PartiteHypergraph acc = f;
  for (int t : ts) acc = lift(acc, t);
  return acc;
}

PartiteHypergraph apex_augment(const PartiteHypergraph& f, int part,
                               const std::vector<Edge>& m_edges) {
  int r = f.uniformity();
  if (part < 0 || part >= r) throw std::invalid_argument("invalid part");
  // M transversal to the other parts
  std::vector<int> hit(r);
  std::set<Edge> m_set;
  for (Edge e : m_edges) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != r - 1)
      throw std::invalid_argument("M edge arity must be r-1");
    std::fill(hit.begin(), hit.end(), 0);
    for (Vertex v : e) {
      if (v < 0 || v >= f.base().vertex_count())
        throw std::invalid_argument("M vertex outside parent");
      hit[f.part_of(v)]++;
    }
    if (hit[part] != 0) throw std::invalid_argument("M edge meets the designated part");
    for (int i = 0; i < r; ++i)
      if (i != part && hit[i] != 1)
        throw std::invalid_argument("M edge not transversal to the other parts");
    m_set.insert(std::move(e));
  }
  // every existing link of the part must sit inside M
  for (const auto& link : link_profile(f, part).entries)
    for (const auto& pe : link.parent_edges())
      if (!m_set.count(pe))
        throw std::invalid_argument("link of vertex " + std::to_string(link.anchor) +
                                    " is not contained in M");
  int u = f.base().vertex_count();
  std::vector<Edge> edges = f.base().edges();
  for (const auto& e : m_set) {
    Edge g = e;
    g.push_back(u);
    edges.push_back(std::move(g));
  }
  std::vector<int> parts = f.parts();
  parts.push_back(part);
  return PartiteHypergraph(Hypergraph(r, u + 1, std::move(edges)), std::move(parts));
}

PartiteHypergraph build_from_link_profile(const PartiteHypergraph& base,
                                          const std::vector<std::vector<Edge>>& links) {
  if (links.empty()) throw std::invalid_argument("need at least one anchor");
  int r = base.uniformity() + 1;
  int nb = base.base().vertex_count();
  std::vector<Edge> edges;
  std::vector<int> hit(r - 1);
  for (size_t i = 0; i < links.size(); ++i) {
    std::set<Edge> seen;
    for (Edge e : links[i]) {
      std::sort(e.begin(), e.end());
      if (static_cast<int>(e.size()) != r - 1)
        throw std::invalid_argument("link edge arity must be r-1");
      std::fill(hit.begin(), hit.end(), 0);
      for (Vertex v : e) {
        if (v < 0 || v >= nb) throw std::invalid_argument("link vertex outside base");
        hit[base.part_of(v)]++;
      }
      for (int c = 0; c < r - 1; ++c)
        if (hit[c] != 1) throw std::invalid_argument("link edge not transversal to the base");
      if (!seen.insert(e).second) continue;
      Edge g = e;
      g.push_back(nb + static_cast<int>(i));
      edges.push_back(std::move(g));
    }
  }
  std::vector<int> parts = base.parts();
  parts.resize(parts.size() + links.size(), r - 1);
  return PartiteHypergraph(
      Hypergraph(r, nb + static_cast<int>(links.size()), std::move(edges)), std::move(parts));
}

GridEmbedding grid_embedding(int k) {
  if (k < 2) throw std::invalid_argument("grid embedding needs k >= 2");
  GridEmbedding emb;
  Hypergraph c = catalog("c" + std::to_string(2 * k));
  emb.torus = tensor_product(c, c);
  emb.grid_graph = grid(k);
  int m = 2 * k;
  emb.injection.assign(k * k, -1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int x = ((k + i - j - 2) % m + m) % m;
      int y = (i + j) % m;
      emb.injection[i * k + j] = x * m + y;
    }
  // injectivity
  std::vector<Vertex> sorted = emb.injection;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("grid embedding image is not injective");
  // the map carries grid edges to torus edges
  if (!is_subhypergraph(emb.grid_graph, emb.torus, emb.injection))
    throw std::logic_error("grid embedding does not preserve edges");
  // the induced subgraph on the image is exactly the grid: no extra edges
  std::vector<char> in_u(emb.torus.vertex_count(), 0);
  for (Vertex v : emb.injection) in_u[v] = 1;
  int induced = 0;
  for (const auto& e : emb.torus.edges())
    if (in_u[e[0]] && in_u[e[1]]) ++induced;
  if (induced != emb.grid_graph.edge_count())
    throw std::logic_error("induced subgraph on the embedded set is not the grid");
  return emb;
}

namespace {

Hypergraph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs >= 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Hypergraph(2, n, std::move(edges));
}

Hypergraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Hypergraph(2, n, std::move(edges));
}

Hypergraph cube_graph(int d) {
  if (d < 1) throw std::invalid_argument("hypercube needs dimension >= 1");
  if (d > 20) throw std::invalid_argument("hypercube dimension too large");
  int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b) {
      int u = v ^ (1 << b);
      if (v < u) edges.push_back({v, u});
    }
  return Hypergraph(2, n, std::move(edges));
}

Hypergraph matching_graph(int k) {
  if (k < 1) throw std::invalid_argument("matching needs >= 1 edge");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({2 * i, 2 * i + 1});
  return Hypergraph(2, 2 * k, std::move(edges));
}

}  // namespace

Hypergraph catalog(const std::string& name) {
  if (name == "loose-triangle")
    return Hypergraph(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
  if (name.size() >= 2) {
    char c = name[0];
    std::string rest = name.substr(1);
    bool numeric = !rest.empty() &&
                   std::all_of(rest.begin(), rest.end(),
                               [](char ch) { return std::isdigit(ch) || ch == ','; });
    if (numeric) {
      if (rest.find(',') != std::string::npos) {
        if (c != 'k') throw std::invalid_argument("unknown construction name: " + name);
        std::vector<int> sizes;
        size_t pos = 0;
        while (pos < rest.size()) {
          size_t comma = rest.find(',', pos);
          if (comma == std::string::npos) comma = rest.size();
          sizes.push_back(std::stoi(rest.substr(pos, comma - pos)));
          pos = comma + 1;
        }
        return complete_partite(sizes).base();
      }
      int v = std::stoi(rest);
      switch (c) {
        case 'p': return path_graph(v);
        case 'c': return cycle_graph(v);
        case 'q': return cube_graph(v);
        case 'k': return complete_hypergraph(v, 2);
        case 'm': return matching_graph(v);
        case 'e': return complete_hypergraph(v, v);  // single r-edge
        default: break;
      }
    }
  }
  throw std::invalid_argument("unknown construction name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"pN", "cN", "qN", "kN", "kA,B,...", "mK", "eR", "loose-triangle"};
}

}  // namespace sidex
