#include "sidex/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sidex {

Hypergraph::Hypergraph(int uniformity, int vertex_count, std::vector<Edge> edges)
    : r_(uniformity), n_(vertex_count), edges_(std::move(edges)) {
  if (r_ < 1) throw std::invalid_argument("uniformity must be >= 1");
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != r_)
      throw std::invalid_argument("edge arity does not match uniformity");
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n_) throw std::invalid_argument("edge vertex out of range");
      if (i > 0 && e[i] == e[i - 1])
        throw std::invalid_argument("edge with repeated vertex");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw std::invalid_argument("duplicate edge");
}

bool Hypergraph::has_edge(const Edge& sorted) const {
  return std::binary_search(edges_.begin(), edges_.end(), sorted);
}

int Hypergraph::degree(Vertex v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  return d;
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto& e : edges_)
    for (Vertex v : e) ++d[v];
  return d;
}

PartiteHypergraph::PartiteHypergraph(Hypergraph base, std::vector<int> parts)
    : base_(std::move(base)), parts_(std::move(parts)) {
  int r = base_.uniformity();
  if (static_cast<int>(parts_.size()) != base_.vertex_count())
    throw std::invalid_argument("partition size does not match vertex count");
  std::vector<int> seen(r, 0);
  for (int p : parts_) {
    if (p < 0 || p >= r) throw std::invalid_argument("class index out of range");
    seen[p] = 1;
  }
  if (base_.vertex_count() > 0)
    for (int i = 0; i < r; ++i)
      if (!seen[i]) throw std::invalid_argument("empty partition class");
  std::vector<int> hit(r);
  for (const auto& e : base_.edges()) {
    std::fill(hit.begin(), hit.end(), 0);
    for (Vertex v : e) hit[parts_[v]]++;
    for (int i = 0; i < r; ++i)
      if (hit[i] != 1) throw std::invalid_argument("edge not transversal to the partition");
  }
}

std::vector<Vertex> PartiteHypergraph::part_vertices(int part) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < base_.vertex_count(); ++v)
    if (parts_[v] == part) out.push_back(v);
  return out;
}

std::vector<Edge> Link::parent_edges() const {
  std::vector<Edge> out;
  out.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) {
    Edge p;
    p.reserve(e.size());
    for (Vertex v : e) p.push_back(names[v]);
    std::sort(p.begin(), p.end());
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Link link_hypergraph(const PartiteHypergraph& f, Vertex v) {
  const Hypergraph& g = f.base();
  int r = g.uniformity();
  if (r < 2) throw std::invalid_argument("links are undefined for 1-graphs");
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("unknown vertex");

  std::vector<Edge> rem;
  std::set<Vertex> covered;
  for (const auto& e : g.edges()) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    Edge f_edge;
    for (Vertex u : e)
      if (u != v) f_edge.push_back(u);
    for (Vertex u : f_edge) covered.insert(u);
    rem.push_back(std::move(f_edge));
  }
  Link link;
  link.anchor = v;
  link.names.assign(covered.begin(), covered.end());
  std::vector<int> to_local(g.vertex_count(), -1);
  for (size_t i = 0; i < link.names.size(); ++i) to_local[link.names[i]] = static_cast<int>(i);
  for (auto& e : rem)
    for (auto& u : e) u = to_local[u];
  link.graph = Hypergraph(r - 1, static_cast<int>(link.names.size()), std::move(rem));
  return link;
}

LinkProfile link_profile(const PartiteHypergraph& f, int part) {
  if (part < 0 || part >= f.uniformity()) throw std::invalid_argument("invalid part");
  LinkProfile profile;
  profile.designated_part = part;
  for (Vertex v : f.part_vertices(part)) profile.entries.push_back(link_hypergraph(f, v));
  return profile;
}

Hypergraph downward_hypergraph(const Hypergraph& f, Vertex v) {
  if (f.uniformity() < 2) throw std::invalid_argument("downward graph needs r >= 2");
  if (v < 0 || v >= f.vertex_count()) throw std::invalid_argument("unknown vertex");
  std::vector<Edge> rem;
  for (const auto& e : f.edges()) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    Edge g;
    for (Vertex u : e)
      if (u != v) g.push_back(u);
    rem.push_back(std::move(g));
  }
  return Hypergraph(f.uniformity() - 1, f.vertex_count(), std::move(rem));
}

int boundary_degree(const Hypergraph& f, std::span<const Vertex> u) {
  std::vector<char> in(f.vertex_count(), 0);
  for (Vertex v : u) {
    if (v < 0 || v >= f.vertex_count()) throw std::invalid_argument("U not a vertex subset");
    in[v] = 1;
  }
  int d = 0;
  for (const auto& e : f.edges())
    for (Vertex v : e)
      if (in[v]) {
        ++d;
        break;
      }
  return d;
}

RemovalResult remove_vertices(const Hypergraph& f, std::span<const Vertex> u) {
  std::vector<char> drop(f.vertex_count(), 0);
  for (Vertex v : u) {
    if (v < 0 || v >= f.vertex_count()) throw std::invalid_argument("U not a vertex subset");
    drop[v] = 1;
  }
  RemovalResult res;
  res.old_to_new.assign(f.vertex_count(), -1);
  int next = 0;
  for (Vertex v = 0; v < f.vertex_count(); ++v)
    if (!drop[v]) res.old_to_new[v] = next++;
  std::vector<Edge> kept;
  for (const auto& e : f.edges()) {
    bool hit = false;
    for (Vertex v : e) hit |= drop[v] != 0;
    if (hit) continue;
    Edge g;
    for (Vertex v : e) g.push_back(res.old_to_new[v]);
    kept.push_back(std::move(g));
  }
  res.graph = Hypergraph(f.uniformity(), next, std::move(kept));
  return res;
}

std::vector<Vertex> common_neighborhood(const Hypergraph& h,
                                        const std::vector<Edge>& s_edges,
                                        int s_uniformity) {
  if (s_uniformity != h.uniformity() - 1)
    throw std::invalid_argument("uniformity mismatch: S must be (r-1)-uniform");
  std::vector<Vertex> out;
  Edge probe(h.uniformity());
  for (Vertex u = 0; u < h.vertex_count(); ++u) {
    bool ok = true;
    for (const auto& f : s_edges) {
      if (static_cast<int>(f.size()) != s_uniformity) throw std::invalid_argument("bad S edge");
      if (std::binary_search(f.begin(), f.end(), u)) {
        ok = false;  // u inside the edge: no simple completion
        break;
      }
      probe.assign(f.begin(), f.end());
      probe.push_back(u);
      std::sort(probe.begin(), probe.end());
      if (!h.has_edge(probe)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(u);
  }
  return out;
}

std::vector<Component> components(const Hypergraph& f) {
  int n = f.vertex_count();
  std::vector<int> comp(n, -1);
  // union-find over edges
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : f.edges())
    for (size_t i = 1; i < e.size(); ++i) parent[find(e[0])] = find(e[i]);

  std::vector<Component> out;
  std::vector<int> index_of_root(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    int root = find(v);
    if (index_of_root[root] < 0) {
      index_of_root[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    comp[v] = index_of_root[root];
    out[comp[v]].names.push_back(v);
  }
  std::vector<std::vector<Edge>> comp_edges(out.size());
  std::vector<int> to_local(n, -1);
  for (size_t c = 0; c < out.size(); ++c)
    for (size_t i = 0; i < out[c].names.size(); ++i) to_local[out[c].names[i]] = static_cast<int>(i);
  for (const auto& e : f.edges()) {
    Edge g;
    for (Vertex v : e) g.push_back(to_local[v]);
    comp_edges[comp[e[0]]].push_back(std::move(g));
  }
  for (size_t c = 0; c < out.size(); ++c)
    out[c].graph = Hypergraph(f.uniformity(), static_cast<int>(out[c].names.size()),
                              std::move(comp_edges[c]));
  return out;
}

bool is_subhypergraph(const Hypergraph& f, const Hypergraph& g,
                      std::span<const Vertex> injection) {
  if (static_cast<int>(injection.size()) != f.vertex_count())
    throw std::invalid_argument("injection length does not match pattern");
  std::vector<char> used(g.vertex_count(), 0);
  for (Vertex t : injection) {
    if (t < 0 || t >= g.vertex_count()) throw std::invalid_argument("injection target out of range");
    if (used[t]) throw std::invalid_argument("injection repeats a target");
    used[t] = 1;
  }
  Edge img;
  for (const auto& e : f.edges()) {
    img.clear();
    for (Vertex v : e) img.push_back(injection[v]);
    std::sort(img.begin(), img.end());
    if (!g.has_edge(img)) return false;
  }
  return true;
}

DegreeStats degree_stats(const Hypergraph& f) {
  DegreeStats s;
  auto d = f.degrees();
  if (d.empty()) return s;
  s.max_degree = *std::max_element(d.begin(), d.end());
  s.min_degree = *std::min_element(d.begin(), d.end());
  return s;
}

bool is_connected(const Hypergraph& f) {
  if (f.vertex_count() <= 1) return true;
  return components(f).size() == 1;
}

// ---- embedding / isomorphism ----

namespace {

struct EmbedSearch {
  const Hypergraph& pat;
  const Hypergraph& host;
  std::vector<Vertex> map;        // pattern -> host, -1 unassigned
  std::vector<char> used;         // host vertex taken
  std::vector<int> order;         // pattern vertices, most-constrained first
  std::vector<std::vector<int>> closing;  // edges fully placed at position k
  long long budget;
  int required_host_edge = -1;    // index into host edges, or -1
  bool hit_required = false;

  EmbedSearch(const Hypergraph& f, const Hypergraph& g, long long b)
      : pat(f), host(g), map(f.vertex_count(), -1), used(g.vertex_count(), 0), budget(b) {
    // order: repeatedly take the vertex with most edges into placed ones
    int n = pat.vertex_count();
    std::vector<char> placed(n, 0);
    std::vector<int> pos(n, -1);
    for (int k = 0; k < n; ++k) {
      int best = -1, best_score = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int score = 0;
        for (const auto& e : pat.edges()) {
          if (!std::binary_search(e.begin(), e.end(), v)) continue;
          bool rest = true;
          for (Vertex u : e) rest &= (u == v) || placed[u];
          score += rest ? 1 : 0;
        }
        if (score > best_score) {
          best_score = score;
          best = v;
        }
      }
      placed[best] = 1;
      pos[best] = k;
      order.push_back(best);
    }
    closing.assign(n, {});
    for (int ei = 0; ei < pat.edge_count(); ++ei) {
      int last = -1;
      for (Vertex v : pat.edge(ei)) last = std::max(last, pos[v]);
      if (last >= 0) closing[last].push_back(ei);
    }
  }

  bool feasible(int k, Vertex target) {
    Edge img;
    for (int ei : closing[k]) {
      img.clear();
      for (Vertex v : pat.edge(ei)) img.push_back(v == order[k] ? target : map[v]);
      std::sort(img.begin(), img.end());
      if (!host.has_edge(img)) return false;
    }
    return true;
  }

  bool edge_covered(int k) {
    if (required_host_edge < 0) return true;
    const Edge& req = host.edge(required_host_edge);
    Edge img;
    for (int ei : closing[k]) {
      img.clear();
      for (Vertex v : pat.edge(ei)) img.push_back(map[v]);
      std::sort(img.begin(), img.end());
      if (img == req) return true;
    }
    return false;
  }

  bool run(int k) {
    if (budget-- <= 0) throw std::runtime_error("embedding search budget exceeded");
    if (k == pat.vertex_count()) return required_host_edge < 0 || hit_required;
    int v = order[k];
    for (Vertex t = 0; t < host.vertex_count(); ++t) {
      if (used[t]) continue;
      if (!feasible(k, t)) continue;
      map[v] = t;
      used[t] = 1;
      bool prev_hit = hit_required;
      if (required_host_edge >= 0 && !hit_required) hit_required = edge_covered(k);
      if (run(k + 1)) return true;
      hit_required = prev_hit;
      map[v] = -1;
      used[t] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_embedding(const Hypergraph& f, const Hypergraph& g,
                                                  long long node_budget) {
  if (f.uniformity() != g.uniformity()) return std::nullopt;
  if (f.vertex_count() > g.vertex_count() || f.edge_count() > g.edge_count())
    return std::nullopt;
  EmbedSearch s(f, g, node_budget);
  if (s.run(0)) return s.map;
  return std::nullopt;
}

bool contains_copy(const Hypergraph& g, const Hypergraph& f, int anchor_edge,
                   long long node_budget) {
  if (f.uniformity() != g.uniformity()) return false;
  if (f.vertex_count() > g.vertex_count() || f.edge_count() > g.edge_count()) return false;
  EmbedSearch s(f, g, node_budget);
  s.required_host_edge = anchor_edge;
  return s.run(0);
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, long long node_budget) {
  if (a.uniformity() != b.uniformity() || a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  // an edge-count-preserving embedding between equal-sized graphs is an
  // isomorphism: every edge image is distinct, so all of E(b) is covered
  return find_embedding(a, b, node_budget).has_value();
}

namespace {

// Canonical labeling = the relabeling maximizing the characteristic
// bitvector of the edge set over colex-ordered r-subsets of labels.
// Subsets inside {0..m-1} occupy a prefix of the colex enumeration, so
// after m labels are placed the decided bits are a true prefix and
// prefix comparison against the incumbent is a sound prune.
struct CanonSearch {
  const Hypergraph& g;
  int n, r;
  std::vector<int> old_of_label;  // new label -> old vertex
  std::vector<int> label_of_old;  // old -> new, -1 unassigned
  std::vector<uint64_t> cur;      // bit i (msb-first within words) = colex rank i
  int cur_bits = 0;
  std::vector<uint64_t> best;
  int best_bits = 0;
  bool have_best = false;
  std::vector<int> best_map;  // old -> new for the incumbent
  std::vector<int> deg;

  explicit CanonSearch(const Hypergraph& f)
      : g(f), n(f.vertex_count()), r(f.uniformity()), old_of_label(n, -1),
        label_of_old(n, -1), deg(f.degrees()) {}

  void push_bit(bool b) {
    if (cur_bits % 64 == 0) cur.push_back(0);
    if (b) cur.back() |= 1ull << (63 - cur_bits % 64);
    ++cur_bits;
  }

  void truncate(int bits) {
    cur_bits = bits;
    cur.resize((bits + 63) / 64);
    if (bits % 64 && !cur.empty()) cur.back() &= ~0ull << (64 - bits % 64);
  }

  // -1 if cur prefix is smaller than best's, 0 equal, +1 greater
  int cmp_prefix() const {
    if (!have_best) return 1;
    int words = (cur_bits + 63) / 64;
    for (int w = 0; w < words; ++w) {
      uint64_t a = cur[w];
      uint64_t b = w < static_cast<int>(best.size()) ? best[w] : 0;
      if (w == words - 1 && cur_bits % 64) {
        uint64_t mask = ~0ull << (64 - cur_bits % 64);
        a &= mask;
        b &= mask;
      }
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  // append bits for all r-subsets of labels {0..m} containing m,
  // i.e. (r-1)-subsets T of {0..m-1} in colex order
  void append_block(int m) {
    if (r - 1 > m) return;  // no subsets yet
    std::vector<int> t(r - 1);
    std::iota(t.begin(), t.end(), 0);
    Edge probe(r);
    while (true) {
      for (int i = 0; i < r - 1; ++i) probe[i] = old_of_label[t[i]];
      probe[r - 1] = old_of_label[m];
      std::sort(probe.begin(), probe.end());
      push_bit(g.has_edge(probe));
      // colex successor of t within {0..m-1}
      if (r - 1 == 0) break;
      int i = 0;
      while (i + 1 < r - 1 && t[i] + 1 == t[i + 1]) {
        t[i] = i;
        ++i;
      }
      ++t[i];
      if (t[r - 2] >= m) break;
    }
  }

  void run(int m) {
    if (m == n) {
      int c = cmp_prefix();
      if (!have_best || c > 0) {
        best = cur;
        best_bits = cur_bits;
        have_best = true;
        best_map = label_of_old;
      }
      return;
    }
    std::vector<int> cands;
    for (int v = 0; v < n; ++v)
      if (label_of_old[v] < 0) cands.push_back(v);
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
      if (deg[a] != deg[b]) return deg[a] > deg[b];
      return a < b;
    });
    int saved_bits = cur_bits;
    for (int v : cands) {
      label_of_old[v] = m;
      old_of_label[m] = v;
      append_block(m);
      if (cmp_prefix() >= 0) run(m + 1);
      truncate(saved_bits);
      label_of_old[v] = -1;
      old_of_label[m] = -1;
    }
  }
};

}  // namespace

Hypergraph canonical_form(const Hypergraph& f) {
  if (f.vertex_count() == 0) return f;
  if (f.vertex_count() > 16)
    throw std::invalid_argument("canonical form supported at desk scale only (n <= 16)");
  CanonSearch s(f);
  s.run(0);
  std::vector<Edge> edges;
  Edge img;
  for (const auto& e : f.edges()) {
    img.clear();
    for (Vertex v : e) img.push_back(s.best_map[v]);
    std::sort(img.begin(), img.end());
    edges.push_back(img);
  }
  return Hypergraph(f.uniformity(), f.vertex_count(), std::move(edges));
}

std::string canonical_key(const Hypergraph& f) {
  Hypergraph c = canonical_form(f);
  std::string key;
  key += static_cast<char>('0' + c.uniformity());
  key += ':';
  key += std::to_string(c.vertex_count());
  key += ':';
  for (const auto& e : c.edges()) {
    for (Vertex v : e) {
      key += std::to_string(v);
      key += ',';
    }
    key += ';';
  }
  return key;
}

namespace {

bool partition_dfs(const Hypergraph& f, std::vector<int>& parts, Vertex v) {
  int r = f.uniformity();
  if (v == f.vertex_count()) {
    std::vector<char> seen(r, 0);
    for (int p : parts) seen[p] = 1;
    for (int i = 0; i < r; ++i)
      if (!seen[i]) return false;
    return true;
  }
  for (int p = 0; p < r; ++p) {
    parts[v] = p;
    bool ok = true;
    for (const auto& e : f.edges()) {
      if (!std::binary_search(e.begin(), e.end(), v)) continue;
      std::vector<int> hit(r, 0);
      bool decided = true;
      for (Vertex u : e) {
        if (u <= v)
          hit[parts[u]]++;
        else
          decided = false;
      }
      for (int i = 0; i < r; ++i)
        if (hit[i] > 1) ok = false;
      if (decided)
        for (int i = 0; i < r; ++i)
          if (hit[i] != 1) ok = false;
      if (!ok) break;
    }
    if (ok && partition_dfs(f, parts, v + 1)) return true;
  }
  parts[v] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_partition(const Hypergraph& f) {
  std::vector<int> parts(f.vertex_count(), -1);
  if (f.vertex_count() == 0) return parts;
  if (partition_dfs(f, parts, 0)) return parts;
  return std::nullopt;
}

PartiteHypergraph as_partite(const Hypergraph& f) {
  auto parts = find_partition(f);
  if (!parts) throw std::invalid_argument("hypergraph admits no transversal r-partition");
  return PartiteHypergraph(f, *parts);
}

}  // namespace sidex
