#include "sidex/sidorenko.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sidex/constructions.hpp"
#include "sidex/util.hpp"

namespace sidex {

SidorenkoCheck sidorenko_check(const Hypergraph& f, const Hypergraph& host,
                               const HomOptions& opts) {
  if (f.edge_count() < 1) throw std::invalid_argument("pattern needs at least one edge");
  SidorenkoCheck res;
  res.t_pattern = density(f, host, opts).value;
  res.t_edge_powered =
      rat_pow(edge_density(host), static_cast<unsigned long>(f.edge_count()));
  res.margin = res.t_pattern - res.t_edge_powered;
  res.holds = res.margin >= 0;
  return res;
}

namespace {

double rat_log(const Rat& q) {
  signed long en, ed;
  double dn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double dd = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(dn) - std::log(dd) + (en - ed) * std::log(2.0);
}

}  // namespace

ExponentWitness exponent_ratio(const Hypergraph& f, const Hypergraph& host, int q_cap,
                               const HomOptions& opts) {
  ExponentWitness w;
  w.pattern = f;
  w.host = host;
  w.t_pattern = density(f, host, opts).value;
  w.t_edge = edge_density(host);
  if (w.t_pattern == 0) throw std::invalid_argument("t_F(H) = 0: host carries no copy");
  if (w.t_edge == 0) throw std::invalid_argument("t_{K_r}(H) = 0: edgeless host");
  if (w.t_edge >= 1) throw std::invalid_argument("degenerate host with edge density 1");
  w.float_ratio = rat_log(w.t_pattern) / rat_log(w.t_edge);

  // max p/q with q <= q_cap such that t_F^q <= t_K^p (so p/q <= ln t_F / ln t_K)
  Int best_p = 0, best_q = 1;
  bool best_exact = false;
  for (int q = 1; q <= q_cap; ++q) {
    Rat lhs = rat_pow(w.t_pattern, static_cast<unsigned long>(q));
    unsigned long lo = 0, hi = 1;
    while (lhs <= rat_pow(w.t_edge, hi)) {
      lo = hi;
      hi *= 2;
      if (hi > (1ul << 30)) throw std::runtime_error("exponent bracket exploded");
    }
    // invariant: pred(lo) true, pred(hi) false
    while (hi - lo > 1) {
      unsigned long mid = lo + (hi - lo) / 2;
      if (lhs <= rat_pow(w.t_edge, mid))
        lo = mid;
      else
        hi = mid;
    }
    if (Int(static_cast<unsigned long>(lo)) * best_q > best_p * q) {
      best_p = static_cast<unsigned long>(lo);
      best_q = q;
      best_exact = lhs == rat_pow(w.t_edge, lo);
    }
  }
  w.p = best_p;
  w.q = best_q;
  w.certified = make_rat(best_p, best_q);
  w.exact = best_exact;
  // soundness re-check at emission
  if (!(rat_pow(w.t_pattern, best_q.get_ui()) <= rat_pow(w.t_edge, best_p.get_ui())))
    throw std::logic_error("witness certificate failed its own re-check");
  return w;
}

// ---- unified bound machinery ----

namespace {

struct UnifiedValidation {
  LinkProfile profile;
  int anchor_index = -1;
  std::vector<Edge> m_edges;       // sorted, parent names
  std::vector<Vertex> m_vertices;  // covered, sorted
  Hypergraph m_compact;
  std::vector<Vertex> m_names;
  std::vector<int> d_values;  // d_M(V(L_i)) per profile entry
  std::vector<HypothesisCheck> checks;
  std::vector<Assumption> assumptions;
};

int boundary_in_m(const std::vector<Edge>& m_edges, const std::set<Vertex>& verts) {
  int d = 0;
  for (const auto& e : m_edges) {
    for (Vertex v : e)
      if (verts.count(v)) {
        ++d;
        break;
      }
  }
  return d;
}

bool user_asserts(const std::vector<Assumption>& user, const std::string& property) {
  for (const auto& a : user)
    if (a.property == property) return true;
  return false;
}

UnifiedValidation validate_unified(const PartiteHypergraph& f, int part,
                                   const std::vector<Edge>& m_edges_in, BoundCase bcase,
                                   const std::vector<Assumption>& user_assumptions) {
  UnifiedValidation val;
  val.profile = link_profile(f, part);
  if (val.profile.entries.empty())
    throw std::invalid_argument("designated part has no vertices");

  val.m_edges = m_edges_in;
  for (auto& e : val.m_edges) std::sort(e.begin(), e.end());
  std::sort(val.m_edges.begin(), val.m_edges.end());
  val.m_edges.erase(std::unique(val.m_edges.begin(), val.m_edges.end()), val.m_edges.end());
  std::set<Vertex> covered;
  for (const auto& e : val.m_edges)
    for (Vertex v : e) covered.insert(v);
  val.m_vertices.assign(covered.begin(), covered.end());
  std::vector<int> to_local(f.base().vertex_count(), -1);
  for (size_t i = 0; i < val.m_vertices.size(); ++i) to_local[val.m_vertices[i]] = i;
  {
    std::vector<Edge> compact = val.m_edges;
    for (auto& e : compact)
      for (auto& v : e) v = to_local[v];
    val.m_compact = Hypergraph(f.uniformity() - 1, static_cast<int>(val.m_vertices.size()),
                               std::move(compact));
    val.m_names = val.m_vertices;
  }

  // L(v_1) = M: some anchor's link must equal M exactly (parent names)
  std::set<Edge> m_set(val.m_edges.begin(), val.m_edges.end());
  for (size_t i = 0; i < val.profile.entries.size(); ++i) {
    auto pe = val.profile.entries[i].parent_edges();
    if (std::set<Edge>(pe.begin(), pe.end()) == m_set) {
      val.anchor_index = static_cast<int>(i);
      break;
    }
  }
  val.checks.push_back({"link-profile-contains-M", val.anchor_index >= 0,
                        val.anchor_index >= 0
                            ? "anchor " + std::to_string(val.profile.entries[val.anchor_index].anchor)
                            : "no anchor has link equal to M"});
  if (val.anchor_index < 0)
    throw std::invalid_argument("hypothesis failed: no link in the profile equals M");

  // every link inside M, under the labelled (parent-name) identification
  for (const auto& entry : val.profile.entries) {
    for (const auto& pe : entry.parent_edges()) {
      if (!m_set.count(pe)) {
        val.checks.push_back({"links-inside-M", false,
                              "link of vertex " + std::to_string(entry.anchor) +
                                  " has an edge outside M"});
        throw std::invalid_argument("hypothesis failed: link of vertex " +
                                    std::to_string(entry.anchor) + " is not inside M");
      }
    }
  }
  val.checks.push_back({"links-inside-M", true,
                        std::to_string(val.profile.entries.size()) + " links verified"});

  // boundary degrees
  for (const auto& entry : val.profile.entries) {
    std::set<Vertex> verts(entry.names.begin(), entry.names.end());
    val.d_values.push_back(boundary_in_m(val.m_edges, verts));
  }

  if (bcase == BoundCase::sidorenko_components) {
    auto comps = components(val.m_compact);
    std::vector<int> comp_of_parent(f.base().vertex_count(), -1);
    for (size_t c = 0; c < comps.size(); ++c)
      for (Vertex lv : comps[c].names) comp_of_parent[val.m_names[lv]] = static_cast<int>(c);
    // each link must be an exact union of components of M
    for (const auto& entry : val.profile.entries) {
      std::set<int> touched;
      for (const auto& pe : entry.parent_edges()) touched.insert(comp_of_parent[pe[0]]);
      size_t expect_edges = 0, expect_vertices = 0;
      for (int c : touched) {
        expect_edges += comps[c].graph.edge_count();
        expect_vertices += comps[c].names.size();
      }
      if (entry.parent_edges().size() != expect_edges ||
          entry.names.size() != expect_vertices) {
        val.checks.push_back({"links-are-component-unions", false,
                              "link of vertex " + std::to_string(entry.anchor) +
                                  " is not a union of components of M"});
        throw std::invalid_argument(
            "hypothesis failed: link of vertex " + std::to_string(entry.anchor) +
            " is not a disjoint union of components of M");
      }
    }
    val.checks.push_back({"links-are-component-unions", true, ""});
    // Sidorenko labels per component
    for (const auto& comp : comps) {
      auto tag = match_sidorenko(comp.graph);
      if (tag) {
        val.assumptions.push_back({"sidorenko", tag->detail, tag->provenance});
      } else if (user_asserts(user_assumptions, "sidorenko")) {
        val.assumptions.push_back({"sidorenko",
                                   "component on " + std::to_string(comp.names.size()) +
                                       " vertices",
                                   "user-asserted"});
      } else {
        throw std::invalid_argument(
            "a component of M is not in the Sidorenko catalog; pass an explicit assumption");
      }
    }
  } else {
    auto tag = match_dominating(val.m_compact);
    if (tag) {
      val.assumptions.push_back({"dominating", tag->detail, tag->provenance});
    } else if (user_asserts(user_assumptions, "dominating")) {
      val.assumptions.push_back({"dominating", "M", "user-asserted"});
    } else {
      throw std::invalid_argument(
          "M is not in the dominating catalog; pass an explicit assumption");
    }
  }
  for (const auto& a : user_assumptions) val.assumptions.push_back(a);
  return val;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

BoundCertificate bound_unified(const PartiteHypergraph& f, int part,
                               const std::vector<Edge>& m_edges, BoundCase bcase,
                               const std::vector<Assumption>& user_assumptions,
                               const HomOptions&) {
  UnifiedValidation val = validate_unified(f, part, m_edges, bcase, user_assumptions);
  BoundCertificate cert;
  cert.theorem =
      bcase == BoundCase::sidorenko_components ? "unified-case-1" : "unified-case-2";
  int sum = 0;
  for (int d : val.d_values) sum += d;
  if (bcase == BoundCase::sidorenko_components && sum != f.base().edge_count())
    throw std::logic_error(
        "disjoint-link identity violated after validation (validator bug)");
  cert.bound = sum;
  cert.checks = val.checks;
  cert.assumptions = val.assumptions;
  cert.data["t"] = std::to_string(val.profile.entries.size());
  cert.data["e_M"] = std::to_string(val.m_edges.size());
  cert.data["d_values"] = join_ints(val.d_values);
  cert.data["e_F"] = std::to_string(f.base().edge_count());
  if (bcase == BoundCase::sidorenko_components) cert.data["identity"] = "sum d = e(F)";
  return cert;
}

BoundCertificate bound_tight_cycle(int ell, const HomOptions& opts) {
  if (ell < 2) throw std::invalid_argument("tight-cycle bound needs l >= 2");
  PartiteHypergraph f = tight_cycle_partite(3, 3 * ell);
  constexpr int kPart = 2;
  LinkProfile profile = link_profile(f, kPart);
  std::set<Edge> union_edges;
  for (const auto& entry : profile.entries)
    for (const auto& pe : entry.parent_edges()) union_edges.insert(pe);
  std::vector<Edge> m_edges(union_edges.begin(), union_edges.end());

  PartiteHypergraph augmented = apex_augment(f, kPart, m_edges);
  BoundCertificate inner =
      bound_unified(augmented, kPart, m_edges, BoundCase::dominating, {}, opts);

  BoundCertificate cert;
  cert.theorem = "tight-cycle";
  cert.bound = 7 * ell;
  cert.checks = inner.checks;
  cert.checks.push_back(
      {"union-of-links-is-even-cycle", true, "C_" + std::to_string(2 * ell)});
  cert.assumptions = inner.assumptions;
  cert.data["l"] = std::to_string(ell);
  cert.data["formula"] = "2l + 5l = 7l";
  cert.data["instance_exact_sum"] = inner.bound.get_str();
  cert.data["d_values"] = inner.data["d_values"];
  return cert;
}

BoundCertificate bound_sparse(const PartiteHypergraph& f) {
  auto deg = f.base().degrees();
  for (size_t v = 0; v < deg.size(); ++v)
    if (deg[v] == 0)
      throw std::invalid_argument("isolated vertex " + std::to_string(v) +
                                  ": the sparse bound assumes none");
  int vcount = f.base().vertex_count();
  int r = f.uniformity();
  Rat c = make_rat(f.base().edge_count(), vcount);
  BoundCertificate cert;
  cert.theorem = "sparse";
  cert.bound = 2 * c * Rat(int_pow(Int(vcount), static_cast<unsigned long>(r - 1)));
  cert.checks.push_back({"no-isolated-vertices", true, ""});
  cert.assumptions.push_back({"dominating", "complete (r-1)-partite container",
                              "norming (Hatami 2010)"});
  cert.data["c"] = c.get_str();
  cert.data["v"] = std::to_string(vcount);
  cert.data["r"] = std::to_string(r);
  return cert;
}

BoundCertificate bound_grid_links(const PartiteHypergraph& f, int part, int k) {
  if (f.uniformity() != 3) throw std::invalid_argument("grid-links bound is for 3-graphs");
  LinkProfile profile = link_profile(f, part);
  std::set<Edge> union_edges;
  std::set<Vertex> covered;
  for (const auto& entry : profile.entries)
    for (const auto& pe : entry.parent_edges()) {
      union_edges.insert(pe);
      covered.insert(pe[0]);
      covered.insert(pe[1]);
    }
  std::vector<Vertex> names(covered.begin(), covered.end());
  std::vector<int> to_local(f.base().vertex_count(), -1);
  for (size_t i = 0; i < names.size(); ++i) to_local[names[i]] = static_cast<int>(i);
  std::vector<Edge> compact;
  for (Edge e : union_edges) {
    for (auto& v : e) v = to_local[v];
    std::sort(e.begin(), e.end());
    compact.push_back(e);
  }
  Hypergraph union_graph(2, static_cast<int>(names.size()), compact);
  auto emb = find_embedding(union_graph, grid(k));
  if (!emb)
    throw std::invalid_argument("union of links does not embed into the " +
                                std::to_string(k) + "x" + std::to_string(k) + " grid");
  GridEmbedding ge = grid_embedding(k);

  BoundCertificate cert;
  cert.theorem = "grid-links";
  cert.bound = Rat(8 * f.base().edge_count() + 8 * k * k);
  cert.checks.push_back({"links-inside-grid", true,
                         "union of links on " + std::to_string(names.size()) +
                             " vertices embeds in G_" + std::to_string(k)});
  cert.checks.push_back({"grid-inside-torus", true,
                         "G_" + std::to_string(k) + " realized inside C_" +
                             std::to_string(2 * k) + " (x) C_" + std::to_string(2 * k)});
  cert.assumptions.push_back({"dominating",
                              "C_" + std::to_string(2 * k) + " (x) C_" + std::to_string(2 * k),
                              "tensor product of weakly norming graphs (Hatami 2010)"});
  cert.data["k"] = std::to_string(k);
  cert.data["e_F"] = std::to_string(f.base().edge_count());
  cert.data["torus_vertices"] = std::to_string(ge.torus.vertex_count());
  cert.data["torus_edges"] = std::to_string(ge.torus.edge_count());
  return cert;
}

BoundCertificate lift_bound(const Rat& s_f, const std::vector<int>& ts) {
  BoundCertificate cert;
  cert.theorem = "lift";
  Rat bound = s_f;
  for (int t : ts) {
    if (t < 1) throw std::invalid_argument("lift parameters must be >= 1");
    bound *= t;
  }
  cert.bound = bound;
  cert.data["s_F"] = s_f.get_str();
  cert.data["ts"] = join_ints(ts);
  return cert;
}

AmplifyReport tensor_amplify(const Hypergraph& f, const Hypergraph& host, const Rat& c,
                             const Rat& s, int max_power, const HomOptions& opts) {
  if (max_power < 1) throw std::invalid_argument("need at least one power");
  if (s < 0) throw std::invalid_argument("exponent must be nonnegative");
  AmplifyReport rep;
  rep.t_pattern = density(f, host, opts).value;
  rep.t_edge = edge_density(host);
  unsigned long p = s.get_num().get_ui();
  unsigned long q = s.get_den().get_ui();
  bool integral = q == 1;
  Rat t_edge_pow_s;  // t_K^s, exact only when s is an integer
  if (integral && rep.t_edge > 0) t_edge_pow_s = rat_pow(rep.t_edge, p);
  for (int k = 1; k <= max_power; ++k) {
    AmplifyStep step;
    step.power = k;
    // t_F^k >= c t_K^{sk}  <=>  t_F^{kq} >= c^q t_K^{pk}
    Rat lhs = rat_pow(rep.t_pattern, static_cast<unsigned long>(k) * q);
    Rat rhs = rat_pow(c, q) * rat_pow(rep.t_edge, p * static_cast<unsigned long>(k));
    step.holds = lhs >= rhs;
    if (integral && t_edge_pow_s > 0)
      step.slack = rat_pow(rep.t_pattern / t_edge_pow_s, static_cast<unsigned long>(k));
    if (!step.holds && !rep.first_violation) rep.first_violation = k;
    rep.steps.push_back(std::move(step));
  }
  return rep;
}

HomRatioResult hom_ratio_check(const Hypergraph& m, const std::vector<int>& sub_edges,
                               const Hypergraph& host, BoundCase mode,
                               const std::vector<Assumption>& user_assumptions,
                               const HomOptions& opts) {
  HomRatioResult res;
  std::set<Vertex> covered;
  for (int ei : sub_edges) {
    if (ei < 0 || ei >= m.edge_count()) throw std::invalid_argument("edge index out of range");
    for (Vertex v : m.edge(ei)) covered.insert(v);
  }
  std::vector<Vertex> sub_vertices(covered.begin(), covered.end());

  if (mode == BoundCase::sidorenko_components) {
    std::set<int> selected(sub_edges.begin(), sub_edges.end());
    for (const auto& comp : components(m)) {
      std::set<Vertex> comp_set(comp.names.begin(), comp.names.end());
      bool touched = false;
      for (Vertex v : sub_vertices) touched |= comp_set.count(v) > 0;
      if (!touched) continue;
      // every edge of a touched component must be selected
      for (int ei = 0; ei < m.edge_count(); ++ei)
        if (comp_set.count(m.edge(ei)[0]) && !selected.count(ei))
          throw std::invalid_argument("M' is not a union of connected components of M");
      for (Vertex v : comp.names)
        if (!covered.count(v) && comp.graph.edge_count() > 0)
          throw std::invalid_argument("M' is not a union of connected components of M");
    }
    for (const auto& comp : components(m)) {
      if (comp.graph.edge_count() == 0) continue;
      auto tag = match_sidorenko(comp.graph);
      if (tag)
        res.assumptions.push_back({"sidorenko", tag->detail, tag->provenance});
      else if (user_asserts(user_assumptions, "sidorenko"))
        res.assumptions.push_back({"sidorenko", "component of M", "user-asserted"});
      else
        throw std::invalid_argument(
            "a component of M is not in the Sidorenko catalog; pass an explicit assumption");
    }
  } else {
    auto tag = match_dominating(m);
    if (tag)
      res.assumptions.push_back({"dominating", tag->detail, tag->provenance});
    else if (user_asserts(user_assumptions, "dominating"))
      res.assumptions.push_back({"dominating", "M", "user-asserted"});
    else
      throw std::invalid_argument(
          "M is not in the dominating catalog; pass an explicit assumption");
  }

  res.hom_whole = count_homomorphisms(m, host, opts);
  Hypergraph rest = remove_vertices(m, sub_vertices).graph;
  res.hom_rest = count_homomorphisms(rest, host, opts);
  if (res.hom_rest == 0) throw std::invalid_argument("hom(M - V(M'), H) = 0");
  res.boundary = boundary_degree(m, sub_vertices);

  int r = host.uniformity();
  Int n(host.vertex_count());
  Int edge_hom = factorial(static_cast<unsigned long>(r)) * host.edge_count();
  unsigned long d = static_cast<unsigned long>(res.boundary);
  // hom(M,H) / hom_rest >= (r! e / n^r)^d n^{v'}  <=>
  // hom(M,H) n^{rd} >= hom_rest (r! e)^d n^{v'}
  Int lhs_scaled = res.hom_whole * int_pow(n, static_cast<unsigned long>(r) * d);
  Int rhs_scaled = res.hom_rest * int_pow(edge_hom, d) *
                   int_pow(n, static_cast<unsigned long>(sub_vertices.size()));
  res.holds = lhs_scaled >= rhs_scaled;
  res.lhs = make_rat(res.hom_whole, res.hom_rest);
  res.rhs = rat_pow(edge_density(host), d) *
            Rat(int_pow(n, static_cast<unsigned long>(sub_vertices.size())));
  return res;
}

// ---- proof trace ----

namespace {

// completion bitmask: vertices u with img ∪ {u} an edge of host
struct CompletionCache {
  const Hypergraph& host;
  std::map<Edge, Bitmask> cache;

  explicit CompletionCache(const Hypergraph& h) : host(h) {}

  const Bitmask& get(const Edge& sorted_img) {
    auto it = cache.find(sorted_img);
    if (it != cache.end()) return it->second;
    Bitmask mask(host.vertex_count());
    Edge probe;
    for (int u = 0; u < host.vertex_count(); ++u) {
      if (std::binary_search(sorted_img.begin(), sorted_img.end(), u)) continue;
      probe = sorted_img;
      probe.push_back(u);
      std::sort(probe.begin(), probe.end());
      if (host.has_edge(probe)) mask.set(u);
    }
    return cache.emplace(sorted_img, std::move(mask)).first->second;
  }
};

// enumerate every hom of `pattern` into `host` (edge-valid maps)
template <typename Fn>
void enumerate_homs(const Hypergraph& pattern, const Hypergraph& host, long long* budget,
                    Fn&& fn) {
  int v = pattern.vertex_count();
  if (v == 0) return;
  std::vector<int> map(v, 0);
  // simple odometer with full edge validation; instances are desk-scale
  int n = host.vertex_count();
  if (n == 0) return;
  Edge img;
  while (true) {
    if ((*budget)-- <= 0) throw budget_error("proof trace budget exceeded");
    bool ok = true;
    for (const auto& e : pattern.edges()) {
      img.clear();
      for (Vertex x : e) img.push_back(map[x]);
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end() || !host.has_edge(img)) {
        ok = false;
        break;
      }
    }
    if (ok) fn(map);
    int i = v - 1;
    while (i >= 0 && map[i] == n - 1) map[i--] = 0;
    if (i < 0) break;
    ++map[i];
    for (int j = i + 1; j < v; ++j) map[j] = 0;
  }
}

}  // namespace

ProofTrace proof_trace(const PartiteHypergraph& f, int part,
                       const std::vector<Edge>& m_edges, const Hypergraph& host,
                       BoundCase bcase, const std::vector<Assumption>& user_assumptions,
                       long long budget, const HomOptions& opts) {
  if (host.uniformity() != f.uniformity())
    throw std::invalid_argument("host uniformity mismatch");
  UnifiedValidation val = validate_unified(f, part, m_edges, bcase, user_assumptions);

  ProofTrace trace;
  trace.checks = val.checks;
  trace.assumptions = val.assumptions;
  trace.t = static_cast<int>(val.profile.entries.size());
  trace.m_edge_count = static_cast<int>(val.m_edges.size());
  trace.t_edge = edge_density(host);

  int n = host.vertex_count();
  int t = trace.t;
  int em = trace.m_edge_count;
  Int two_t_pow = int_pow(Int(2 * t), static_cast<unsigned long>(em));

  // parent vertex -> compact index inside M
  std::vector<int> m_index(f.base().vertex_count(), -1);
  for (size_t i = 0; i < val.m_names.size(); ++i) m_index[val.m_names[i]] = static_cast<int>(i);

  CompletionCache completions(host);

  // rare flags per non-anchor link, indexed by the odometer rank of psi
  struct RareSet {
    int link_vertices = 0;
    std::vector<char> rare;
  };
  std::vector<RareSet> rare_sets(val.profile.entries.size());

  for (size_t i = 0; i < val.profile.entries.size(); ++i) {
    if (static_cast<int>(i) == val.anchor_index) continue;
    const Link& link = val.profile.entries[i];
    TraceLinkData data;
    data.anchor = link.anchor;
    data.boundary = val.d_values[i];
    data.threshold = make_rat(1, two_t_pow) *
                     rat_pow(trace.t_edge, static_cast<unsigned long>(data.boundary)) * n;
    data.z_per_vertex.assign(n, 0);

    int vi = link.graph.vertex_count();
    double total_maps = std::pow(static_cast<double>(n), vi);
    if (total_maps > static_cast<double>(budget))
      throw budget_error("rare-set enumeration exceeds the trace budget");
    RareSet& rs = rare_sets[i];
    rs.link_vertices = vi;
    rs.rare.assign(static_cast<size_t>(total_maps), 0);

    std::vector<int> psi(std::max(vi, 1), 0);
    size_t rank = 0;
    Edge img;
    Bitmask neigh(n);
    if (vi == 0) {
      // empty link: nothing rare to track
    } else {
      while (true) {
        budget -= 1;
        if (budget <= 0) throw budget_error("proof trace budget exceeded");
        bool degenerate = false;
        neigh = Bitmask::all(n);
        for (const auto& e : link.graph.edges()) {
          img.clear();
          for (Vertex x : e) img.push_back(psi[x]);
          std::sort(img.begin(), img.end());
          if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
            degenerate = true;
            break;
          }
          neigh &= completions.get(img);
          if (!neigh.any()) break;
        }
        int neigh_size = degenerate ? 0 : neigh.count();
        if (Rat(neigh_size) <= data.threshold) {
          rs.rare[rank] = 1;
          data.rare_count += 1;
          if (!degenerate && neigh_size > 0) {
            data.z_total += neigh_size;
            neigh.for_each([&](int u) { data.z_per_vertex[u] += 1; });
          }
        }
        int j = vi - 1;
        while (j >= 0 && psi[j] == n - 1) psi[j--] = 0;
        if (j < 0) break;
        ++psi[j];
        for (int jj = j + 1; jj < vi; ++jj) psi[jj] = 0;
        // rank is the base-n number with psi[0] most significant
        rank = 0;
        for (int jj = 0; jj < vi; ++jj) rank = rank * n + psi[jj];
      }
    }
    // Z^{(i)} consistency (sum over vertices)
    Int z_sum = 0;
    for (const auto& z : data.z_per_vertex) z_sum += z;
    if (z_sum != data.z_total) throw std::logic_error("Z bookkeeping mismatch");
    data.bad.assign(n, 0);
    trace.links.push_back(std::move(data));
  }

  // restriction index maps: link compact vertex -> M compact vertex
  std::vector<std::vector<int>> restriction(val.profile.entries.size());
  for (size_t i = 0; i < val.profile.entries.size(); ++i) {
    if (static_cast<int>(i) == val.anchor_index) continue;
    const Link& link = val.profile.entries[i];
    restriction[i].reserve(link.names.size());
    for (Vertex pv : link.names) restriction[i].push_back(m_index[pv]);
  }

  // hom(M, D_H(u)) enumeration with per-link rare restriction counts
  trace.hom_m_downward.assign(n, 0);
  trace.rich_count.assign(n, 0);
  std::vector<std::vector<Int>> rare_restr(val.profile.entries.size(),
                                           std::vector<Int>(n, 0));
  for (int u = 0; u < n; ++u) {
    Hypergraph down = downward_hypergraph(host, u);
    enumerate_homs(val.m_compact, down, &budget, [&](const std::vector<int>& phi) {
      trace.hom_m_downward[u] += 1;
      bool all_not_rare = true;
      for (size_t i = 0; i < val.profile.entries.size(); ++i) {
        if (static_cast<int>(i) == val.anchor_index) continue;
        size_t rank = 0;
        for (int idx : restriction[i]) rank = rank * n + phi[idx];
        if (rare_sets[i].rare[rank]) {
          rare_restr[i][u] += 1;
          all_not_rare = false;
        }
      }
      if (all_not_rare) trace.rich_count[u] += 1;
    });
  }

  // bad / good classification
  trace.good.assign(n, 1);
  {
    int li = 0;
    for (size_t i = 0; i < val.profile.entries.size(); ++i) {
      if (static_cast<int>(i) == val.anchor_index) continue;
      for (int u = 0; u < n; ++u) {
        bool bad = rare_restr[i][u] * (2 * t) >= trace.hom_m_downward[u];
        trace.links[li].bad[u] = bad;
        if (bad) trace.good[u] = 0;
      }
      ++li;
    }
  }

  // Claim 1
  int r = host.uniformity();
  trace.claim1_lhs = 0;
  for (int u = 0; u < n; ++u) {
    if (!trace.good[u]) continue;
    trace.claim1_lhs += make_rat(
        factorial(static_cast<unsigned long>(r - 1)) * host.degree(u),
        int_pow(Int(n), static_cast<unsigned long>(r - 1)));
  }
  trace.claim1_rhs = trace.t_edge * n / 2;
  trace.claim1_holds = trace.claim1_lhs >= trace.claim1_rhs;

  // Claim 2
  trace.claim2_holds = true;
  for (int u = 0; u < n; ++u) {
    if (!trace.good[u]) continue;
    if (!(trace.rich_count[u] * 2 >= trace.hom_m_downward[u])) trace.claim2_holds = false;
  }

  // final bound with c = (1/4) (2t)^{-t e(M)}
  trace.exponent_sum = 0;
  for (int d : val.d_values) trace.exponent_sum += d;
  trace.constant_c =
      make_rat(1, 4 * int_pow(Int(2 * t), static_cast<unsigned long>(t) *
                                              static_cast<unsigned long>(em)));
  trace.hom_f = count_homomorphisms(f.base(), host, opts);
  Rat t_f = make_rat(trace.hom_f, int_pow(Int(n), static_cast<unsigned long>(
                                                      f.base().vertex_count())));
  trace.final_holds =
      t_f >= trace.constant_c *
                 rat_pow(trace.t_edge, static_cast<unsigned long>(trace.exponent_sum));
  return trace;
}

}  // namespace sidex
