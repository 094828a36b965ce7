#include "sidex/hom.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "sidex/constructions.hpp"
#include "sidex/util.hpp"

namespace sidex {

namespace {

// Host-side acceleration for the inner loop.
struct HostIndex {
  const Hypergraph& h;
  int r, n;
  std::vector<Bitmask> adj;                       // r == 2
  std::map<std::pair<int, int>, Bitmask> pairs;   // r == 3, key a<b
  Bitmask singletons;                             // r == 1

  explicit HostIndex(const Hypergraph& host) : h(host), r(host.uniformity()), n(host.vertex_count()) {
    if (r == 1) {
      singletons = Bitmask(n);
      for (const auto& e : h.edges()) singletons.set(e[0]);
    } else if (r == 2) {
      adj.assign(n, Bitmask(n));
      for (const auto& e : h.edges()) {
        adj[e[0]].set(e[1]);
        adj[e[1]].set(e[0]);
      }
    } else if (r == 3) {
      for (const auto& e : h.edges()) {
        int pts[3] = {e[0], e[1], e[2]};
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            auto key = std::make_pair(pts[i], pts[j]);
            auto it = pairs.find(key);
            if (it == pairs.end()) it = pairs.emplace(key, Bitmask(n)).first;
            it->second.set(pts[3 - i - j]);
          }
      }
    }
  }

  const Bitmask* pair_completions(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = pairs.find({a, b});
    return it == pairs.end() ? nullptr : &it->second;
  }
};

struct ClosingEdge {
  std::vector<int> other_positions;  // positions of the already-placed vertices
};

struct Plan {
  std::vector<int> order;                     // component vertex at each position
  std::vector<std::vector<ClosingEdge>> closing;  // per position
};

Plan make_plan(const Hypergraph& f) {
  int n = f.vertex_count();
  Plan plan;
  std::vector<char> placed(n, 0);
  std::vector<int> pos(n, -1);
  for (int k = 0; k < n; ++k) {
    int best = -1, best_score = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int score = 0;
      for (const auto& e : f.edges()) {
        if (!std::binary_search(e.begin(), e.end(), v)) continue;
        bool rest = true;
        for (Vertex u : e) rest &= (u == v) || placed[u];
        if (rest) ++score;
      }
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    placed[best] = 1;
    pos[best] = k;
    plan.order.push_back(best);
  }
  plan.closing.assign(n, {});
  for (const auto& e : f.edges()) {
    int last = -1;
    for (Vertex v : e) last = std::max(last, pos[v]);
    ClosingEdge ce;
    for (Vertex v : e)
      if (pos[v] != last) ce.other_positions.push_back(pos[v]);
    plan.closing[last].push_back(std::move(ce));
  }
  return plan;
}

struct Counter {
  const HostIndex& host;
  const Plan& plan;
  long long* budget;
  std::vector<int> assign;

  Counter(const HostIndex& hi, const Plan& p, long long* b)
      : host(hi), plan(p), budget(b), assign(p.order.size(), -1) {}

  // Candidate mask for position k given the current assignment.
  // Returns false if the fallback (explicit membership) path must run.
  bool candidates(int k, Bitmask& out) const {
    if (host.r > 3) return false;
    out = Bitmask::all(host.n);
    for (const auto& ce : plan.closing[k]) {
      if (host.r == 1) {
        out &= host.singletons;
      } else if (host.r == 2) {
        out &= host.adj[assign[ce.other_positions[0]]];
      } else {
        int a = assign[ce.other_positions[0]];
        int b = assign[ce.other_positions[1]];
        const Bitmask* m = (a == b) ? nullptr : host.pair_completions(a, b);
        if (!m) {
          out = Bitmask(host.n);  // no simple completion
          return true;
        }
        out &= *m;
      }
      if (!out.any()) return true;
    }
    return true;
  }

  bool explicit_ok(int k, int u) const {
    Edge probe;
    for (const auto& ce : plan.closing[k]) {
      probe.clear();
      probe.push_back(u);
      for (int p : ce.other_positions) probe.push_back(assign[p]);
      std::sort(probe.begin(), probe.end());
      if (std::adjacent_find(probe.begin(), probe.end()) != probe.end()) return false;
      if (!host.h.has_edge(probe)) return false;
    }
    return true;
  }

  template <typename Count>
  void run(int k, int last, Count& total) {
    if (*budget <= 0) throw budget_error("homomorphism counting budget exceeded");
    Bitmask cands;
    bool fast = candidates(k, cands);
    if (fast) {
      *budget -= cands.count() ? cands.count() : 1;
      if (k == last) {
        total += static_cast<unsigned long>(cands.count());
        return;
      }
      cands.for_each([&](int u) {
        assign[k] = u;
        run(k + 1, last, total);
      });
    } else {
      *budget -= host.n;
      for (int u = 0; u < host.n; ++u) {
        if (!explicit_ok(k, u)) continue;
        if (k == last) {
          total += 1ul;
        } else {
          assign[k] = u;
          run(k + 1, last, total);
        }
      }
    }
  }
};

Int count_connected(const Hypergraph& comp, const HostIndex& host, const HomOptions& opts,
                    long long* budget) {
  int n = host.n;
  if (comp.vertex_count() == 0) return 1;
  if (n == 0) return 0;
  Plan plan = make_plan(comp);
  int last = comp.vertex_count() - 1;

  // wide counts only when n^{v} could overflow 64 bits
  bool narrow = comp.vertex_count() * std::log2(static_cast<double>(n) + 1.0) < 62.0;

  auto run_range = [&](int from, int to, long long* b) -> Int {
    Counter c(host, plan, b);
    Bitmask first;
    c.candidates(0, first);
    if (narrow) {
      unsigned long long total = 0;
      if (last == 0) {
        int cnt = 0;
        first.for_each([&](int u) {
          if (u >= from && u < to) ++cnt;
        });
        return cnt;
      }
      first.for_each([&](int u) {
        if (u < from || u >= to) return;
        c.assign[0] = u;
        c.run(1, last, total);
      });
      return Int(static_cast<unsigned long>(total));
    }
    Int total = 0;
    if (last == 0) {
      first.for_each([&](int u) {
        if (u >= from && u < to) total += 1;
      });
      return total;
    }
    first.for_each([&](int u) {
      if (u < from || u >= to) return;
      c.assign[0] = u;
      c.run(1, last, total);
    });
    return total;
  };

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || n < 2 * jobs) return run_range(0, n, budget);

  // split the first-vertex assignment; exact integer addition keeps the
  // result independent of scheduling
  std::vector<Int> partial(jobs, 0);
  std::vector<long long> budgets(jobs, *budget / jobs + 1);
  std::vector<std::thread> threads;
  std::atomic<bool> failed{false};
  for (int j = 0; j < jobs; ++j) {
    int from = static_cast<int>(static_cast<long long>(n) * j / jobs);
    int to = static_cast<int>(static_cast<long long>(n) * (j + 1) / jobs);
    threads.emplace_back([&, j, from, to]() {
      try {
        partial[j] = run_range(from, to, &budgets[j]);
      } catch (const budget_error&) {
        failed = true;
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failed) throw budget_error("homomorphism counting budget exceeded");
  Int total = 0;
  for (auto& p : partial) total += p;
  return total;
}

bool host_is_complete(const Hypergraph& h) {
  if (h.vertex_count() < h.uniformity()) return h.edge_count() == 0;
  return Int(h.edge_count()) ==
         binomial(static_cast<unsigned long>(h.vertex_count()),
                  static_cast<unsigned long>(h.uniformity()));
}

}  // namespace

Int count_homomorphisms(const Hypergraph& pattern, const Hypergraph& host,
                        const HomOptions& opts) {
  if (pattern.uniformity() != host.uniformity())
    throw std::invalid_argument("pattern/host uniformity mismatch");
  if (pattern.vertex_count() == 0) return 1;
  if (host.vertex_count() == 0) return 0;
  if (host_is_complete(host) && host.edge_count() > 0)
    return count_hom_complete(pattern, host.vertex_count());

  HostIndex index(host);
  long long budget = opts.budget;
  Int total = 1;
  for (const auto& comp : components(pattern))
    total *= count_connected(comp.graph, index, opts, &budget);
  return total;
}

namespace {

void partitions_rec(const Hypergraph& f, std::vector<int>& block_of, int v,
                    int blocks, const Int& n, Int& total,
                    const std::vector<std::vector<Vertex>>& nbrs) {
  if (v == f.vertex_count()) {
    total += falling(n, static_cast<unsigned long>(blocks));
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    bool ok = true;
    if (b < blocks) {
      for (Vertex u : nbrs[v])
        if (u < v && block_of[u] == b) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;
    block_of[v] = b;
    partitions_rec(f, block_of, v + 1, std::max(blocks, b + 1), n, total, nbrs);
  }
  block_of[v] = -1;
}

}  // namespace

Int count_hom_complete(const Hypergraph& pattern, const Int& n) {
  if (pattern.vertex_count() == 0) return 1;
  if (n == 0) return 0;
  // co-edge neighborhoods: u,v may not share a block iff they share an edge
  std::vector<std::vector<Vertex>> nbrs(pattern.vertex_count());
  for (const auto& e : pattern.edges())
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = 0; j < e.size(); ++j)
        if (i != j) nbrs[e[i]].push_back(e[j]);
  for (auto& v : nbrs) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  Int total = 0;
  std::vector<int> block_of(pattern.vertex_count(), -1);
  partitions_rec(pattern, block_of, 0, 0, n, total, nbrs);
  return total;
}

Density density(const Hypergraph& pattern, const Hypergraph& host, const HomOptions& opts) {
  if (host.vertex_count() < 1) throw std::invalid_argument("empty host vertex set");
  Density d;
  d.hom = count_homomorphisms(pattern, host, opts);
  d.pattern_vertices = pattern.vertex_count();
  d.host_vertices = host.vertex_count();
  d.value = make_rat(d.hom, int_pow(Int(host.vertex_count()),
                                    static_cast<unsigned long>(pattern.vertex_count())));
  return d;
}

Rat edge_density(const Hypergraph& host) {
  int n = host.vertex_count();
  if (n < 1) throw std::invalid_argument("empty host vertex set");
  int r = host.uniformity();
  return make_rat(factorial(static_cast<unsigned long>(r)) * host.edge_count(),
                  int_pow(Int(n), static_cast<unsigned long>(r)));
}

Homomorphism restrict_hom(const Homomorphism& phi, const Hypergraph& sub,
                          const Hypergraph& pattern, std::span<const Vertex> inclusion) {
  if (static_cast<int>(phi.map.size()) != pattern.vertex_count())
    throw std::invalid_argument("homomorphism does not match pattern");
  // sub-hypergraph must be declared: inclusion maps E(sub) into E(pattern)
  if (!is_subhypergraph(sub, pattern, inclusion))
    throw std::invalid_argument("not a declared sub-hypergraph");
  Homomorphism out;
  out.pattern_vertices = sub.vertex_count();
  out.host_vertices = phi.host_vertices;
  out.map.reserve(sub.vertex_count());
  for (Vertex v = 0; v < sub.vertex_count(); ++v) out.map.push_back(phi.map[inclusion[v]]);
  return out;
}

HomClass classify(const Homomorphism& phi) {
  std::vector<Vertex> sorted = phi.map;
  std::sort(sorted.begin(), sorted.end());
  bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return injective ? HomClass::proper : HomClass::degenerate;
}

FactorCount factor_count(const Hypergraph& m, const Hypergraph& host,
                         std::span<const Vertex> part_vertices, const HomOptions& opts) {
  std::vector<char> in(m.vertex_count(), 0);
  for (Vertex v : part_vertices) {
    if (v < 0 || v >= m.vertex_count()) throw std::invalid_argument("vertex out of range");
    in[v] = 1;
  }
  // component-closed check
  for (const auto& comp : components(m)) {
    int hit = 0;
    for (Vertex v : comp.names) hit += in[v];
    if (hit != 0 && hit != static_cast<int>(comp.names.size()))
      throw std::invalid_argument("M' is not a union of connected components");
  }
  std::vector<Vertex> part_list(part_vertices.begin(), part_vertices.end());
  FactorCount fc;
  fc.whole = count_homomorphisms(m, host, opts);
  Hypergraph rest = remove_vertices(m, part_list).graph;
  std::vector<Vertex> complement;
  for (Vertex v = 0; v < m.vertex_count(); ++v)
    if (!in[v]) complement.push_back(v);
  Hypergraph part = remove_vertices(m, complement).graph;
  fc.part = count_homomorphisms(part, host, opts);
  fc.rest = count_homomorphisms(rest, host, opts);
  if (fc.whole != fc.part * fc.rest)
    throw std::logic_error("component factorization identity violated (engine bug)");
  return fc;
}

std::pair<Density, Rat> tensor_density_identity(const Hypergraph& pattern,
                                                const Hypergraph& host, int k,
                                                const HomOptions& opts, long long vertex_cap) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Hypergraph power = tensor_power(host, k, vertex_cap);
  Density lhs = density(pattern, power, opts);
  Rat rhs = rat_pow(density(pattern, host, opts).value, static_cast<unsigned long>(k));
  return {lhs, rhs};
}

}  // namespace sidex
