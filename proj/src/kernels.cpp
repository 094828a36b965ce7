#include "sidex/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sidex/constructions.hpp"
#include "sidex/util.hpp"

namespace sidex {

WeightedKernel::WeightedKernel(int uniformity, int resolution)
    : r_(uniformity), n_(resolution) {
  if (r_ < 1 || n_ < 1) throw std::invalid_argument("bad kernel dimensions");
}

WeightedKernel WeightedKernel::constant(int uniformity, int resolution, const Rat& value) {
  WeightedKernel k(uniformity, resolution);
  if (value == 0) return k;
  std::vector<int> key(uniformity, 0);
  while (true) {
    k.entries_[key] = value;
    int i = uniformity - 1;
    while (i >= 0 && key[i] == resolution - 1) --i;
    if (i < 0) break;
    ++key[i];
    for (int j = i + 1; j < uniformity; ++j) key[j] = key[i];
  }
  return k;
}

WeightedKernel WeightedKernel::from_hypergraph(const Hypergraph& h) {
  WeightedKernel k(h.uniformity(), h.vertex_count());
  for (const auto& e : h.edges()) k.entries_[e] = 1;
  return k;
}

void WeightedKernel::set(std::vector<int> key, const Rat& value) {
  if (static_cast<int>(key.size()) != r_) throw std::invalid_argument("key arity mismatch");
  std::sort(key.begin(), key.end());
  for (int c : key)
    if (c < 0 || c >= n_) throw std::invalid_argument("cell out of range");
  if (value == 0)
    entries_.erase(key);
  else
    entries_[key] = value;
}

const Rat& WeightedKernel::at(std::vector<int> key) const {
  static const Rat zero(0);
  std::sort(key.begin(), key.end());
  auto it = entries_.find(key);
  return it == entries_.end() ? zero : it->second;
}

Rat WeightedKernel::value(std::span<const int> cells) const {
  return at(std::vector<int>(cells.begin(), cells.end()));
}

WeightedKernel WeightedKernel::operator+(const WeightedKernel& o) const {
  if (r_ != o.r_ || n_ != o.n_) throw std::invalid_argument("kernel shape mismatch");
  WeightedKernel out(r_, n_);
  out.entries_ = entries_;
  for (const auto& [k, v] : o.entries_) {
    Rat s = out.at(k) + v;
    if (s == 0)
      out.entries_.erase(k);
    else
      out.entries_[k] = s;
  }
  return out;
}

WeightedKernel WeightedKernel::scaled(const Rat& lambda) const {
  WeightedKernel out(r_, n_);
  if (lambda == 0) return out;
  for (const auto& [k, v] : entries_) out.entries_[k] = v * lambda;
  return out;
}

WeightedKernel WeightedKernel::abs() const {
  WeightedKernel out(r_, n_);
  for (const auto& [k, v] : entries_) out.entries_[k] = ::abs(v);
  return out;
}

bool WeightedKernel::nonnegative() const {
  for (const auto& [k, v] : entries_)
    if (v < 0) return false;
  return true;
}

namespace {

template <typename EntryFn>
Rat kernel_sum(const Hypergraph& f, int n, EntryFn&& entry) {
  int v = f.vertex_count();
  Rat total = 0;
  std::vector<int> cells(std::max(v, 1), 0);
  std::vector<int> key;
  if (v == 0) return Rat(1);
  while (true) {
    Rat prod = 1;
    for (const auto& e : f.edges()) {
      key.clear();
      for (Vertex x : e) key.push_back(cells[x]);
      std::sort(key.begin(), key.end());
      prod *= entry(key);
      if (prod == 0) break;
    }
    total += prod;
    int i = v - 1;
    while (i >= 0 && cells[i] == n - 1) cells[i--] = 0;
    if (i < 0) break;
    ++cells[i];
    for (int j = i + 1; j < v; ++j) cells[j] = 0;
  }
  return total / Rat(int_pow(Int(n), static_cast<unsigned long>(v)));
}

}  // namespace

Rat kernel_density(const Hypergraph& f, const WeightedKernel& kernel, bool absolute_inside) {
  if (f.uniformity() != kernel.uniformity())
    throw std::invalid_argument("pattern/kernel uniformity mismatch");
  int n = kernel.resolution();
  return kernel_sum(f, n, [&](const std::vector<int>& key) {
    Rat v = kernel.at(key);
    return absolute_inside ? ::abs(v) : v;
  });
}

Rat kernel_density_integerized(const Hypergraph& f, const WeightedKernel& kernel,
                               bool absolute_inside) {
  if (f.uniformity() != kernel.uniformity())
    throw std::invalid_argument("pattern/kernel uniformity mismatch");
  // clear denominators, accumulate in integers, divide once
  Int lcm = 1;
  for (const auto& [k, v] : kernel.entries()) {
    Int den = v.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::map<std::vector<int>, Int> scaled;
  for (const auto& [k, v] : kernel.entries()) {
    Rat s = v * Rat(lcm);
    Int num = s.get_num();
    if (absolute_inside) num = ::abs(num);
    scaled[k] = num;
  }
  int n = kernel.resolution();
  int v = f.vertex_count();
  Int total = 0;
  std::vector<int> cells(std::max(v, 1), 0);
  std::vector<int> key;
  if (v > 0) {
    while (true) {
      Int prod = 1;
      for (const auto& e : f.edges()) {
        key.clear();
        for (Vertex x : e) key.push_back(cells[x]);
        std::sort(key.begin(), key.end());
        auto it = scaled.find(key);
        if (it == scaled.end()) {
          prod = 0;
          break;
        }
        prod *= it->second;
      }
      total += prod;
      int i = v - 1;
      while (i >= 0 && cells[i] == n - 1) cells[i--] = 0;
      if (i < 0) break;
      ++cells[i];
      for (int j = i + 1; j < v; ++j) cells[j] = 0;
    }
  } else {
    total = 1;
  }
  Int den = int_pow(lcm, static_cast<unsigned long>(f.edge_count())) *
            int_pow(Int(n), static_cast<unsigned long>(v));
  return make_rat(total, den);
}

namespace {

// floor((x)^{1/e} * 2^P) bracket for a nonnegative rational: returns L with
// L <= x^{1/e} 2^P < L + 1.
Int root_floor_scaled(const Rat& x, unsigned long e, unsigned long p_bits) {
  Int num = x.get_num();
  Int den = x.get_den();
  Int scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), p_bits * e);
  Int a = scaled / den;  // floor
  Int root;
  mpz_root(root.get_mpz_t(), a.get_mpz_t(), e);
  return root;
}

// does x equal rho^e for rational rho? returns rho if so
std::optional<Rat> rational_root(const Rat& x, unsigned long e) {
  if (x < 0) return std::nullopt;
  Int num = x.get_num(), den = x.get_den();
  Int rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), e)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), e)) return std::nullopt;
  return make_rat(rn, rd);
}

}  // namespace

int compare_root_sum(const Rat& a, const Rat& b, const Rat& c, unsigned long e) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("roots need nonnegative inputs");
  if (e == 0) throw std::invalid_argument("zero root order");
  if (c == 0) return (a > 0 || b > 0) ? 1 : 0;
  if (a == 0 && b == 0) return -1;
  if (a == 0) return b > c ? 1 : (b == c ? 0 : -1);
  if (b == 0) return a > c ? 1 : (a == c ? 0 : -1);
  if (e == 1) {
    Rat d = a + b - c;
    return d > 0 ? 1 : (d == 0 ? 0 : -1);
  }
  for (unsigned long p = 64; p <= 4096; p *= 2) {
    Int lx = root_floor_scaled(a, e, p);
    Int ly = root_floor_scaled(b, e, p);
    Int lz = root_floor_scaled(c, e, p);
    if (lx + ly >= lz + 1) return 1;   // x+y >= (lz+1)/2^p > z
    if (lx + ly + 2 <= lz) return -1;  // x+y < (lx+ly+2)/2^p <= z
    if (p >= 256) {
      // equality candidate: commensurable roots
      auto rho = rational_root(b / a, e);
      if (rho) {
        Rat one_plus = *rho + 1;
        if (rat_pow(one_plus, e) * a == c) return 0;
      } else {
        break;  // incommensurable, separation must eventually appear
      }
    }
  }
  // keep refining for the incommensurable case
  for (unsigned long p = 8192; p <= 1u << 20; p *= 2) {
    Int lx = root_floor_scaled(a, e, p);
    Int ly = root_floor_scaled(b, e, p);
    Int lz = root_floor_scaled(c, e, p);
    if (lx + ly >= lz + 1) return 1;
    if (lx + ly + 2 <= lz) return -1;
  }
  throw std::runtime_error("root-sum comparison undecided at maximum precision");
}

CsgResult csg_check(const Hypergraph& f, const EdgeColoring& coloring,
                    const std::vector<WeightedKernel>& kernels, bool require_nonneg) {
  int m = f.edge_count();
  if (static_cast<int>(coloring.size()) != m)
    throw std::invalid_argument("coloring must assign every edge");
  if (static_cast<int>(kernels.size()) != m)
    throw std::invalid_argument("need one kernel per color slot");
  for (int c : coloring)
    if (c < 0 || c >= m) throw std::invalid_argument("color out of range");
  for (const auto& k : kernels) {
    if (k.uniformity() != f.uniformity() || k.resolution() != kernels[0].resolution())
      throw std::invalid_argument("kernels must share shape");
    if (require_nonneg && !k.nonnegative())
      throw std::invalid_argument("nonnegative kernels required");
  }
  int n = kernels[0].resolution();

  CsgResult res;
  // joint moment with per-edge kernels
  {
    int v = f.vertex_count();
    Rat total = 0;
    std::vector<int> cells(std::max(v, 1), 0);
    std::vector<int> key;
    if (v == 0) {
      total = 1;
    } else {
      while (true) {
        Rat prod = 1;
        for (int ei = 0; ei < m; ++ei) {
          key.clear();
          for (Vertex x : f.edge(ei)) key.push_back(cells[x]);
          std::sort(key.begin(), key.end());
          prod *= kernels[coloring[ei]].at(key);
          if (prod == 0) break;
        }
        total += prod;
        int i = v - 1;
        while (i >= 0 && cells[i] == n - 1) cells[i--] = 0;
        if (i < 0) break;
        ++cells[i];
        for (int j = i + 1; j < v; ++j) cells[j] = 0;
      }
    }
    res.lhs = total / Rat(int_pow(Int(n), static_cast<unsigned long>(v)));
  }
  res.rhs_powered = 1;
  for (int ei = 0; ei < m; ++ei)
    res.rhs_powered *= kernel_density(f, kernels[coloring[ei]], true);
  // lhs <= (rhs_powered)^{1/e}: nonpositive lhs holds trivially, otherwise
  // cross-power by e(F)
  if (res.lhs <= 0)
    res.holds = true;
  else
    res.holds = rat_pow(res.lhs, static_cast<unsigned long>(m)) <= res.rhs_powered;
  return res;
}

DominationResult domination_check(const Hypergraph& f, const Hypergraph& sub,
                                  const Hypergraph& host, const HomOptions& opts) {
  if (f.edge_count() < 1 || sub.edge_count() < 1)
    throw std::invalid_argument("domination needs at least one edge on both sides");
  auto emb = find_embedding(sub, f);
  if (!emb) throw std::invalid_argument("F' does not embed into F");
  DominationResult res;
  res.embedding = *emb;
  Rat tf = density(f, host, opts).value;
  Rat ts = density(sub, host, opts).value;
  res.lhs = rat_pow(tf, static_cast<unsigned long>(sub.edge_count()));
  res.rhs = rat_pow(ts, static_cast<unsigned long>(f.edge_count()));
  res.holds = res.lhs >= res.rhs;
  return res;
}

namespace {

// brute-force hom count, the independent re-verification path
Int brute_count(const Hypergraph& f, const Hypergraph& h) {
  int n = h.vertex_count(), v = f.vertex_count();
  if (v == 0) return 1;
  if (n == 0) return 0;
  std::vector<int> map(v, 0);
  Int count = 0;
  Edge img;
  while (true) {
    bool ok = true;
    for (const auto& e : f.edges()) {
      img.clear();
      for (Vertex x : e) img.push_back(map[x]);
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end() || !h.has_edge(img)) {
        ok = false;
        break;
      }
    }
    if (ok) count += 1;
    int i = v - 1;
    while (i >= 0 && map[i] == n - 1) map[i--] = 0;
    if (i < 0) break;
    ++map[i];
    for (int j = i + 1; j < v; ++j) map[j] = 0;
  }
  return count;
}

}  // namespace

FalsifyOutcome dominating_falsify(const Hypergraph& f, const FalsifyPool& pool, uint64_t seed) {
  FalsifyOutcome out;
  out.seed = seed;
  int r = f.uniformity();

  // distinct sub-hypergraphs (spanned by nonempty edge subsets), up to iso
  std::vector<Hypergraph> subs;
  {
    std::set<std::string> seen;
    int m = f.edge_count();
    if (m > 20) throw std::invalid_argument("too many edges for subset enumeration");
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<Edge> es;
      std::set<Vertex> covered;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) {
          es.push_back(f.edge(i));
          for (Vertex v : f.edge(i)) covered.insert(v);
        }
      std::vector<Vertex> names(covered.begin(), covered.end());
      std::vector<int> to_local(f.vertex_count(), -1);
      for (size_t i = 0; i < names.size(); ++i) to_local[names[i]] = static_cast<int>(i);
      for (auto& e : es)
        for (auto& v : e) v = to_local[v];
      Hypergraph sub(r, static_cast<int>(names.size()), es);
      if (seen.insert(canonical_key(sub)).second) subs.push_back(std::move(sub));
    }
  }

  std::mt19937_64 rng(seed);
  auto check_host = [&](const Hypergraph& host) -> bool {
    for (const auto& sub : subs) {
      if (out.pairs_checked >= pool.pair_budget) return false;
      ++out.pairs_checked;
      DominationResult res = domination_check(f, sub, host);
      if (!res.holds) {
        // re-verify through the brute-force path before reporting
        Rat tf = make_rat(brute_count(f, host),
                          int_pow(Int(host.vertex_count()),
                                  static_cast<unsigned long>(f.vertex_count())));
        Rat ts = make_rat(brute_count(sub, host),
                          int_pow(Int(host.vertex_count()),
                                  static_cast<unsigned long>(sub.vertex_count())));
        Rat lhs = rat_pow(tf, static_cast<unsigned long>(sub.edge_count()));
        Rat rhs = rat_pow(ts, static_cast<unsigned long>(f.edge_count()));
        if (lhs >= rhs) throw std::logic_error("falsifier disagreement between engines");
        out.found = true;
        out.sub = sub;
        out.host = host;
        out.lhs = lhs;
        out.rhs = rhs;
        return true;
      }
    }
    return false;
  };

  bool budget_hit = false;
  for (int n = 1; n <= pool.max_exhaustive_n && !out.found; ++n) {
    Hypergraph all = complete_hypergraph(n, r);
    int m = all.edge_count();
    if (m > 22) throw std::invalid_argument("host pool too large");
    for (long long mask = 0; mask < (1ll << m); ++mask) {
      std::vector<Edge> es;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) es.push_back(all.edges()[i]);
      Hypergraph host(r, n, es);
      if (check_host(host)) break;
      if (out.pairs_checked >= pool.pair_budget) {
        budget_hit = true;
        break;
      }
    }
    if (budget_hit) break;
  }
  for (int t = 0; t < pool.random_hosts && !out.found && !budget_hit; ++t) {
    int n = 1 + static_cast<int>(rng_below(rng, pool.random_host_n));
    Hypergraph all = complete_hypergraph(n, r);
    std::vector<Edge> es;
    for (const auto& e : all.edges())
      if (rng() & 1) es.push_back(e);
    Hypergraph host(r, n, es);
    if (out.pairs_checked >= pool.pair_budget) {
      budget_hit = true;
      break;
    }
    check_host(host);
  }
  out.exhausted = !out.found && !budget_hit;
  return out;
}

// ---- randomized norming suite ----

namespace {

WeightedKernel random_kernel(std::mt19937_64& rng, int r, int n, int max_den, bool signed_entries) {
  WeightedKernel k(r, n);
  std::vector<int> key(r, 0);
  while (true) {
    int q = rng_int(rng, 1, max_den);
    int p = rng_int(rng, 0, q);
    if (signed_entries && (rng() & 1)) p = -p;
    if (p != 0) k.set(key, make_rat(p, q));
    int i = r - 1;
    while (i >= 0 && key[i] == n - 1) --i;
    if (i < 0) break;
    ++key[i];
    for (int j = i + 1; j < r; ++j) key[j] = key[i];
  }
  return k;
}

}  // namespace

NormingSuiteReport weakly_norming_suite(const Hypergraph& f, int trials, uint64_t seed,
                                        int max_resolution, int max_denominator,
                                        bool signed_variant) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (f.edge_count() < 1) throw std::invalid_argument("pattern needs an edge");
  NormingSuiteReport rep;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  unsigned long e = static_cast<unsigned long>(f.edge_count());

  for (int t = 0; t < trials; ++t) {
    rep.trials_run = t + 1;
    int n = 2 + t % std::max(1, max_resolution - 1);
    WeightedKernel kf = random_kernel(rng, f.uniformity(), n, max_denominator, signed_variant);
    WeightedKernel kg = random_kernel(rng, f.uniformity(), n, max_denominator, signed_variant);
    Rat mf, mg, ms;
    if (signed_variant) {
      mf = ::abs(kernel_density(f, kf, false));
      mg = ::abs(kernel_density(f, kg, false));
      ms = ::abs(kernel_density(f, kf + kg, false));
    } else {
      mf = kernel_density(f, kf, true);
      mg = kernel_density(f, kg, true);
      ms = kernel_density(f, kf + kg, true);
    }
    if (compare_root_sum(mf, mg, ms, e) < 0) {
      // triangle inequality fails; re-verify on the independent path
      Rat vf = signed_variant ? Rat(::abs(kernel_density_integerized(f, kf, false)))
                              : kernel_density_integerized(f, kf, true);
      Rat vg = signed_variant ? Rat(::abs(kernel_density_integerized(f, kg, false)))
                              : kernel_density_integerized(f, kg, true);
      Rat vs = signed_variant ? Rat(::abs(kernel_density_integerized(f, kf + kg, false)))
                              : kernel_density_integerized(f, kf + kg, true);
      if (vf != mf || vg != mg || vs != ms)
        throw std::logic_error("kernel evaluation paths disagree");
      if (compare_root_sum(vf, vg, vs, e) >= 0)
        throw std::logic_error("counterexample failed re-verification");
      rep.all_passed = false;
      rep.counterexample = NormingCounterexample{kf, kg, vf, vg, vs, t, false, {}};
      return rep;
    }
    if (!signed_variant) {
      // CSG spot-check with a random coloring
      EdgeColoring chi(f.edge_count());
      for (auto& c : chi) c = static_cast<int>(rng_below(rng, f.edge_count()));
      std::vector<WeightedKernel> family;
      family.reserve(f.edge_count());
      for (int i = 0; i < f.edge_count(); ++i)
        family.push_back(random_kernel(rng, f.uniformity(), n, max_denominator, false));
      CsgResult csg = csg_check(f, chi, family, true);
      if (!csg.holds) {
        rep.all_passed = false;
        rep.counterexample =
            NormingCounterexample{family[0], family[1 % family.size()], csg.lhs,
                                  csg.rhs_powered, Rat(0), t, true, chi};
        return rep;
      }
    }
  }
  return rep;
}

// ---- catalogs & recognizers ----

std::optional<std::vector<int>> complete_partite_sizes(const Hypergraph& f) {
  int n = f.vertex_count();
  int r = f.uniformity();
  if (n == 0 || f.edge_count() == 0) return std::nullopt;
  // classes: vertices that never co-occur in an edge
  std::vector<std::vector<char>> co(n, std::vector<char>(n, 0));
  for (const auto& e : f.edges())
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = 0; j < e.size(); ++j)
        if (i != j) co[e[i]][e[j]] = 1;
  std::vector<int> cls(n, -1);
  int k = 0;
  for (int v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    cls[v] = k;
    for (int u = v + 1; u < n; ++u)
      if (cls[u] < 0 && !co[v][u]) cls[u] = k;
    ++k;
  }
  if (k != r) return std::nullopt;
  // consistency: same class never co-occurs, and edge count must match
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (v != u && cls[v] == cls[u] && co[v][u]) return std::nullopt;
  std::vector<int> sizes(k, 0);
  for (int v = 0; v < n; ++v) ++sizes[cls[v]];
  Int expect = 1;
  for (int s : sizes) expect *= s;
  if (Int(f.edge_count()) != expect) return std::nullopt;
  // transversality of every edge
  std::vector<int> hit(k);
  for (const auto& e : f.edges()) {
    std::fill(hit.begin(), hit.end(), 0);
    for (Vertex v : e) hit[cls[v]]++;
    for (int i = 0; i < k; ++i)
      if (hit[i] > 1) return std::nullopt;
  }
  return sizes;
}

bool is_even_cycle(const Hypergraph& f) {
  if (f.uniformity() != 2) return false;
  int n = f.vertex_count();
  if (n < 4 || n % 2 != 0) return false;
  if (f.edge_count() != n) return false;
  auto d = f.degrees();
  for (int x : d)
    if (x != 2) return false;
  return is_connected(f);
}

bool is_tree(const Hypergraph& f) {
  if (f.uniformity() != 2) return false;
  if (f.vertex_count() == 0) return false;
  return f.edge_count() == f.vertex_count() - 1 && is_connected(f);
}

bool is_hypercube(const Hypergraph& f) {
  if (f.uniformity() != 2) return false;
  int n = f.vertex_count();
  if (n < 2 || (n & (n - 1)) != 0) return false;
  int d = __builtin_ctz(n);
  if (d > 4) return false;  // desk scale
  if (f.edge_count() != d * n / 2) return false;
  return is_isomorphic(f, catalog("q" + std::to_string(d)));
}

std::vector<CatalogEntry> catalog_dominating() {
  return {
      {"even-cycle", "C_{2l}, l >= 2", "norming (Hatami 2010)"},
      {"complete-partite", "K^{(r)}_{t_1..t_r}", "norming (Hatami 2010)"},
      {"octahedron", "K^{(r)}_{2,..,2}", "Gowers octahedral norm"},
      {"hypercube", "Q_n", "weakly norming (Hatami 2010)"},
      {"cycle-tensor", "C_{2k} (x) C_{2k}", "tensor product of weakly norming graphs (Hatami 2010)"},
      {"balanced-bipartite-tensor", "G (x) K_{m,m} for dominating G",
       "dominating closure (Conlon-Lee)"},
  };
}

std::optional<CatalogEntry> match_dominating(const Hypergraph& m) {
  if (m.edge_count() == 0) return std::nullopt;
  if (is_even_cycle(m))
    return CatalogEntry{"even-cycle", "C_" + std::to_string(m.vertex_count()),
                        "norming (Hatami 2010)"};
  if (auto sizes = complete_partite_sizes(m)) {
    std::string d = "K^{(" + std::to_string(m.uniformity()) + ")}_";
    for (size_t i = 0; i < sizes->size(); ++i) d += (i ? "," : "") + std::to_string((*sizes)[i]);
    return CatalogEntry{"complete-partite", d, "norming (Hatami 2010)"};
  }
  if (is_hypercube(m))
    return CatalogEntry{"hypercube", "Q_" + std::to_string(__builtin_ctz(m.vertex_count())),
                        "weakly norming (Hatami 2010)"};
  // C_{2k} (x) C_{2k}: 4-regular on 4k^2 vertices
  if (m.uniformity() == 2) {
    int n = m.vertex_count();
    for (int k = 2; 4 * k * k <= n && k <= 3; ++k) {
      if (4 * k * k != n) continue;
      auto stats = degree_stats(m);
      if (stats.max_degree != 4 || stats.min_degree != 4) continue;
      Hypergraph c = catalog("c" + std::to_string(2 * k));
      if (is_isomorphic(m, tensor_product(c, c)))
        return CatalogEntry{"cycle-tensor", "C_" + std::to_string(2 * k) + " (x) C_" +
                                                std::to_string(2 * k),
                            "tensor product of weakly norming graphs (Hatami 2010)"};
    }
  }
  return std::nullopt;
}

std::optional<CatalogEntry> match_sidorenko(const Hypergraph& m) {
  if (m.uniformity() == 1) {
    // hom factorizes over singleton edges, so t_F = t^{e(F)} exactly
    return CatalogEntry{"one-graph", "any 1-graph", "vertex sets are Sidorenko"};
  }
  if (m.edge_count() == 0) return std::nullopt;
  if (is_tree(m))
    return CatalogEntry{"tree", "tree on " + std::to_string(m.vertex_count()) + " vertices",
                        "Blakley-Roy / Alon-Ruzsa"};
  if (auto dom = match_dominating(m)) {
    dom->provenance += "; dominating implies Sidorenko";
    return dom;
  }
  return std::nullopt;
}

}  // namespace sidex
