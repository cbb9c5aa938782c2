#include "gch/enumerate.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace gch {

namespace {

constexpr long kLeafGuard = 50'000'000;

struct Staged {
  int degree;
  Graph rep;
};

// Shared output side of the generators: window filters, canonicalization,
// dedup by canonical key.
struct Collector {
  const ComplexSpec& spec;
  const Window& win;
  std::map<std::string, Staged> staged;
  long leaves = 0;

  void tick() {
    if (++leaves > kLeafGuard)
      throw std::runtime_error("enumerate: window too large (leaf guard exceeded)");
  }

  void consider(const Graph& g) {
    if (win.j >= 0 && g.loop_order() != win.j) return;
    if (win.connected && g.components() != 1) return;
    if (!family_legal(g, spec)) return;
    int d = degree(g, spec);
    if (d < win.deg_lo || d > win.deg_hi) return;
    Canonical cn = canonicalize(g, spec.canon());
    if (cn.zero) return;
    staged.emplace(cn.key, Staged{d, cn.rep});
  }
};

long pair_count(int t) { return static_cast<long>(t) * (t - 1) / 2; }

// Solves (n-1)*E <= bound for E, conservatively.
std::optional<long> edges_from_degree(const ComplexSpec& spec, long num) {
  if (spec.n < 2) return std::nullopt;
  if (num < 0) return -1;  // empty range
  return num / (spec.n - 1);
}

// Generates all edge multisets of size e over the vertices 0..t-1 and feeds
// them to the collector via finish(edges). Externals are 0..ext-1; the
// min_req array gives per-vertex valence floors used for pruning only
// (final legality is still checked per graph).
template <typename Finish>
void multigraphs(int t, int e, bool allow_loops, bool multi,
                 const std::vector<int>& min_req, Finish&& finish) {
  if (t == 0) {
    if (e == 0) finish(std::vector<Edge>{});
    return;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < t; ++a) {
    if (allow_loops) pairs.emplace_back(a, a);
    for (int b = a + 1; b < t; ++b) pairs.emplace_back(a, b);
  }
  std::vector<int> val(t, 0);
  std::vector<Edge> edges;
  edges.reserve(e);

  auto deficit_ok = [&](int from, int budget) {
    long need = 0;
    for (int v = from; v < t; ++v) need += std::max(0, min_req[v] - val[v]);
    return need <= 2L * budget;
  };

  auto rec = [&](auto&& self, std::size_t idx, int budget, int frontier) -> void {
    if (budget == 0) {
      for (int v = frontier; v < t; ++v)
        if (val[v] < min_req[v]) return;
      finish(edges);
      return;
    }
    if (idx == pairs.size()) return;
    auto [a, b] = pairs[idx];
    // vertices left of the frontier can no longer gain valence
    for (int v = frontier; v < a; ++v)
      if (val[v] < min_req[v]) return;
    if (!deficit_ok(a, budget)) return;
    int cap = 1;
    if (a == b) cap = 1;  // a doubled loop always carries an odd edge swap
    else if (multi) cap = budget;
    // skip this pair entirely first, then each multiplicity
    self(self, idx + 1, budget, a);
    for (int mu = 1; mu <= cap; ++mu) {
      val[a] += a == b ? 2 : 1;
      if (a != b) val[b] += 1;
      edges.push_back(Edge{a, b});
      self(self, idx + 1, budget - mu, a);
    }
    for (int mu = 1; mu <= cap; ++mu) {
      val[a] -= a == b ? 2 : 1;
      if (a != b) val[b] -= 1;
      edges.pop_back();
    }
  };
  rec(rec, 0, e, 0);
}

void enumerate_plain(const ComplexSpec& spec, const Window& win, Collector& col) {
  const int N = spec.all_internal() ? 0 : win.N;
  const int minval = spec.min_internal_valence();
  const bool even = spec.parity() == Parity::even;

  int vcap;
  if (spec.family == Family::Gra) {
    vcap = 0;
  } else if (win.v_max >= 0) {
    vcap = win.v_max;
  } else if (minval >= 3 && win.j >= 0) {
    vcap = std::max(0, N + 2 * win.j - 2);
  } else {
    throw std::domain_error(
        "enumerate: window is not finite: give v_max, or a loop order in a "
        "family with trivalent internal vertices");
  }

  const bool loops =
      (spec.loops_allowed() || (spec.family == Family::GC2 && spec.allow_l1)) && even;

  for (int V = 0; V <= vcap; ++V) {
    const int T = N + V;
    std::optional<long> ecap;
    auto cap = [&](long c) {
      c = std::max(c, -1L);
      if (!ecap || c < *ecap) ecap = c;
    };
    if (win.j >= 0) cap(T + win.j - 1 >= 0 ? T + win.j - 1 : 0);
    if (win.deg_hi != std::numeric_limits<int>::max()) {
      long num = static_cast<long>(win.deg_hi) + static_cast<long>(spec.n) * V;
      if (spec.all_internal()) num -= spec.n;
      if (auto e = edges_from_degree(spec, num)) cap(*e);
    }
    if (even) cap(pair_count(T) + (loops ? T : 0));
    if (!ecap)
      throw std::domain_error(
          "enumerate: window is not finite: odd parity admits parallel edges, "
          "give a loop order or a degree bound");
    if (T > 14 || *ecap > 40)
      throw std::runtime_error("enumerate: window too large for desk scale");

    std::vector<int> min_req(T, 0);
    for (int v = N; v < T; ++v) min_req[v] = minval;

    for (long E = 0; E <= *ecap; ++E) {
      multigraphs(T, static_cast<int>(E), loops, !even, min_req,
                  [&](const std::vector<Edge>& edges) {
                    col.tick();
                    Graph g;
                    g.parity = spec.parity();
                    g.next = N;
                    g.nint = V;
                    g.edges = edges;
                    col.consider(g);
                  });
    }
  }
}

void enumerate_hairy(const ComplexSpec& spec, const Window& win, Collector& col) {
  const int minval = spec.min_internal_valence();
  const bool even = spec.parity() == Parity::even;

  int h_lo, h_hi;
  if (win.hairs >= 0) {
    h_lo = h_hi = win.hairs;
  } else if (win.hair_max >= 0) {
    h_lo = 1;
    h_hi = win.hair_max;
  } else {
    throw std::domain_error("enumerate: hairy window needs hairs or hair_max");
  }

  for (int H = h_lo; H <= h_hi; ++H) {
    int vcap;
    if (win.v_max >= 0) {
      vcap = win.v_max;
    } else if (minval >= 3 && win.j >= 0) {
      vcap = std::max(0, 2 * win.j + H - 2);
    } else {
      throw std::domain_error(
          "enumerate: hairy window is not finite: give v_max, or a loop order "
          "with trivalent internal vertices");
    }

    for (int V = 0; V <= vcap; ++V) {
      // some hairs may pair up into bare line components
      for (int L = 0; 2 * L <= H; ++L) {
        const int Hc = H - 2 * L;  // hairs attached to internal vertices
        if ((V == 0) != (Hc == 0)) continue;
        std::optional<long> ecap;
        auto cap = [&](long c) {
          c = std::max(c, -1L);
          if (!ecap || c < *ecap) ecap = c;
        };
        if (win.j >= 0) cap(V > 0 ? V + win.j - 1 : 0);
        if (win.deg_hi != std::numeric_limits<int>::max()) {
          long num = static_cast<long>(win.deg_hi) + static_cast<long>(spec.n) * V +
                     static_cast<long>(spec.m) * (H - 1) -
                     static_cast<long>(spec.n - 1) * H;
          if (auto e = edges_from_degree(spec, num)) cap(*e);
        }
        if (even) cap(pair_count(V));
        if (!ecap)
          throw std::domain_error(
              "enumerate: hairy window is not finite: odd parity admits "
              "parallel edges, give a loop order or a degree bound");
        if (H + V > 14 || *ecap > 40)
          throw std::runtime_error("enumerate: window too large for desk scale");

        std::vector<int> core_req(V, 0);  // hairs supply the missing valence
        for (long Ec = 0; Ec <= *ecap; ++Ec) {
          multigraphs(
              V, static_cast<int>(Ec), false, !even, core_req,
              [&](const std::vector<Edge>& core) {
                std::vector<int> cval(V, 0);
                for (const Edge& e : core) {
                  cval[e.a]++;
                  cval[e.b]++;
                }
                std::vector<int> lo(V, 0);
                long lo_sum = 0;
                for (int v = 0; v < V; ++v) {
                  lo[v] = std::max(0, minval - cval[v]);
                  lo_sum += lo[v];
                }
                if (lo_sum > Hc) return;
                // distribute the core hairs, at least lo[v] on vertex v
                std::vector<int> hv(V, 0);
                auto dist = [&](auto&& self, int v, int left) -> void {
                  if (v == V) {
                    if (left != 0) return;
                    col.tick();
                    Graph g;
                    g.parity = spec.parity();
                    g.next = H;
                    g.nint = V;
                    for (int l = 0; l < L; ++l) g.add_edge(2 * l, 2 * l + 1);
                    int ext = 2 * L;
                    for (int w = 0; w < V; ++w)
                      for (int h = 0; h < hv[w]; ++h) g.add_edge(ext++, H + w);
                    for (const Edge& e : core) g.add_edge(H + e.a, H + e.b);
                    col.consider(g);
                    return;
                  }
                  long rest_lo = 0;
                  for (int w = v + 1; w < V; ++w) rest_lo += lo[w];
                  for (int h = lo[v]; h <= left - rest_lo; ++h) {
                    hv[v] = h;
                    self(self, v + 1, left - h);
                  }
                  hv[v] = 0;
                };
                if (V == 0) {
                  col.tick();
                  Graph g;
                  g.parity = spec.parity();
                  g.next = H;
                  g.nint = 0;
                  for (int l = 0; l < L; ++l) g.add_edge(2 * l, 2 * l + 1);
                  col.consider(g);
                } else {
                  dist(dist, 0, Hc);
                }
              });
        }
      }
    }
  }
}

}  // namespace

BasisTable enumerate_basis(const ComplexSpec& spec, const Window& window) {
  BasisTable out;
  out.spec = spec;
  out.window = window;
  Collector col{spec, window, {}, 0};
  if (spec.hairy())
    enumerate_hairy(spec, window, col);
  else
    enumerate_plain(spec, window, col);

  for (auto& [key, s] : col.staged) {
    out.by_degree[s.degree].push_back(key);
    out.reps.emplace(key, std::move(s.rep));
  }
  for (auto& [d, keys] : out.by_degree) {
    std::sort(keys.begin(), keys.end());
    for (int i = 0; i < static_cast<int>(keys.size()); ++i)
      out.index.emplace(keys[i], std::make_pair(d, i));
  }
  return out;
}

}  // namespace gch
