#pragma once

// Brute-force reference implementations used only by tests. Everything here is
// deliberately naive so that it can serve as an independent oracle for the
// production code paths.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gch/graph.hpp"

namespace oracle {

using gch::CanonOptions;
using gch::Edge;
using gch::Graph;
using gch::Parity;

inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// An oriented automorphism is a vertex bijection sigma together with an edge
// matching tau and per-edge flip choices that reproduce the stored edge list.
// The graph class is zero iff some oriented automorphism has sign -1.
namespace detail {

struct AutSearch {
  const Graph& g;
  const CanonOptions& opt;
  std::vector<int> sigma;
  std::vector<int> tau;
  std::vector<char> used;
  int flips = 0;
  bool found_negative = false;

  AutSearch(const Graph& gg, const CanonOptions& oo)
      : g(gg), opt(oo), tau(gg.edges.size()), used(gg.edges.size(), 0) {}

  int sigma_sign() const {
    int s = 1;
    if (g.parity == Parity::odd) {
      std::vector<int> pi(g.nint);
      for (int i = 0; i < g.nint; ++i) pi[i] = sigma[g.next + i] - g.next;
      s *= perm_sign(pi);
    }
    if (opt.symmetric_externals && opt.hair_parity == Parity::odd && g.next > 0) {
      std::vector<int> rho(sigma.begin(), sigma.begin() + g.next);
      s *= perm_sign(rho);
    }
    return s;
  }

  void match(size_t i) {
    if (found_negative) return;
    if (i == g.edges.size()) {
      int s = sigma_sign();
      if (g.parity == Parity::even)
        s *= perm_sign(tau);
      else if (flips % 2)
        s = -s;
      if (s < 0) found_negative = true;
      return;
    }
    const int a = sigma[g.edges[i].a], b = sigma[g.edges[i].b];
    for (size_t j = 0; j < g.edges.size() && !found_negative; ++j) {
      if (used[j]) continue;
      if (g.edges[j].a == a && g.edges[j].b == b) {
        used[j] = 1;
        tau[i] = static_cast<int>(j);
        match(i + 1);
        used[j] = 0;
      }
      if (found_negative) return;
      if (g.edges[j].a == b && g.edges[j].b == a) {
        used[j] = 1;
        tau[i] = static_cast<int>(j);
        ++flips;
        match(i + 1);
        --flips;
        used[j] = 0;
      }
    }
  }
};

}  // namespace detail

inline bool is_zero(const Graph& g, const CanonOptions& opt) {
  detail::AutSearch search(g, opt);
  std::vector<int> ext(g.next), inn(g.nint);
  std::iota(ext.begin(), ext.end(), 0);
  std::iota(inn.begin(), inn.end(), g.next);
  std::vector<int> sigma(g.vcount());
  do {
    do {
      for (int v = 0; v < g.next; ++v) sigma[v] = opt.symmetric_externals ? ext[v] : v;
      for (int v = 0; v < g.nint; ++v) sigma[g.next + v] = inn[v];
      search.sigma = sigma;
      search.match(0);
      if (search.found_negative) return true;
    } while (std::next_permutation(inn.begin(), inn.end()));
    if (!opt.symmetric_externals) break;
  } while (std::next_permutation(ext.begin(), ext.end()));
  return false;
}

inline Graph random_graph(std::mt19937_64& rng, Parity p, int max_v, int max_e,
                          int max_ext = 3) {
  Graph g;
  g.parity = p;
  g.next = static_cast<int>(rng() % (max_ext + 1));
  g.nint = 1 + static_cast<int>(rng() % std::max(1, max_v - g.next));
  const int V = g.vcount();
  const int E = static_cast<int>(rng() % (max_e + 1));
  for (int i = 0; i < E; ++i)
    g.add_edge(static_cast<int>(rng() % V), static_cast<int>(rng() % V));
  return g;
}

// Applies a random orientation change plus internal/external relabeling and
// reports the exact sign it contributes per the parity conventions.
struct Reoriented {
  Graph g;
  int sign = 1;
};

inline Reoriented random_reorientation(std::mt19937_64& rng, const Graph& g,
                                       const CanonOptions& opt) {
  Reoriented out;
  out.g = g;
  std::vector<int> map(g.vcount());
  std::iota(map.begin(), map.end(), 0);

  std::vector<int> pi(g.nint);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  for (int i = 0; i < g.nint; ++i) map[g.next + i] = g.next + pi[i];
  if (g.parity == Parity::odd) out.sign *= perm_sign(pi);

  if (opt.symmetric_externals && g.next > 0) {
    std::vector<int> rho(g.next);
    std::iota(rho.begin(), rho.end(), 0);
    std::shuffle(rho.begin(), rho.end(), rng);
    for (int v = 0; v < g.next; ++v) map[v] = rho[v];
    if (opt.hair_parity == Parity::odd) out.sign *= perm_sign(rho);
  }

  for (Edge& e : out.g.edges) {
    e.a = map[e.a];
    e.b = map[e.b];
    if (rng() % 2) {
      std::swap(e.a, e.b);
      if (g.parity == Parity::odd) out.sign = -out.sign;
    }
  }

  std::vector<int> tau(out.g.edges.size());
  std::iota(tau.begin(), tau.end(), 0);
  std::shuffle(tau.begin(), tau.end(), rng);
  std::vector<Edge> shuffled(out.g.edges.size());
  for (size_t i = 0; i < tau.size(); ++i) shuffled[tau[i]] = out.g.edges[i];
  out.g.edges = shuffled;
  if (g.parity == Parity::even) out.sign *= perm_sign(tau);

  return out;
}

}  // namespace oracle
