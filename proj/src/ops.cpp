#include "gch/ops.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gch {
namespace {

// (edge index, side) pairs with the given endpoint, in edge-list order.
// A loop contributes both of its sides.
std::vector<std::pair<int, int>> half_edges_at(const Graph& g, int v) {
  std::vector<std::pair<int, int>> hes;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (g.edges[i].a == v) hes.emplace_back(i, 0);
    if (g.edges[i].b == v) hes.emplace_back(i, 1);
  }
  return hes;
}

Graph split(const Graph& g, int v, const std::vector<std::pair<int, int>>& hes,
            unsigned long moving) {
  Graph h = g;
  const int w = g.vcount();
  h.nint = g.nint + 1;
  for (std::size_t i = 0; i < hes.size(); ++i) {
    if (!(moving >> i & 1)) continue;
    auto [ei, side] = hes[i];
    (side == 0 ? h.edges[ei].a : h.edges[ei].b) = w;
  }
  h.add_edge(v, w);
  return h;
}

}  // namespace

Chain differential(const Graph& g, const ComplexSpec& spec, bool enforce) {
  if (enforce) {
    std::string why;
    if (!family_legal(g, spec, &why)) throw std::domain_error("differential: " + why);
  }
  Chain out(spec);
  if (spec.family == Family::Gra) return out;  // any split leaves the family
  for (int v = 0; v < g.vcount(); ++v) {
    auto hes = half_edges_at(g, v);
    const std::size_t d = hes.size();
    if (d > 24) throw std::runtime_error("differential: vertex valence too large");
    if (g.is_internal(v)) {
      if (d == 0) continue;
      for (unsigned long rest = 0; rest < (1UL << (d - 1)); ++rest) {
        Graph h = split(g, v, hes, 1UL | rest << 1);
        if (family_legal(h, spec)) out.add(h, 1);
      }
    } else {
      for (unsigned long moving = 0; moving < (1UL << d); ++moving) {
        Graph h = split(g, v, hes, moving);
        if (family_legal(h, spec)) out.add(h, 1);
      }
    }
  }
  return out;
}

Chain differential(const Chain& x, bool enforce) {
  Chain out(x.spec());
  for (const auto& [key, t] : x.terms()) out.add(differential(t.rep, x.spec(), enforce).scaled(t.c));
  return out;
}

Chain compose(const Graph& x, int slot, const Graph& y, const ComplexSpec& spec) {
  if (spec.all_internal() || spec.hairy())
    throw std::domain_error("compose: family has no operadic slots");
  if (slot < 1 || slot > x.next) throw std::domain_error("compose: slot out of range");
  const int s = slot - 1;
  Chain out(spec);

  Graph base;
  base.parity = x.parity;
  base.next = x.next + y.next - 1;
  base.nint = x.nint + y.nint;
  auto map_x = [&](int v) {
    if (v < x.next) return v < s ? v : v + y.next - 1;  // callers exclude v == s
    return base.next + (v - x.next);
  };
  auto map_y = [&](int v) {
    if (v < y.next) return s + v;
    return base.next + x.nint + (v - y.next);
  };

  std::vector<std::pair<int, int>> loose;  // x-edge ends sitting on the slot
  for (int i = 0; i < static_cast<int>(x.edges.size()); ++i) {
    Edge e = x.edges[i];
    if (e.a == s) loose.emplace_back(i, 0);
    if (e.b == s) loose.emplace_back(i, 1);
    base.add_edge(e.a == s ? -1 : map_x(e.a), e.b == s ? -1 : map_x(e.b));
  }
  for (const Edge& e : y.edges) base.add_edge(map_y(e.a), map_y(e.b));

  const int targets = y.vcount();
  if (targets == 0) {
    if (loose.empty()) out.add(base, 1);
    return out;  // nothing to attach dangling ends to
  }
  std::vector<int> pick(loose.size(), 0);
  for (;;) {
    Graph h = base;
    for (std::size_t i = 0; i < loose.size(); ++i) {
      auto [ei, side] = loose[i];
      (side == 0 ? h.edges[ei].a : h.edges[ei].b) = map_y(pick[i]);
    }
    out.add(h, 1);
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == targets) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

Chain compose(const Chain& x, int slot, const Chain& y) {
  Chain out(x.spec());
  for (const auto& [kx, tx] : x.terms())
    for (const auto& [ky, ty] : y.terms())
      out.add(compose(tx.rep, slot, ty.rep, x.spec()).scaled(tx.c * ty.c));
  return out;
}

void insert_internal(const Graph& host, int v, const Graph& guest, const Rat& base_c,
                     Chain& out) {
  Graph base;
  base.parity = host.parity;
  base.next = host.next;
  base.nint = host.nint - 1 + guest.nint;
  auto map_host = [&](int u) { return u < v ? u : u - 1; };  // u == v never mapped
  const int guest0 = host.vcount() - 1;  // guest ids come after the survivors

  std::vector<std::pair<int, int>> loose;
  for (int i = 0; i < static_cast<int>(host.edges.size()); ++i) {
    Edge e = host.edges[i];
    if (e.a == v) loose.emplace_back(i, 0);
    if (e.b == v) loose.emplace_back(i, 1);
    base.add_edge(e.a == v ? -1 : map_host(e.a), e.b == v ? -1 : map_host(e.b));
  }
  for (const Edge& e : guest.edges) base.add_edge(guest0 + e.a, guest0 + e.b);

  const int targets = guest.vcount();
  if (targets == 0) {
    if (loose.empty()) out.add(base, base_c);
    return;
  }
  std::vector<int> pick(loose.size(), 0);
  for (;;) {
    Graph h = base;
    for (std::size_t i = 0; i < loose.size(); ++i) {
      auto [ei, side] = loose[i];
      (side == 0 ? h.edges[ei].a : h.edges[ei].b) = guest0 + pick[i];
    }
    out.add(h, base_c);
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == targets) pick[i++] = 0;
    if (i == pick.size()) break;
  }
}

Chain unital_insert(const Graph& g, int slot, const ComplexSpec& spec) {
  if (slot < 1 || slot > g.next) throw std::domain_error("unital_insert: slot out of range");
  Chain out(spec);
  const int s = slot - 1;
  for (const Edge& e : g.edges)
    if (e.a == s || e.b == s) return out;  // positive valence maps to zero
  Graph h;
  h.parity = g.parity;
  h.next = g.next - 1;
  h.nint = g.nint;
  for (const Edge& e : g.edges) h.add_edge(e.a - (e.a > s), e.b - (e.b > s));
  out.add(h, 1);
  return out;
}

long scaling_eigenvalue(const Graph& g) {
  return static_cast<long>(g.nint) - static_cast<long>(g.edges.size());
}

}  // namespace gch
