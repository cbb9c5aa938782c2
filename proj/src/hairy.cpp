#include "gch/hairy.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gch/enumerate.hpp"
#include "gch/linalg.hpp"
#include "gch/ops.hpp"

namespace gch {

namespace {

Rat binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

void require_hairy_pair(const Chain& x, const Chain& y, const char* who) {
  if (!x.spec().hairy() || !y.spec().hairy())
    throw std::domain_error(std::string(who) + ": operation unsupported outside hairy families");
  if (!(x.spec() == y.spec()))
    throw std::domain_error(std::string(who) + ": mismatched complexes");
}

// gamma with vertex u relabeled as the single external slot; the other
// vertices keep their relative order.
Graph externalize(const Graph& g, int u) {
  Graph h;
  h.parity = g.parity;
  h.next = 1;
  h.nint = g.nint - 1;
  auto map = [&](int v) { return v == u ? 0 : 1 + (v < u ? v : v - 1); };
  for (const Edge& e : g.edges) h.add_edge(map(e.a), map(e.b));
  return h;
}

}  // namespace

Graph corona(int hairs, Parity parity) {
  Graph g;
  g.parity = parity;
  g.next = hairs;
  g.nint = 1;
  for (int h = 0; h < hairs; ++h) g.add_edge(hairs, h);
  return g;
}

Graph hedgehog(int cycle, int hairs, Parity parity) {
  if (cycle < 1 || hairs < 0 || hairs > cycle) throw std::domain_error("hedgehog: bad shape");
  Graph g;
  g.parity = parity;
  g.next = hairs;
  g.nint = cycle;
  for (int i = 0; i < cycle; ++i) g.add_edge(hairs + i, hairs + (i + 1) % cycle);
  for (int h = 0; h < hairs; ++h) g.add_edge(hairs + h, h);
  return g;
}

Chain MaurerCartan::total() const {
  Chain t(spec);
  for (const auto& [h, comp] : by_hairs) t.add(comp);
  return t;
}

void MaurerCartan::validate() const {
  if (!spec.hairy()) throw IntegrityError("maurer-cartan element outside a hairy family");
  for (const auto& [h, comp] : by_hairs) {
    if (h < 1 || h > hair_max)
      throw IntegrityError("maurer-cartan component filed outside 1..hair_max");
    for (const auto& [key, t] : comp.terms()) {
      if (t.rep.next != h)
        throw IntegrityError("maurer-cartan component " + std::to_string(h) +
                             " holds a term with " + std::to_string(t.rep.next) + " hairs");
      std::string why;
      if (!family_legal(t.rep, spec, &why))
        throw IntegrityError("maurer-cartan term outside its family: " + why);
      if (degree(t.rep, spec) != -1)
        throw IntegrityError("maurer-cartan term of degree other than -1: " + key);
    }
  }
}

MaurerCartan corona_series(const ComplexSpec& spec, const Rat& lambda, int hair_max) {
  if (!spec.hairy()) throw std::domain_error("corona series: hairy spec required");
  MaurerCartan mc{spec, hair_max, {}};
  Rat coeff(1);
  for (int k = 1; 2 * k + 1 <= hair_max; ++k) {
    coeff *= lambda;
    Chain c(spec);
    c.add(corona(2 * k + 1, spec.parity()), coeff);
    mc.by_hairs[2 * k + 1] = c;
  }
  return mc;
}

MaurerCartan alpha(const ComplexSpec& spec, int hair_max) {
  return corona_series(spec, rat(1, 4), hair_max);
}

Chain tripod_series(const ComplexSpec& spec, int hair_max) {
  if (!spec.hairy()) throw std::domain_error("tripod series: hairy spec required");
  Chain out(spec);
  Rat coeff(1);
  for (int k = 1; 2 * k + 1 <= hair_max; ++k) {
    coeff /= 4;
    out.add(corona(2 * k + 1, spec.parity()), Rat(2 * k) * coeff);
  }
  return out;
}

Chain circ(const Chain& x, const Chain& y) {
  require_hairy_pair(x, y, "circ");
  const ComplexSpec& spec = x.spec();
  const bool odd_m = spec.m % 2 != 0;
  const bool odd_n = spec.parity() == Parity::odd;
  Chain out(spec);
  for (const auto& [kx, tx] : x.terms()) {
    const Graph& a = tx.rep;
    const int ha = a.next;
    if (ha < 1) throw std::domain_error("circ: left factor has no hair to attach");
    // every edge end sitting on a hair; products of brackets may carry hairs
    // of higher valence, so each slot keeps a list of its ends
    std::vector<std::vector<std::pair<int, bool>>> ends(ha);
    for (int i = 0; i < static_cast<int>(a.edges.size()); ++i) {
      if (a.edges[i].a < ha) ends[a.edges[i].a].push_back({i, true});
      if (a.edges[i].b < ha) ends[a.edges[i].b].push_back({i, false});
    }
    for (const auto& [ky, ty] : y.terms()) {
      const Graph& b = ty.rep;
      const int hb = b.next;
      const int next = ha - 1 + hb;
      Rat c = tx.c * ty.c * binom(next, hb) / ha;
      if (odd_m && (ha - 1) % 2 != 0) c = -c;
      // for odd n the composite's vertex order lists y's internals first;
      // building x's block first costs the block transposition sign
      if (odd_n && a.nint % 2 != 0 && b.nint % 2 != 0) c = -c;
      for (int h = 0; h < ha; ++h) {
        // moving hair h to the attachment slot is a cycle past the later hairs
        Rat ch = c;
        if (odd_m && (ha - 1 - h) % 2 != 0) ch = -ch;
        // a's hairs except h keep their relative order, then b's hairs
        auto map_a = [&](int v) {
          if (v < ha) return v < h ? v : v - 1;  // v == h only on cut edges
          return next + (v - ha);
        };
        auto map_b = [&](int v) { return v < hb ? ha - 1 + v : next + a.nint + (v - hb); };
        Graph base;
        base.parity = a.parity;
        base.next = next;
        base.nint = a.nint + b.nint;
        for (const Edge& e : a.edges) {
          base.add_edge(e.a == h ? -1 : map_a(e.a), e.b == h ? -1 : map_a(e.b));
        }
        for (const Edge& e : b.edges) base.add_edge(map_b(e.a), map_b(e.b));
        // all ends that sat on the cut hair run over b's vertices independently
        const auto& cut = ends[h];
        std::vector<int> pick(cut.size(), 0);
        while (true) {
          Graph g = base;
          for (size_t t = 0; t < cut.size(); ++t) {
            auto [ei, side_a] = cut[t];
            (side_a ? g.edges[ei].a : g.edges[ei].b) = map_b(pick[t]);
          }
          out.add(g, ch);
          size_t t = 0;
          while (t < cut.size() && ++pick[t] == b.vcount()) pick[t++] = 0;
          if (t == cut.size()) break;
        }
      }
    }
  }
  return out;
}

Chain bracket(const Chain& x, const Chain& y) {
  Chain out = circ(x, y);
  if (x.empty() || y.empty()) return out;
  auto dx = x.homogeneous_degree();
  auto dy = y.homogeneous_degree();
  if (!dx || !dy) throw std::domain_error("bracket: degree-homogeneous arguments required");
  const bool both_odd = (*dx % 2 != 0) && (*dy % 2 != 0);
  out.add(circ(y, x).scaled(both_odd ? Rat(1) : Rat(-1)));
  return out;
}

Chain cup(const Chain& x, const Chain& y) {
  require_hairy_pair(x, y, "cup");
  Chain out(x.spec());
  for (const auto& [kx, tx] : x.terms()) {
    const Graph& a = tx.rep;
    for (const auto& [ky, ty] : y.terms()) {
      const Graph& b = ty.rep;
      Graph g;
      g.parity = a.parity;
      g.next = a.next + b.next;
      g.nint = a.nint + b.nint;
      auto map_a = [&](int v) { return v < a.next ? v : g.next + (v - a.next); };
      auto map_b = [&](int v) { return v < b.next ? a.next + v : g.next + a.nint + (v - b.next); };
      for (const Edge& e : a.edges) g.add_edge(map_a(e.a), map_a(e.b));
      for (const Edge& e : b.edges) g.add_edge(map_b(e.a), map_b(e.b));
      out.add(g, tx.c * ty.c);
    }
  }
  return out;
}

Chain scaling(const Chain& x) {
  Chain out(x.spec());
  for (const auto& [key, t] : x.terms()) out.add(t.rep, t.c * scaling_eigenvalue(t.rep));
  return out;
}

int hodge(const Graph& g) { return g.next - 1; }

long total_excess(const Graph& g) {
  return -(static_cast<long>(g.next) - 1) + static_cast<long>(g.edges.size()) - g.nint;
}

std::map<int, Chain> mc_check(const MaurerCartan& mc) {
  mc.validate();
  Chain t = mc.total();
  Chain r = differential(t);
  r.add(bracket(t, t).scaled(rat(1, 2)));
  r = r.hair_truncate(mc.hair_max);
  std::map<int, Chain> out;
  for (const auto& [key, term] : r.terms()) {
    auto it = out.try_emplace(term.rep.next, Chain(mc.spec)).first;
    it->second.add(term.rep, term.c);
  }
  return out;
}

Twisted twist(const ComplexSpec& spec, const MaurerCartan& mc) {
  if (!(spec == mc.spec)) throw std::domain_error("twist: element lives in a different complex");
  auto residual = mc_check(mc);
  if (!residual.empty()) {
    const auto& [h, chain] = *residual.begin();
    throw IntegrityError("twist: the structure equation fails at " + std::to_string(h) +
                         " hairs: " + chain.str());
  }
  return Twisted{spec, mc};
}

Chain twisted_differential(const Twisted& tw, const Chain& x) {
  if (!(x.spec() == tw.spec)) throw std::domain_error("twisted differential: wrong complex");
  Chain out = differential(x);
  const Chain mt = tw.mc.total();
  for (const auto& [key, term] : x.terms()) {
    Chain single(tw.spec);
    single.add(term.rep, term.c);
    out.add(circ(mt, single));
    const int d = degree(term.rep, tw.spec);
    out.add(circ(single, mt).scaled(d % 2 != 0 ? Rat(1) : Rat(-1)));
  }
  return out.hair_truncate(tw.mc.hair_max);
}

namespace detail {

Chain gc_action_tuned(const Chain& gamma, const Chain& target, const ActionSigns& s) {
  const ComplexSpec& gs = gamma.spec();
  const ComplexSpec& ts = target.spec();
  if (!gs.all_internal()) throw std::domain_error("gc_action: acting chain must be all-internal");
  if (ts.all_internal())
    throw std::domain_error("gc_action: target family must carry external vertices");
  if (gs.n != ts.n) throw std::domain_error("gc_action: ambient dimension mismatch");

  // hairy targets are processed with labeled externals and poured back into
  // the hair-symmetric complex at the end; the operations never touch the
  // hair labels, so this commutes with the symmetrization
  ComplexSpec work = ts;
  if (work.hairy()) work.family = work.family == Family::HGC ? Family::Graphs : Family::Graphs2;

  Chain acc(work);
  for (const auto& [gk, gt] : gamma.terms()) {
    const Graph& g = gt.rep;
    for (const auto& [tk, tt] : target.terms()) {
      const Graph& big = tt.rep;
      const Rat c = gt.c * tt.c;
      if (s.insert != 0)
        for (int v = big.next; v < big.vcount(); ++v)
          insert_internal(big, v, g, Rat(s.insert) * c, acc);
      const int u_hi = s.sum_vertices ? g.vcount() : 1;
      for (int u = 0; u < u_hi; ++u) {
        Rat w = c;
        if (s.alternate && u % 2 != 0) w = -w;
        Graph g1 = externalize(g, u);
        if (s.left != 0) acc.add(compose(g1, 1, big, work).scaled(Rat(s.left) * w));
        if (s.right != 0)
          for (int j = 1; j <= big.next; ++j)
            acc.add(compose(big, j, g1, work).scaled(Rat(s.right) * w));
      }
    }
  }
  Chain out(ts);
  for (const auto& [key, term] : acc.terms()) out.add(term.rep, term.c);
  out.filter_family();
  return out;
}

ActionSigns shipped_action_signs() { return ActionSigns{}; }

}  // namespace detail

Chain gc_action(const Chain& gamma, const Chain& target) {
  return detail::gc_action_tuned(gamma, target, detail::shipped_action_signs());
}

Chain hgc_image_of_gc(const Chain& gamma, const ComplexSpec& hspec, int hair_max) {
  if (!gamma.spec().all_internal())
    throw std::domain_error("hgc image: all-internal chain required");
  if (!hspec.hairy()) throw std::domain_error("hgc image: hairy destination required");
  if (gamma.spec().n != hspec.n) throw std::domain_error("hgc image: ambient dimension mismatch");
  Chain out(hspec);
  for (const auto& [key, t] : gamma.terms()) {
    const Graph& g = t.rep;
    const int nv = g.nint;
    Rat coeff = t.c;
    for (int h = 1; h <= hair_max; h += 2, coeff /= 4) {
      long count = 1;
      for (int i = 0; i < h; ++i) {
        count *= nv;
        if (count > 20'000'000) throw std::runtime_error("hgc image: beyond desk scale");
      }
      std::vector<int> pick(h, 0);
      for (;;) {
        Graph gg;
        gg.parity = g.parity;
        gg.next = h;
        gg.nint = nv;
        for (const Edge& e : g.edges) gg.add_edge(h + e.a, h + e.b);
        for (int i = 0; i < h; ++i) gg.add_edge(h + pick[i], i);
        out.add(gg, coeff);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == nv) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
  }
  out.filter_family();
  return out;
}

Extension solve_cocycle_extension(const Chain& leading, const Twisted& tw, int hair_max) {
  if (leading.empty()) throw std::domain_error("cocycle extension: zero leading chain");
  if (!(leading.spec() == tw.spec))
    throw std::domain_error("cocycle extension: leading chain in the wrong complex");
  if (hair_max > tw.mc.hair_max)
    throw std::domain_error("cocycle extension: twist truncated below the requested range");
  auto deg = leading.homogeneous_degree();
  if (!deg) throw std::domain_error("cocycle extension: leading chain must be homogeneous");
  const Graph& first = leading.terms().begin()->second.rep;
  const int h0 = first.next;
  const int j0 = first.loop_order();
  for (const auto& [key, t] : leading.terms()) {
    if (t.rep.next != h0 || t.rep.loop_order() != j0 || t.rep.components() != 1)
      throw std::domain_error(
          "cocycle extension: leading terms must be connected with one hair count and loop "
          "order");
  }

  const ComplexSpec& spec = tw.spec;
  // inside one hair count the degree pins the internal vertex count, so each
  // correction window is finite
  std::vector<Graph> unknowns;
  for (int h = h0 + 2; h <= hair_max; h += 2) {
    const int k = (spec.n - 1) * (h + j0 - 1) - spec.m * (h - 1) - *deg;
    if (k < 0) continue;
    Window w;
    w.hairs = h;
    w.j = j0;
    w.v_max = k;
    w.deg_lo = w.deg_hi = *deg;
    w.connected = true;
    BasisTable basis = enumerate_basis(spec, w);
    for (const auto& [d, keys] : basis.by_degree)
      for (const auto& key : keys) unknowns.push_back(basis.reps.at(key));
  }

  auto tdiff = [&](const Chain& c) {
    return twisted_differential(tw, c).hair_truncate(hair_max);
  };
  const Chain want = tdiff(leading);
  std::vector<Chain> columns;
  columns.reserve(unknowns.size());
  std::map<std::string, int> rowix;
  auto intern = [&](const Chain& c) {
    for (const auto& [key, t] : c.terms()) rowix.try_emplace(key, static_cast<int>(rowix.size()));
  };
  intern(want);
  for (const Graph& g : unknowns) {
    Chain single(spec);
    single.add(g, 1);
    columns.push_back(tdiff(single));
    intern(columns.back());
  }

  SparseMatrix a(static_cast<int>(rowix.size()), static_cast<int>(unknowns.size()));
  std::vector<Rat> b(rowix.size(), Rat(0));
  for (const auto& [key, t] : want.terms()) b[rowix.at(key)] = -t.c;
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [key, t] : columns[j].terms())
      a.set(rowix.at(key), static_cast<int>(j), t.c);

  LinearSolve ls = solve_exact(a, b);
  Extension out;
  out.consistent = ls.consistent;
  if (ls.consistent) {
    Chain z = leading;
    for (std::size_t j = 0; j < unknowns.size(); ++j)
      if (ls.x[j] != 0) z.add(unknowns[j], ls.x[j]);
    if (!tdiff(z).empty())
      throw IntegrityError("cocycle extension: solution fails the closedness recheck");
    out.cocycle = z;
  }
  return out;
}

}  // namespace gch
