#include <doctest.h>

#include <set>
#include <stdexcept>

#include "gch/chain.hpp"
#include "gch/enumerate.hpp"

using namespace gch;

namespace {

// Dumb reference enumerator: every edge multiset over every vertex split,
// filtered exactly like the real one. No pruning, no decomposition.
std::set<std::string> brute(const ComplexSpec& spec, const Window& win, int vcap, int ecap,
                            int ext_override = -1) {
  std::set<std::string> out;
  const bool even = spec.parity() == Parity::even;
  for (int V = 0; V <= vcap; ++V) {
    int ext = ext_override >= 0 ? ext_override
              : spec.hairy()    ? (win.hairs >= 0 ? win.hairs : win.hair_max)
              : spec.all_internal() ? 0
                                    : win.N;
    // in hairy windows the hair count ranges
    std::vector<int> exts;
    if (spec.hairy() && win.hairs < 0 && ext_override < 0) {
      for (int h = 1; h <= win.hair_max; ++h) exts.push_back(h);
    } else {
      exts.push_back(ext);
    }
    for (int X : exts) {
      int T = X + V;
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < T; ++a) {
        if (spec.loops_allowed() || (spec.family == Family::GC2 && spec.allow_l1))
          pairs.emplace_back(a, a);
        for (int b = a + 1; b < T; ++b) pairs.emplace_back(a, b);
      }
      std::vector<Edge> edges;
      auto rec = [&](auto&& self, size_t idx, int left) -> void {
        if (left == 0 || idx == pairs.size()) {
          if (left != 0) return;
          Graph g;
          g.parity = spec.parity();
          g.next = X;
          g.nint = V;
          g.edges = edges;
          if (win.j >= 0 && g.loop_order() != win.j) return;
          if (win.connected && g.components() != 1) return;
          if (!family_legal(g, spec)) return;
          int d = degree(g, spec);
          if (d < win.deg_lo || d > win.deg_hi) return;
          Canonical cn = canonicalize(g, spec.canon());
          if (!cn.zero) out.insert(cn.key);
          return;
        }
        int cap = even ? (pairs[idx].first == pairs[idx].second ? 1 : 1) : left;
        if (pairs[idx].first == pairs[idx].second) cap = even ? 1 : 0;
        self(self, idx + 1, left);
        for (int mu = 1; mu <= cap; ++mu) {
          edges.push_back(Edge{pairs[idx].first, pairs[idx].second});
          self(self, idx + 1, left - mu);
        }
        for (int mu = 1; mu <= cap; ++mu) edges.pop_back();
      };
      for (int E = 0; E <= ecap; ++E) rec(rec, 0, E);
    }
  }
  return out;
}

std::set<std::string> all_keys(const BasisTable& b) {
  std::set<std::string> out;
  for (const auto& [d, keys] : b.by_degree) out.insert(keys.begin(), keys.end());
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("two-point window of the plain graphs family") {
  ComplexSpec spec{Family::Graphs, 2, 1, false};
  Window w;
  w.N = 2;
  w.j = 0;
  w.v_max = 0;
  BasisTable b = enumerate_basis(spec, w);
  CHECK(b.total() == 2);
  CHECK(b.dim(0) == 1);
  CHECK(b.dim(1) == 1);
  CHECK(b.keys(0)[0] == "N2 k0 |");
  CHECK(b.keys(1)[0] == "N2 k0 | 1>2");
}

TEST_CASE("five-vertex one-loop window holds exactly the 5-cycle") {
  ComplexSpec spec{Family::GC2, 2, 1, false};
  Window w;
  w.j = 1;
  w.v_max = 5;
  BasisTable b = enumerate_basis(spec, w);
  REQUIRE(b.total() == 1);
  CHECK(b.dim(-3) == 1);  // degree n - r = 2 - 5

  Graph c5 = decode("N0 k5 | i1>i2 i2>i3 i3>i4 i4>i5 i5>i1", Parity::even);
  Canonical c = canonicalize(c5, spec.canon());
  REQUIRE(!c.zero);
  CHECK(b.keys(-3)[0] == c.key);
}

TEST_CASE("cycles through nine vertices") {
  ComplexSpec spec{Family::GC2, 2, 1, false};
  Window w;
  w.j = 1;
  w.v_max = 9;
  BasisTable b = enumerate_basis(spec, w);
  CHECK(b.total() == 2);  // 5- and 9-cycles; others die by reflection sign
  CHECK(b.dim(-3) == 1);
  CHECK(b.dim(-7) == 1);

  ComplexSpec with_l1{Family::GC2, 2, 1, true};
  BasisTable b1 = enumerate_basis(with_l1, w);
  CHECK(b1.total() == 3);
  CHECK(b1.dim(1) == 1);  // the one-vertex tadpole, degree n - 1
}

TEST_CASE("tripod window") {
  ComplexSpec spec{Family::HGC, 2, 1, false};
  Window w;
  w.j = 0;
  w.hairs = 3;
  w.v_max = 1;
  BasisTable b = enumerate_basis(spec, w);
  REQUIRE(b.total() == 1);
  CHECK(b.dim(-1) == 1);
  CHECK(b.keys(-1)[0] == "N3 k1 | i1>1 i1>2 i1>3");
}

TEST_CASE("line components appear when their sign survives") {
  Window w;
  w.hairs = 2;
  w.v_max = 0;
  w.j = 0;
  // m = n mod 2 keeps the line
  BasisTable keep = enumerate_basis(ComplexSpec{Family::HGC, 3, 1, false}, w);
  CHECK(keep.total() == 1);
  BasisTable kill = enumerate_basis(ComplexSpec{Family::HGC, 2, 1, false}, w);
  CHECK(kill.total() == 0);
}

TEST_CASE("refusals for windows that are not finite") {
  ComplexSpec odd_gc{Family::GC2, 3, 1, false};
  Window open;
  CHECK_THROWS_AS(enumerate_basis(odd_gc, open), std::domain_error);

  ComplexSpec hgc{Family::HGC, 2, 1, false};
  Window no_hairs;
  no_hairs.v_max = 2;
  CHECK_THROWS_AS(enumerate_basis(hgc, no_hairs), std::domain_error);

  ComplexSpec hgc2{Family::HGC2, 2, 1, false};
  Window no_vmax;
  no_vmax.hair_max = 3;
  no_vmax.j = 1;
  CHECK_THROWS_AS(enumerate_basis(hgc2, no_vmax), std::domain_error);

  // bounded after all: odd parity with a loop order
  Window bounded;
  bounded.j = 1;
  bounded.v_max = 3;
  CHECK_NOTHROW(enumerate_basis(odd_gc, bounded));
}

TEST_CASE("agreement with the dumb generator on small windows") {
  struct Case {
    ComplexSpec spec;
    Window win;
    int vcap, ecap;
  };
  std::vector<Case> cases;
  {
    Window w;
    w.N = 2;
    w.v_max = 2;
    cases.push_back({ComplexSpec{Family::Graphs, 2, 1, false}, w, 2, 6});
  }
  {
    Window w;
    w.N = 2;
    w.j = 1;
    w.v_max = 2;
    cases.push_back({ComplexSpec{Family::Graphs2, 3, 1, false}, w, 2, 5});
  }
  {
    Window w;
    w.j = 2;
    w.v_max = 4;
    cases.push_back({ComplexSpec{Family::GC2, 2, 1, false}, w, 4, 6});
  }
  {
    Window w;
    w.j = 2;
    w.v_max = 3;
    cases.push_back({ComplexSpec{Family::GC2, 3, 1, false}, w, 3, 5});
  }
  {
    Window w;
    w.hair_max = 4;
    w.j = 1;
    w.v_max = 3;
    // hairs count toward the loop order, so V=3 H=4 connected reaches 7 edges
    cases.push_back({ComplexSpec{Family::HGC2, 2, 1, false}, w, 3, 8});
  }
  {
    Window w;
    w.hairs = 3;
    w.j = 0;
    w.v_max = 2;
    cases.push_back({ComplexSpec{Family::HGC, 3, 2, false}, w, 2, 5});
  }
  {
    Window w;
    w.N = 3;
    w.j = 0;
    cases.push_back({ComplexSpec{Family::Gra, 2, 1, false}, w, 0, 4});
  }
  for (const auto& c : cases) {
    BasisTable b = enumerate_basis(c.spec, c.win);
    std::set<std::string> fast = all_keys(b);
    std::set<std::string> slow = brute(c.spec, c.win, c.vcap, c.ecap);
    CAPTURE(c.spec.id());
    CHECK(fast == slow);
  }
}

TEST_CASE("derived vertex bound matches an explicit one") {
  // trivalent family with fixed loop order: v_max may be omitted
  ComplexSpec spec{Family::Graphs, 2, 1, false};
  Window w;
  w.N = 3;
  w.j = 1;
  BasisTable derived = enumerate_basis(spec, w);
  w.v_max = 3 + 2 * 1 - 2;
  BasisTable pinned = enumerate_basis(spec, w);
  CHECK(all_keys(derived) == all_keys(pinned));
  CHECK(derived.total() > 0);
}

TEST_CASE("index lookup and ordering") {
  ComplexSpec spec{Family::Graphs, 2, 1, false};
  Window w;
  w.N = 3;
  w.j = 0;
  BasisTable b = enumerate_basis(spec, w);
  CHECK(b.total() > 0);
  for (const auto& [d, keys] : b.by_degree) {
    for (size_t i = 0; i + 1 < keys.size(); ++i) CHECK(keys[i] < keys[i + 1]);
    for (size_t i = 0; i < keys.size(); ++i) {
      auto it = b.index.find(keys[i]);
      REQUIRE(it != b.index.end());
      CHECK(it->second.first == d);
      CHECK(it->second.second == static_cast<int>(i));
      CHECK(b.reps.count(keys[i]) == 1);
    }
  }
}

TEST_CASE("chain bookkeeping") {
  ComplexSpec spec{Family::HGC, 2, 1, false};
  Chain c(spec);
  Graph tripod = decode("N3 k1 | i1>1 i1>2 i1>3", Parity::even);
  c.add(tripod, rat(1, 4));
  // same class entered with scrambled hair labels accumulates
  Graph scrambled = decode("N3 k1 | i1>2 i1>3 i1>1", Parity::even);
  c.add(scrambled, rat(1, 4));
  REQUIRE(c.size() == 1);
  CHECK(c.coeff("N3 k1 | i1>1 i1>2 i1>3") == rat(1, 2));
  CHECK(c.homogeneous_degree() == -1);

  c.add(tripod, rat(-1, 2));
  CHECK(c.empty());

  Graph star5 = decode("N5 k1 | i1>1 i1>2 i1>3 i1>4 i1>5", Parity::even);
  c.add(tripod, 1);
  c.add(star5, rat(-1, 16));
  CHECK(c.size() == 2);
  CHECK(c.homogeneous_degree() == -1);
  CHECK(c.max_hairs() == 5);
  CHECK(c.hair_component(5).size() == 1);
  CHECK(c.hair_truncate(3).size() == 1);
  Chain d = c.scaled(rat(2, 1));
  CHECK(d.coeff("N3 k1 | i1>1 i1>2 i1>3") == 2);
  CHECK(c == c);
  CHECK_FALSE(c == d);
}

}  // TEST_SUITE
