#include "gch/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gch {

std::vector<int> Graph::valences() const {
  std::vector<int> val(vcount(), 0);
  for (const Edge& e : edges) {
    val[e.a] += 1;
    val[e.b] += 1;
  }
  return val;
}

bool Graph::has_loop() const {
  for (const Edge& e : edges)
    if (e.a == e.b) return true;
  return false;
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int Graph::components() const {
  if (vcount() == 0) return 0;
  Dsu d(vcount());
  for (const Edge& e : edges) d.join(e.a, e.b);
  std::set<int> roots;
  for (int v = 0; v < vcount(); ++v) roots.insert(d.find(v));
  return static_cast<int>(roots.size());
}

int Graph::loop_order() const {
  return static_cast<int>(edges.size()) - vcount() + components();
}

namespace {

// Sort key putting internals before externals; encode() prints in this order.
inline int okey(int v, int next, int nint) { return v >= next ? v - next : nint + v; }

inline int perm_sign(const std::vector<int>& p) {
  // parity by counting inversions; fine at these sizes
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

using KeyEdge = std::pair<int, int>;

struct Candidate {
  std::vector<KeyEdge> keys;
  int sign{1};
};

// Evaluate one labeling. newid maps old vertex id to new vertex id.
Candidate evaluate(const Graph& g, const CanonOptions& opt, const std::vector<int>& newid,
                   const std::vector<int>& internal_perm, const std::vector<int>& ext_perm) {
  Candidate c;
  c.keys.reserve(g.edges.size());
  int flips = 0;
  for (const Edge& e : g.edges) {
    int a = newid[e.a], b = newid[e.b];
    int ka = okey(a, g.next, g.nint), kb = okey(b, g.next, g.nint);
    if (ka > kb) {
      std::swap(ka, kb);
      ++flips;
    }
    c.keys.push_back({ka, kb});
  }
  int sign = 1;
  if (g.parity == Parity::even) {
    // orientation = edge order; sign of the permutation sorting the list
    for (size_t i = 0; i < c.keys.size(); ++i)
      for (size_t j = i + 1; j < c.keys.size(); ++j)
        if (c.keys[i] > c.keys[j]) sign = -sign;
    std::sort(c.keys.begin(), c.keys.end());
  } else {
    sign = perm_sign(internal_perm);
    if (flips % 2) sign = -sign;
    std::sort(c.keys.begin(), c.keys.end());
  }
  if (opt.symmetric_externals && opt.hair_parity == Parity::odd && !ext_perm.empty())
    sign *= perm_sign(ext_perm);
  c.sign = sign;
  return c;
}

}  // namespace

Canonical canonicalize(const Graph& g, const CanonOptions& opt) {
  Canonical out;
  out.rep.parity = g.parity;
  out.rep.next = g.next;
  out.rep.nint = g.nint;

  // Structural zeroes that no labeling can save.
  if (g.parity == Parity::even) {
    // repeated undirected edge: transposing the two copies reverses orientation
    std::map<std::pair<int, int>, int> mult;
    for (const Edge& e : g.edges) {
      auto key = std::minmax(e.a, e.b);
      if (++mult[{key.first, key.second}] >= 2) {
        out.zero = true;
        return out;
      }
    }
  } else {
    // reversing a loop is an automorphism acting by -1
    if (g.has_loop()) {
      out.zero = true;
      return out;
    }
  }

  const int V = g.vcount();
  std::vector<int> val = g.valences();

  // half-edge adjacency (loops contribute their vertex twice)
  std::vector<std::vector<int>> nbr(V);
  for (const Edge& e : g.edges) {
    nbr[e.a].push_back(e.b);
    nbr[e.b].push_back(e.a);
  }

  // hairs with at least two siblings on one vertex can kill the class outright:
  // swapping two hairs of a common vertex multiplies by
  // (edge-order sign for even parity) * (hair permutation sign for odd hair parity).
  std::vector<char> forced_hair(V, 0);
  if (opt.symmetric_externals) {
    std::vector<int> hair_count(V, 0);
    for (int v = 0; v < g.next; ++v)
      if (val[v] == 1 && g.is_internal(nbr[v][0])) {
        forced_hair[v] = 1;
        hair_count[nbr[v][0]] += 1;
      }
    int intra = (g.parity == Parity::even ? -1 : 1) * (opt.hair_parity == Parity::odd ? -1 : 1);
    if (intra == -1)
      for (int v = 0; v < V; ++v)
        if (hair_count[v] >= 2) {
          out.zero = true;
          return out;
        }
  }

  // Iterated neighbourhood refinement with content-ranked colors, so the class
  // partition and class order do not depend on the input labeling.
  auto stabilize = [&](std::vector<long long>& col) {
    size_t classes = 0;
    for (int round = 0; round <= V; ++round) {
      std::vector<std::vector<long long>> sig(V);
      for (int v = 0; v < V; ++v) {
        std::vector<long long> ns{col[v]};
        std::vector<long long> around;
        around.reserve(nbr[v].size());
        for (int u : nbr[v]) around.push_back(col[u]);
        std::sort(around.begin(), around.end());
        ns.insert(ns.end(), around.begin(), around.end());
        sig[v] = std::move(ns);
      }
      std::vector<std::vector<long long>> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int v = 0; v < V; ++v)
        col[v] = std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin();
      if (sorted.size() == classes) break;
      classes = sorted.size();
    }
  };

  std::vector<long long> color(V);
  for (int v = 0; v < V; ++v) {
    if (!g.is_internal(v))
      color[v] = opt.symmetric_externals ? 0 : 2 + v;
    else
      color[v] = 1;
  }
  stabilize(color);

  // permutable vertices: internals always; non-forced externals in symmetric mode
  std::vector<int> internals;
  for (int v = g.next; v < V; ++v) internals.push_back(v);
  std::vector<int> loose_ext;
  if (opt.symmetric_externals)
    for (int v = 0; v < g.next; ++v)
      if (!forced_hair[v]) loose_ext.push_back(v);

  std::vector<int> newid(V, -1);
  for (int v = 0; v < g.next; ++v)
    if (!opt.symmetric_externals) newid[v] = v;

  bool have_best = false;
  bool zero = false;
  Candidate best;

  std::vector<int> internal_order;  // old internal ids in assignment order
  std::vector<int> ext_order;       // old loose external ids in assignment order

  auto finish = [&]() {
    // internals get new ids next..; loose externals get 0..; hairs follow owners
    for (size_t i = 0; i < internal_order.size(); ++i)
      newid[internal_order[i]] = g.next + static_cast<int>(i);
    for (size_t i = 0; i < ext_order.size(); ++i) newid[ext_order[i]] = static_cast<int>(i);
    std::vector<int> ext_perm;  // old ext id -> new ext id, for the hair sign
    if (opt.symmetric_externals) {
      std::vector<std::pair<std::pair<int, int>, int>> hairs;  // ((owner newid, old id), old id)
      for (int v = 0; v < g.next; ++v)
        if (forced_hair[v]) hairs.push_back({{newid[nbr[v][0]], v}, v});
      std::sort(hairs.begin(), hairs.end());
      int base = static_cast<int>(ext_order.size());
      for (size_t i = 0; i < hairs.size(); ++i)
        newid[hairs[i].second] = base + static_cast<int>(i);
      ext_perm.resize(g.next);
      for (int v = 0; v < g.next; ++v) ext_perm[v] = newid[v];
    }
    std::vector<int> internal_perm(internal_order.size());
    for (size_t i = 0; i < internal_order.size(); ++i)
      internal_perm[i] = newid[g.next + static_cast<int>(i)] - g.next;
    Candidate cand = evaluate(g, opt, newid, internal_perm, ext_perm);
    if (!have_best || cand.keys < best.keys) {
      best = cand;
      have_best = true;
    } else if (cand.keys == best.keys && cand.sign != best.sign) {
      zero = true;
    }
  };

  // Individualization-refinement: repeatedly pin one vertex of the first
  // ambiguous cell and re-refine. Every fully refined coloring gives one
  // candidate labeling; automorphic images of a leaf are again leaves, so the
  // minimal key is met with every sign its orbit carries (zero detection).
  long nodes = 0;
  auto cells_of = [&](const std::vector<long long>& col, const std::vector<int>& verts) {
    std::map<long long, std::vector<int>> by_color;
    for (int v : verts) by_color[col[v]].push_back(v);
    std::vector<std::vector<int>> cells;
    for (auto& [c, members] : by_color) {
      std::sort(members.begin(), members.end());
      cells.push_back(members);
    }
    return cells;
  };

  auto rec = [&](auto&& self, const std::vector<long long>& col, int depth) -> void {
    if (zero) return;
    if (++nodes > 5'000'000)
      throw std::runtime_error("canonicalize: symmetry search too large");
    std::vector<std::vector<int>> int_cells = cells_of(col, internals);
    std::vector<std::vector<int>> ext_cells = cells_of(col, loose_ext);
    const std::vector<int>* split = nullptr;
    for (const auto& c : int_cells)
      if (c.size() > 1) {
        split = &c;
        break;
      }
    if (!split)
      for (const auto& c : ext_cells)
        if (c.size() > 1) {
          split = &c;
          break;
        }
    if (!split) {
      internal_order.clear();
      ext_order.clear();
      for (const auto& c : int_cells) internal_order.push_back(c[0]);
      for (const auto& c : ext_cells) ext_order.push_back(c[0]);
      finish();
      return;
    }
    for (int v : *split) {
      std::vector<long long> next = col;
      next[v] = V + depth;  // distinct from every rank, equal across siblings
      stabilize(next);
      self(self, next, depth + 1);
      if (zero) return;
    }
  };
  rec(rec, color, 1);

  if (zero) {
    out.zero = true;
    return out;
  }

  out.sign = best.sign;
  out.rep.edges.clear();
  for (const KeyEdge& ke : best.keys) {
    auto unkey = [&](int k) { return k < g.nint ? g.next + k : k - g.nint; };
    out.rep.add_edge(unkey(ke.first), unkey(ke.second));
  }
  out.key = encode(out.rep);
  return out;
}

std::string encode(const Graph& g) {
  std::ostringstream os;
  os << "N" << g.next << " k" << g.nint << " |";
  auto render = [&](int v) {
    if (g.is_internal(v))
      os << "i" << (v - g.next + 1);
    else
      os << (v + 1);
  };
  for (const Edge& e : g.edges) {
    os << " ";
    render(e.a);
    os << ">";
    render(e.b);
  }
  return os.str();
}

Graph decode(const std::string& text, Parity parity) {
  Graph g;
  g.parity = parity;
  std::istringstream is(text);
  std::string tok;
  auto fail = [&](const std::string& what, size_t pos) {
    throw std::invalid_argument("graph text: " + what + " at token " + std::to_string(pos));
  };
  size_t pos = 0;
  if (!(is >> tok) || tok.size() < 2 || tok[0] != 'N') fail("expected N<count>", pos);
  g.next = std::atoi(tok.c_str() + 1);
  ++pos;
  if (!(is >> tok) || tok.size() < 2 || tok[0] != 'k') fail("expected k<count>", pos);
  g.nint = std::atoi(tok.c_str() + 1);
  ++pos;
  if (!(is >> tok) || tok != "|") fail("expected '|'", pos);
  ++pos;
  if (g.next < 0 || g.nint < 0) fail("negative vertex count", 0);
  auto parse_vertex = [&](const std::string& s) {
    int v;
    if (!s.empty() && s[0] == 'i') {
      v = std::atoi(s.c_str() + 1);
      if (v < 1 || v > g.nint) fail("internal vertex out of range: " + s, pos);
      return g.next + v - 1;
    }
    v = std::atoi(s.c_str());
    if (v < 1 || v > g.next) fail("external vertex out of range: " + s, pos);
    return v - 1;
  };
  while (is >> tok) {
    auto gt = tok.find('>');
    if (gt == std::string::npos) fail("expected a>b", pos);
    g.add_edge(parse_vertex(tok.substr(0, gt)), parse_vertex(tok.substr(gt + 1)));
    ++pos;
  }
  return g;
}

}  // namespace gch
