#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gch {

// Parity of the ambient dimension n.  It decides where orientation data lives:
//   even: the orientation is the ordering of the edge list; transposing two
//         edges flips the sign, reversing an edge does nothing.
//   odd:  the orientation is the ordering of the internal vertices together
//         with the edge directions; transposing two internal vertices or
//         reversing one edge flips the sign, reordering the edge list does
//         nothing.
enum class Parity { even, odd };

// Vertex ids: externals are 0..next-1, internals are next..next+nint-1.
struct Edge {
  int a{0};
  int b{0};
};

struct Graph {
  Parity parity{Parity::even};
  int next{0};
  int nint{0};
  std::vector<Edge> edges;

  int vcount() const { return next + nint; }
  bool is_internal(int v) const { return v >= next; }
  void add_edge(int a, int b) { edges.push_back(Edge{a, b}); }

  // valence counts a loop twice at its vertex
  std::vector<int> valences() const;
  bool has_loop() const;
  int components() const;  // isolated vertices count as components
  int loop_order() const;  // E - V + #components
};

// External vertex behaviour under canonicalization.
//   symmetric_externals=false: externals are labeled operadic slots and stay put.
//   symmetric_externals=true:  externals are interchangeable hairs; permuting
//   them contributes sign^hair_parity (sign if hair_parity is odd).
struct CanonOptions {
  bool symmetric_externals{false};
  Parity hair_parity{Parity::even};
};

struct Canonical {
  bool zero{false};
  int sign{1};  // input element == sign * rep
  Graph rep;
  std::string key;  // encode(rep); empty when zero
};

// Canonical representative of the oriented-graph class, or Zero when the graph
// admits an orientation-reversing automorphism.
Canonical canonicalize(const Graph& g, const CanonOptions& opt);

// Text form "N<int> k<int> | a>b a>b ...", vertices rendered 1..N and i1..ik.
std::string encode(const Graph& g);
Graph decode(const std::string& text, Parity parity);

}  // namespace gch
