#pragma once

#include <map>

#include "gch/chain.hpp"
#include "gch/complex_spec.hpp"
#include "gch/errors.hpp"
#include "gch/graph.hpp"

namespace gch {

// One internal vertex with the given number of hairs.
Graph corona(int hairs, Parity parity);

// Cycle of `cycle` internal vertices with hairs attached to the first
// `hairs` of them, one each.
Graph hedgehog(int cycle, int hairs, Parity parity);

// Hair-graded element of a hairy complex; the map index is the hair count.
// Components above hair_max are not stored: every operation that consumes a
// MaurerCartan works in the quotient by graphs with more than hair_max hairs.
struct MaurerCartan {
  ComplexSpec spec;
  int hair_max = 0;
  std::map<int, Chain> by_hairs;

  Chain total() const;

  // Every component must be homogeneous of degree -1, lie in the declared
  // hairy family, and carry exactly the hair count it is filed under.
  // Violations throw IntegrityError.
  void validate() const;
};

// The corona series with coefficients 1/4^k on the (2k+1)-hair corona.
MaurerCartan alpha(const ComplexSpec& spec, int hair_max);

// Odd coronas with coefficients lambda^k; alpha is the case lambda = 1/4.
MaurerCartan corona_series(const ComplexSpec& spec, const Rat& lambda, int hair_max);

// The series with coefficients 2k/4^k on the (2k+1)-hair corona.
Chain tripod_series(const ComplexSpec& spec, int hair_max);

// Pre-Lie product on hairy chains: the last hair of each x-term is redirected
// onto every vertex of each y-term, weighted by the count of hair shuffles
// binom(H_x - 1 + H_y, H_y) and the hair-parity sign (-1)^{m (H_x - 1)}.
// Attachments that leave the family (a hair of y gaining a second edge) are
// dropped. Hairy specs only.
Chain circ(const Chain& x, const Chain& y);

// [x, y] = x o y - (-1)^{|x||y|} y o x. Arguments must be homogeneous.
Chain bracket(const Chain& x, const Chain& y);

// Disjoint union, x's data before y's. Hairy specs only; degree -m.
Chain cup(const Chain& x, const Chain& y);

// The scaling operator: each graph is multiplied by internals minus edges.
Chain scaling(const Chain& x);

int hodge(const Graph& g);          // hairs - 1
long total_excess(const Graph& g);  // -(hairs - 1) + edges - internals

// Residual of delta(mc) + 1/2 [mc, mc] per hair count; only hair counts
// <= mc.hair_max with a nonzero residual appear in the result.
std::map<int, Chain> mc_check(const MaurerCartan& mc);

// A hairy complex with differential delta + [mc, .], truncated to the
// quotient by hair counts above mc.hair_max.
struct Twisted {
  ComplexSpec spec;
  MaurerCartan mc;
};

// Validates mc and checks its structure equation through mc.hair_max;
// a nonzero residual throws IntegrityError.
Twisted twist(const ComplexSpec& spec, const MaurerCartan& mc);

Chain twisted_differential(const Twisted& tw, const Chain& x);

// Action of an all-internal chain on an operadic or hairy chain over the
// same n: insertion into internal vertices plus compositions with gamma
// carrying one vertex turned external. Signs are fixed by the chain-map
// identity delta(gamma.G) - gamma.(delta G) = (delta gamma).G.
Chain gc_action(const Chain& gamma, const Chain& target);

namespace detail {

// The sign and summation conventions the action formula leaves open. The
// shipped values are the unique assignment satisfying the chain-map
// identity on the pinning battery in the tests.
struct ActionSigns {
  int insert = 1;            // gamma inserted into each internal vertex
  int left = 1;              // target composed into one-vertex-external gamma
  int right = 1;             // one-vertex-external gamma composed into each slot
  bool sum_vertices = true;  // external vertex summed over gamma, else first only
  bool alternate = false;    // weight vertex u of the sum by (-1)^u
};

Chain gc_action_tuned(const Chain& gamma, const Chain& target, const ActionSigns& s);
ActionSigns shipped_action_signs();

}  // namespace detail

// Image of an all-internal chain in a hairy complex: attach 2k+1 hairs to
// the vertices in all ways, weighted by 1/4^k, for all k with 2k+1 <= hair_max.
Chain hgc_image_of_gc(const Chain& gamma, const ComplexSpec& hspec, int hair_max);

struct Extension {
  bool consistent = false;
  Chain cocycle;
};

// Solves (twisted delta)(leading + correction) = 0 for a correction
// supported in hair counts above the leading term's, up to hair_max, with
// the same degree and loop order. The leading chain must be homogeneous in
// degree and hair count and consist of connected graphs.
Extension solve_cocycle_extension(const Chain& leading, const Twisted& tw, int hair_max);

}  // namespace gch
