#pragma once

#include "gch/chain.hpp"
#include "gch/complex_spec.hpp"
#include "gch/graph.hpp"

namespace gch {

// Vertex-splitting differential. Every vertex is split into the old vertex
// plus one new internal vertex joined to it by a new edge; the incident
// half-edges are redistributed. For an internal vertex the two sides are
// unordered, so the sum runs over distributions that move the vertex's first
// half-edge to the new vertex. For an external vertex the old vertex keeps
// its label and any subset of half-edges may move. Splits that leave the
// family are dropped; with enforce the input itself must be in the family.
// Construction sign is +1: the new edge is appended last, directed old->new,
// and the new vertex takes the last internal id.
Chain differential(const Graph& g, const ComplexSpec& spec, bool enforce = true);
Chain differential(const Chain& x, bool enforce = false);

// Operadic composition x o_slot y (slot is 1-based): external vertex `slot`
// of x is removed and the edges formerly ending there are redistributed over
// the vertices of y in all ways. Externals of y take over slots
// slot..slot+M-1; later externals of x shift up. Operadic families only.
Chain compose(const Graph& x, int slot, const Graph& y, const ComplexSpec& spec);
Chain compose(const Chain& x, int slot, const Chain& y);

// Insertion of the arity-0 graph guest into internal vertex v of host:
// v is removed, guest's vertices are appended after host's internals, and
// v's half-edges are redistributed over guest's vertices in all ways.
// Terms are emitted into out with coefficient base_c each.
void insert_internal(const Graph& host, int v, const Graph& guest, const Rat& base_c,
                     Chain& out);

// Unital insertion: forgets external `slot` (1-based) when it has valence
// zero, renumbering the later vertices down; otherwise the zero chain.
Chain unital_insert(const Graph& g, int slot, const ComplexSpec& spec);

// Eigenvalue of the scaling operator S on a graph: internal vertices minus
// edges. Additive under operadic composition, so S acts by derivations.
long scaling_eigenvalue(const Graph& g);

}  // namespace gch
