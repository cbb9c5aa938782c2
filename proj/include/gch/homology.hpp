#pragma once

#include <string>
#include <vector>

#include "gch/chain.hpp"
#include "gch/enumerate.hpp"
#include "gch/errors.hpp"
#include "gch/linalg.hpp"

namespace gch {

// Matrix of the differential out of degree d: column j expands the j-th
// degree-d basis graph in the degree-(d-1) basis. Homology windows must be
// closed under the differential; any term that canonicalizes to a graph
// missing from the window raises IntegrityError.
SparseMatrix boundary_matrix(const BasisTable& basis, int d);

struct HomologyRow {
  int degree = 0;
  long dim = 0;
  long rank_out = 0;  // rank of the differential leaving this degree
  long rank_in = 0;   // rank of the differential arriving from degree + 1
  long betti = 0;
};

struct HomologyTable {
  ComplexSpec spec;
  Window window;
  std::vector<HomologyRow> rows;  // ascending degree, populated degrees only

  long betti(int degree) const;
  long euler_dims() const;   // alternating sum of basis dimensions
  long euler_betti() const;  // alternating sum of Betti numbers
};

// Betti numbers of the window, one row per populated degree:
// betti_d = dim_d - rank(d -> d-1) - rank(d+1 -> d).
// Verifies that consecutive boundary matrices multiply to zero, that no
// Betti number is negative, and that the two Euler sums agree.
HomologyTable homology(const BasisTable& basis);
HomologyTable homology(const ComplexSpec& spec, const Window& window);

// Alternating sum of basis dimensions; needs no rank computation.
long euler(const ComplexSpec& spec, const Window& window);

// True iff the differential of x vanishes identically.
bool cocycle_check(const Chain& x);

}  // namespace gch
