#include "gch/homology.hpp"

#include <map>

#include "gch/ops.hpp"

namespace gch {

SparseMatrix boundary_matrix(const BasisTable& basis, int d) {
  const auto& cols = basis.keys(d);
  const auto& rows = basis.keys(d - 1);
  SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    const Graph& g = basis.reps.at(cols[j]);
    Chain dg = differential(g, basis.spec);
    for (const auto& [key, term] : dg.terms()) {
      auto it = basis.index.find(key);
      if (it == basis.index.end() || it->second.first != d - 1)
        throw IntegrityError("boundary_matrix: window is not closed under the differential; " +
                             cols[j] + " maps onto " + key);
      m.set(it->second.second, j, term.c);
    }
  }
  return m;
}

long HomologyTable::betti(int degree) const {
  for (const auto& r : rows)
    if (r.degree == degree) return r.betti;
  return 0;
}

namespace {
int sign_of(int d) { return d % 2 == 0 ? 1 : -1; }
}  // namespace

long HomologyTable::euler_dims() const {
  long e = 0;
  for (const auto& r : rows) e += sign_of(r.degree) * r.dim;
  return e;
}

long HomologyTable::euler_betti() const {
  long e = 0;
  for (const auto& r : rows) e += sign_of(r.degree) * r.betti;
  return e;
}

HomologyTable homology(const BasisTable& basis) {
  HomologyTable out{basis.spec, basis.window, {}};
  std::map<int, SparseMatrix> bnd;
  std::map<int, long> rk;
  for (int d : basis.degrees()) {
    auto it = bnd.emplace(d, boundary_matrix(basis, d)).first;
    rk[d] = rank(it->second).rank;
  }

  for (const auto& [d, m] : bnd) {
    auto above = bnd.find(d + 1);
    if (above == bnd.end()) continue;
    if (multiply(m, above->second).nnz() != 0)
      throw IntegrityError("homology: consecutive boundaries do not compose to zero at degree " +
                           std::to_string(d + 1));
  }

  for (int d : basis.degrees()) {
    HomologyRow row;
    row.degree = d;
    row.dim = basis.dim(d);
    row.rank_out = rk.at(d);
    row.rank_in = rk.count(d + 1) ? rk.at(d + 1) : 0;
    row.betti = row.dim - row.rank_out - row.rank_in;
    if (row.betti < 0)
      throw IntegrityError("homology: negative Betti number at degree " + std::to_string(d));
    out.rows.push_back(row);
  }

  if (out.euler_dims() != out.euler_betti())
    throw IntegrityError("homology: Euler characteristic mismatch between dimensions and Betti numbers");
  return out;
}

HomologyTable homology(const ComplexSpec& spec, const Window& window) {
  return homology(enumerate_basis(spec, window));
}

long euler(const ComplexSpec& spec, const Window& window) {
  BasisTable b = enumerate_basis(spec, window);
  long e = 0;
  for (int d : b.degrees()) e += sign_of(d) * b.dim(d);
  return e;
}

bool cocycle_check(const Chain& x) { return differential(x).empty(); }

}  // namespace gch
