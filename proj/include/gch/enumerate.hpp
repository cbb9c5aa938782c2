#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "gch/complex_spec.hpp"
#include "gch/graph.hpp"

namespace gch {

// Finite slice of a complex. A window must pin enough bounds to make the
// basis finite: either an explicit internal-vertex bound, or a loop order
// in a family whose valence rules then bound everything else.
struct Window {
  int N = 0;          // external vertices (operadic families; ignored when hairy)
  int j = -1;         // loop order; -1 = no constraint
  int hairs = -1;     // exact hair count (hairy families); -1 = use hair_max
  int hair_max = -1;  // upper hair bound (hairy families)
  int v_max = -1;     // internal vertex bound; -1 = derive from the other bounds
  int deg_lo = std::numeric_limits<int>::min();
  int deg_hi = std::numeric_limits<int>::max();
  bool connected = false;
};

// All basis graphs of a window, grouped by degree, each group sorted by key.
struct BasisTable {
  ComplexSpec spec;
  Window window;
  std::map<int, std::vector<std::string>> by_degree;
  std::map<std::string, std::pair<int, int>> index;  // key -> (degree, position)
  std::map<std::string, Graph> reps;

  int dim(int d) const {
    auto it = by_degree.find(d);
    return it == by_degree.end() ? 0 : static_cast<int>(it->second.size());
  }
  const std::vector<std::string>& keys(int d) const {
    static const std::vector<std::string> none;
    auto it = by_degree.find(d);
    return it == by_degree.end() ? none : it->second;
  }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [d, v] : by_degree) out.push_back(d);
    return out;
  }
  int total() const {
    int t = 0;
    for (const auto& [d, v] : by_degree) t += static_cast<int>(v.size());
    return t;
  }
  bool contains(const std::string& key) const { return index.count(key) != 0; }
};

// Enumerates every canonical nonzero graph of the family inside the window.
// Throws std::domain_error if the window is not provably finite and
// std::runtime_error if it is finite but beyond desk scale.
BasisTable enumerate_basis(const ComplexSpec& spec, const Window& window);

}  // namespace gch
