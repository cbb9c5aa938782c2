#pragma once

#include <map>
#include <optional>
#include <string>

#include "gch/complex_spec.hpp"
#include "gch/graph.hpp"
#include "gch/rational.hpp"

namespace gch {

// One canonical graph with its coefficient.
struct Term {
  Rat c;
  Graph rep;
};

// Finite linear combination of canonical graphs over Q, keyed by the text
// encoding. A chain remembers the complex it lives in; that fixes the
// canonicalization mode (parity, hair symmetry) used when terms are added.
// Zero coefficients are never stored.
class Chain {
 public:
  Chain() = default;
  explicit Chain(const ComplexSpec& spec) : spec_(spec) {}

  const ComplexSpec& spec() const { return spec_; }

  // Canonicalizes g and accumulates c * sign. Graphs that canonicalize to
  // zero are dropped silently.
  void add(const Graph& g, const Rat& c);
  void add(const Chain& other);

  void scale(const Rat& s);
  Chain scaled(const Rat& s) const;

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<std::string, Term>& terms() const { return terms_; }
  Rat coeff(const std::string& key) const;

  // Degree shared by all terms, if there is one. Empty chains report any
  // degree as a match.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return empty() || homogeneous_degree().has_value(); }

  // Largest/smallest hair count among terms (hairy chains). Empty: nullopt.
  std::optional<int> max_hairs() const;

  // Keeps only terms with the given hair count / at most the given count.
  Chain hair_component(int hairs) const;
  Chain hair_truncate(int hmax) const;

  // Drops terms that fail the family rules of spec(); returns how many were
  // dropped. Used after operations that may step outside the family.
  int filter_family();

  bool operator==(const Chain& o) const;

  std::string str() const;

 private:
  ComplexSpec spec_;
  std::map<std::string, Term> terms_;
};

}  // namespace gch
