#include "gch/chain.hpp"

#include <sstream>

namespace gch {

void Chain::add(const Graph& g, const Rat& c) {
  if (c == 0) return;
  Canonical cn = canonicalize(g, spec_.canon());
  if (cn.zero) return;
  auto it = terms_.find(cn.key);
  if (it == terms_.end()) {
    Rat v = c * cn.sign;
    terms_.emplace(cn.key, Term{v, cn.rep});
    return;
  }
  it->second.c += c * cn.sign;
  if (it->second.c == 0) terms_.erase(it);
}

void Chain::add(const Chain& other) {
  for (const auto& [key, t] : other.terms_) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, t);
    } else {
      it->second.c += t.c;
      if (it->second.c == 0) terms_.erase(it);
    }
  }
}

void Chain::scale(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return;
  }
  for (auto& [key, t] : terms_) t.c *= s;
}

Chain Chain::scaled(const Rat& s) const {
  Chain out = *this;
  out.scale(s);
  return out;
}

Rat Chain::coeff(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rat(0) : it->second.c;
}

std::optional<int> Chain::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [key, t] : terms_) {
    int dt = degree(t.rep, spec_);
    if (!d) d = dt;
    else if (*d != dt) return std::nullopt;
  }
  return d;
}

std::optional<int> Chain::max_hairs() const {
  std::optional<int> h;
  for (const auto& [key, t] : terms_)
    if (!h || t.rep.next > *h) h = t.rep.next;
  return h;
}

Chain Chain::hair_component(int hairs) const {
  Chain out(spec_);
  for (const auto& [key, t] : terms_)
    if (t.rep.next == hairs) out.terms_.emplace(key, t);
  return out;
}

Chain Chain::hair_truncate(int hmax) const {
  Chain out(spec_);
  for (const auto& [key, t] : terms_)
    if (t.rep.next <= hmax) out.terms_.emplace(key, t);
  return out;
}

int Chain::filter_family() {
  int dropped = 0;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (family_legal(it->second.rep, spec_)) {
      ++it;
    } else {
      it = terms_.erase(it);
      ++dropped;
    }
  }
  return dropped;
}

bool Chain::operator==(const Chain& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second.c != b->second.c) return false;
  return true;
}

std::string Chain::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, t] : terms_) {
    if (!first) os << "  +  ";
    os << rat_str(t.c) << " * (" << key << ")";
    first = false;
  }
  return os.str();
}

}  // namespace gch
