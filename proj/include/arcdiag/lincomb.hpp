#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace arcdiag {

/// Finite formal linear combination with deterministic (key-ordered)
/// iteration. Zero coefficients are never stored.
template <class K, class C>
class LinComb {
 public:
  using map_type = std::map<K, C>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  LinComb(std::initializer_list<std::pair<const K, C>> init) {
    for (const auto& [k, c] : init) add(k, c);
  }

  void add(const K& key, const C& coeff) {
    if (coeff == C(0)) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const C& scale = C(1)) {
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  C coeff(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? C(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  map_type terms_;
};

/// Integer-coefficient expansion produced by the label algebra. Every
/// reduction rule of the shipped presets has integer structure constants,
/// so expansions are field independent.
template <class K>
using Expansion = LinComb<K, std::int64_t>;

}  // namespace arcdiag
