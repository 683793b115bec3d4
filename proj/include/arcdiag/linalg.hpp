#pragma once

#include <map>
#include <utility>
#include <vector>

#include "arcdiag/scalar.hpp"

namespace arcdiag {

/// Incremental exact Gaussian elimination on sparse vectors indexed by an
/// ordered key type. Each stored pivot row is keyed by its smallest index.
template <class K, FieldScalar S>
class SparseEliminator {
 public:
  using Vector = std::map<K, S>;

  /// Reduces v against the pivots; stores the remainder if nonzero.
  /// Returns true if v was independent of the rows inserted so far.
  bool insert(Vector v) {
    drop_zeros(v);
    while (!v.empty()) {
      auto lead = v.begin();
      auto pivot = pivots_.find(lead->first);
      if (pivot == pivots_.end()) {
        const K key = lead->first;
        pivots_.emplace(key, std::move(v));
        return true;
      }
      const S factor = lead->second / pivot->second.at(lead->first);
      for (const auto& [k, c] : pivot->second) {
        auto [it, inserted] = v.try_emplace(k, S(0));
        it->second = it->second - factor * c;
        if (it->second.is_zero()) v.erase(it);
      }
    }
    return false;
  }

  /// True if v lies in the span of the inserted rows (v is not stored).
  bool in_span(Vector v) const {
    drop_zeros(v);
    while (!v.empty()) {
      auto lead = v.begin();
      auto pivot = pivots_.find(lead->first);
      if (pivot == pivots_.end()) return false;
      const S factor = lead->second / pivot->second.at(lead->first);
      for (const auto& [k, c] : pivot->second) {
        auto [it, inserted] = v.try_emplace(k, S(0));
        it->second = it->second - factor * c;
        if (it->second.is_zero()) v.erase(it);
      }
    }
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  static void drop_zeros(Vector& v) {
    for (auto it = v.begin(); it != v.end();) {
      it = it->second.is_zero() ? v.erase(it) : std::next(it);
    }
  }

  std::map<K, Vector> pivots_;
};

/// Rank of a list of sparse vectors.
template <class K, FieldScalar S>
std::size_t sparse_rank(const std::vector<std::map<K, S>>& vectors) {
  SparseEliminator<K, S> e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace arcdiag
