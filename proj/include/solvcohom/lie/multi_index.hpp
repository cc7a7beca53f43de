#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace solvcohom {

/// Subset of {0, ..., n-1} as a bit mask; n <= 63.
using IndexSet = std::uint64_t;

inline std::size_t cardinality(IndexSet s) { return static_cast<std::size_t>(std::popcount(s)); }
inline bool contains(IndexSet s, std::size_t i) { return (s >> i) & 1U; }
inline IndexSet singleton(std::size_t i) { return IndexSet{1} << i; }

std::vector<std::size_t> elements(IndexSet s);

/// Number of elements of s strictly below i.
inline std::size_t count_below(IndexSet s, std::size_t i) { return cardinality(s & (singleton(i) - 1)); }

std::size_t binomial(std::size_t n, std::size_t k);

/// All p-subsets of {0..n-1}, ordered lexicographically as increasing tuples.
class SubsetBasis {
public:
  SubsetBasis(std::size_t n, std::size_t p);

  std::size_t size() const { return subsets_.size(); }
  IndexSet operator[](std::size_t k) const { return subsets_[k]; }
  std::size_t position(IndexSet s) const { return position_.at(s); }
  const std::vector<IndexSet>& subsets() const { return subsets_; }

private:
  std::vector<IndexSet> subsets_;
  std::unordered_map<IndexSet, std::size_t> position_;
};

}  // namespace solvcohom
