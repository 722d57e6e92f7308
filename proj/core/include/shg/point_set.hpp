#ifndef SHG_POINT_SET_HPP
#define SHG_POINT_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "shg/errors.hpp"

namespace shg {

/// Subset of the point universe {0, ..., n-1}, stored as a membership bitset.
/// Two sets are comparable only when they live over the same universe.
class PointSet {
 public:
  PointSet() : universe_(0) {}
  explicit PointSet(int universe);
  PointSet(int universe, std::initializer_list<int> points);

  static PointSet full(int universe);

  int universe() const { return universe_; }
  bool contains(int p) const;
  void insert(int p);
  void erase(int p);

  int size() const;
  bool empty() const { return size() == 0; }
  bool is_full() const { return size() == universe_; }

  bool is_subset_of(const PointSet& other) const;
  PointSet unite(const PointSet& other) const;
  PointSet intersect(const PointSet& other) const;
  PointSet complement() const;

  /// Members in increasing order.
  std::vector<int> points() const;

  bool operator==(const PointSet& other) const;

  /// Numeric value of the membership mask; defines a deterministic
  /// enumeration order for subsets of small universes.
  std::uint64_t mask64() const;

 private:
  void check_point(int p) const;
  void check_universe(const PointSet& other) const;

  int universe_;
  std::vector<std::uint64_t> words_;
};

}  // namespace shg

#endif  // SHG_POINT_SET_HPP
