#include "shg/point_set.hpp"

#include <bit>
#include <string>

namespace shg {

namespace {
constexpr int kWordBits = 64;
}

PointSet::PointSet(int universe) : universe_(universe) {
  if (universe < 0) throw StructuralError("negative universe size");
  words_.assign((universe + kWordBits - 1) / kWordBits, 0);
}

PointSet::PointSet(int universe, std::initializer_list<int> points) : PointSet(universe) {
  for (int p : points) insert(p);
}

PointSet PointSet::full(int universe) {
  PointSet s(universe);
  for (int p = 0; p < universe; ++p) s.insert(p);
  return s;
}

void PointSet::check_point(int p) const {
  if (p < 0 || p >= universe_)
    throw StructuralError("point " + std::to_string(p) + " outside universe of size " +
                          std::to_string(universe_));
}

void PointSet::check_universe(const PointSet& other) const {
  if (universe_ != other.universe_) throw StructuralError("point sets over different universes");
}

bool PointSet::contains(int p) const {
  check_point(p);
  return (words_[p / kWordBits] >> (p % kWordBits)) & 1u;
}

void PointSet::insert(int p) {
  check_point(p);
  words_[p / kWordBits] |= std::uint64_t(1) << (p % kWordBits);
}

void PointSet::erase(int p) {
  check_point(p);
  words_[p / kWordBits] &= ~(std::uint64_t(1) << (p % kWordBits));
}

int PointSet::size() const {
  int count = 0;
  for (auto w : words_) count += std::popcount(w);
  return count;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

PointSet PointSet::unite(const PointSet& other) const {
  check_universe(other);
  PointSet result(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) result.words_[i] = words_[i] | other.words_[i];
  return result;
}

PointSet PointSet::intersect(const PointSet& other) const {
  check_universe(other);
  PointSet result(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) result.words_[i] = words_[i] & other.words_[i];
  return result;
}

PointSet PointSet::complement() const {
  PointSet result(universe_);
  for (int p = 0; p < universe_; ++p)
    if (!contains(p)) result.insert(p);
  return result;
}

std::vector<int> PointSet::points() const {
  std::vector<int> result;
  result.reserve(size());
  for (int p = 0; p < universe_; ++p)
    if (contains(p)) result.push_back(p);
  return result;
}

bool PointSet::operator==(const PointSet& other) const {
  return universe_ == other.universe_ && words_ == other.words_;
}

std::uint64_t PointSet::mask64() const {
  if (universe_ > kWordBits) throw StructuralError("mask64 limited to universes of at most 64 points");
  return words_.empty() ? 0 : words_[0];
}

}  // namespace shg
