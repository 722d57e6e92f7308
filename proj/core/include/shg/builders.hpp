#ifndef SHG_BUILDERS_HPP
#define SHG_BUILDERS_HPP

#include <vector>

#include "shg/structure.hpp"

namespace shg {

/// x*y = y for all x, y.
FiniteSemihypergroup make_right_zero(int n);

/// x*y = x for all x, y.
FiniteSemihypergroup make_left_zero(int n);

/// Two-point hypergroup with identity 0 and p_1*p_1 = theta p_0 +
/// (1-theta) p_1; theta must lie in (0, 1]. theta = 1 is the two-element
/// group. Identity involution; see two_point_hypergroup().
FiniteSemihypergroup make_two_point(const Rational& theta);
HypergroupStructure two_point_hypergroup();

/// Point-mass tensor of a group (or any associative) multiplication table;
/// rejects non-associative tables and tables without structure.
FiniteSemihypergroup make_group(const std::vector<std::vector<int>>& table);

/// Conjugacy-class structure of a finite group: points are the classes in
/// order of least member, and the tensor entry (i, j, k) is
/// n_ijk |C_k| / (|C_i| |C_j|) with n_ijk the number of pairs in C_i x C_j
/// multiplying to a fixed member of C_k, counted by brute force.
FiniteSemihypergroup make_conjugacy_class(const std::vector<std::vector<int>>& table);

/// Hypergroup structure of a conjugacy-class instance: identity is the
/// class of the group identity, the involution maps a class to the class
/// of inverses.
HypergroupStructure conjugacy_class_hypergroup(const std::vector<std::vector<int>>& table);

/// Orbit structure of the cyclic group of order n under negation: points
/// are the orbits {k, n-k}, convolution is pushforward of the uniform
/// products. A commutative hypergroup for every n >= 1.
FiniteSemihypergroup make_cyclic_orbit(int n);

/// Componentwise product structure; valid whenever both factors are.
FiniteSemihypergroup direct_product(const FiniteSemihypergroup& a, const FiniteSemihypergroup& b);

std::vector<std::vector<int>> cyclic_group_table(int n);
/// Full symmetric group on n letters (n <= 5), elements in lexicographic
/// one-line order so the identity permutation is element 0.
std::vector<std::vector<int>> symmetric_group_table(int n);

}  // namespace shg

#endif  // SHG_BUILDERS_HPP
