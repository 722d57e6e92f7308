#ifndef SHG_MEASURE_HPP
#define SHG_MEASURE_HPP

#include <optional>
#include <vector>

#include "shg/point_set.hpp"
#include "shg/rational.hpp"

namespace shg {

/// Finitely supported signed measure: one rational coefficient per point.
///
/// A measure may carry a *carrier* tag marking it as an element of M(E) for
/// a subset E of the universe; its coefficients vanish off E and combining
/// it with measures over a different carrier is a StructuralError. Measures
/// without a tag live on the whole universe. restrict()/extend() move
/// between the two worlds explicitly.
class SignedMeasure {
 public:
  explicit SignedMeasure(int universe);
  explicit SignedMeasure(std::vector<Rational> coefficients);

  static SignedMeasure point_mass(int universe, int x);
  static SignedMeasure uniform(int universe);

  int universe() const { return static_cast<int>(coefficients_.size()); }
  const Rational& at(int z) const;
  void set(int z, Rational value);

  const std::optional<PointSet>& carrier() const { return carrier_; }

  /// Total mass over the universe.
  Rational mass() const;
  bool is_zero() const;

  SignedMeasure& operator+=(const SignedMeasure& other);
  SignedMeasure& operator-=(const SignedMeasure& other);
  SignedMeasure& scale(const Rational& a);

  friend SignedMeasure operator+(SignedMeasure lhs, const SignedMeasure& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend SignedMeasure operator-(SignedMeasure lhs, const SignedMeasure& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend SignedMeasure operator*(const Rational& a, SignedMeasure m) {
    m.scale(a);
    return m;
  }
  SignedMeasure operator-() const;

  bool operator==(const SignedMeasure& other) const;

  friend SignedMeasure restrict(const SignedMeasure& mu, const PointSet& e);
  friend SignedMeasure extend(const SignedMeasure& mu);

 private:
  void check_compatible(const SignedMeasure& other) const;

  std::vector<Rational> coefficients_;
  std::optional<PointSet> carrier_;
};

/// Total variation norm, the sum of coefficient magnitudes.
Rational tv_norm(const SignedMeasure& mu);

/// {z : mu({z}) != 0}.
PointSet support(const SignedMeasure& mu);

/// Coefficient truncation to a nonempty subset E; result carries the tag E.
SignedMeasure restrict(const SignedMeasure& mu, const PointSet& e);

/// Zero-extension of a tagged measure back to the whole universe.
SignedMeasure extend(const SignedMeasure& mu);

/// A signed measure validated to lie on the probability simplex:
/// nonnegative coefficients with total mass exactly 1.
class ProbabilityMeasure {
 public:
  explicit ProbabilityMeasure(SignedMeasure m);

  const SignedMeasure& measure() const { return measure_; }
  operator const SignedMeasure&() const { return measure_; }
  int universe() const { return measure_.universe(); }
  const Rational& at(int z) const { return measure_.at(z); }

  bool operator==(const ProbabilityMeasure& other) const { return measure_ == other.measure_; }

 private:
  SignedMeasure measure_;
};

/// Bounded function on the point set; doubles as the concrete form of a
/// dual-space element via f |-> (mu |-> integral of f d-mu). Like measures,
/// functions may be tagged with the subset they are defined on.
class BoundedFunction {
 public:
  explicit BoundedFunction(int universe);
  explicit BoundedFunction(std::vector<Rational> values);

  static BoundedFunction one(int universe);
  static BoundedFunction indicator(const PointSet& e);

  int universe() const { return static_cast<int>(values_.size()); }
  const Rational& at(int z) const;
  void set(int z, Rational value);

  const std::optional<PointSet>& carrier() const { return carrier_; }

  bool operator==(const BoundedFunction& other) const;

  friend BoundedFunction restrict(const BoundedFunction& f, const PointSet& e);
  friend BoundedFunction extend(const BoundedFunction& f);

 private:
  std::vector<Rational> values_;
  std::optional<PointSet> carrier_;
};

/// Integral of f against mu; demands matching universes and carriers.
Rational evaluate(const BoundedFunction& f, const SignedMeasure& mu);

BoundedFunction restrict(const BoundedFunction& f, const PointSet& e);
BoundedFunction extend(const BoundedFunction& f);

/// Outcome of testing the three equivalent descriptions of a mean on a
/// coefficient vector m: (1) m is entrywise nonnegative with mass 1;
/// (2) tv_norm(m) = 1 and m(one) = 1; (3) every function integrates to a
/// value between its minimum and maximum.
///
/// For (3) it suffices to check the constant-one function and the single
/// point indicators: a vector passing those is a convex combination of
/// point masses, so the two-sided bound follows for every function.
struct MeanFormulationCheck {
  bool positive_unit_mass = false;
  bool norm_one_mass_one = false;
  bool within_function_bounds = false;
  /// A function violating formulation (3), when one exists.
  std::optional<BoundedFunction> violating_function;

  bool all_hold() const { return positive_unit_mass && norm_one_mass_one && within_function_bounds; }
  bool any_fails() const { return !all_hold(); }
};

MeanFormulationCheck check_mean_formulations(const SignedMeasure& m);

}  // namespace shg

#endif  // SHG_MEASURE_HPP
