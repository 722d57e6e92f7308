#include "shg/measure.hpp"

#include <string>
#include <utility>

namespace shg {

namespace {

std::string carrier_desc(const std::optional<PointSet>& c) {
  if (!c) return "full universe";
  return "carrier of size " + std::to_string(c->size());
}

void check_same_carrier(const std::optional<PointSet>& a, const std::optional<PointSet>& b,
                        const char* op) {
  const bool match = (!a && !b) || (a && b && *a == *b);
  if (!match)
    throw StructuralError(std::string(op) + ": carrier mismatch (" + carrier_desc(a) + " vs " +
                          carrier_desc(b) + "); restrict or extend explicitly");
}

}  // namespace

SignedMeasure::SignedMeasure(int universe) {
  if (universe < 0) throw StructuralError("negative universe size");
  coefficients_.assign(universe, Rational(0));
}

SignedMeasure::SignedMeasure(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {}

SignedMeasure SignedMeasure::point_mass(int universe, int x) {
  SignedMeasure m(universe);
  m.set(x, 1);
  return m;
}

SignedMeasure SignedMeasure::uniform(int universe) {
  if (universe <= 0) throw StructuralError("uniform measure needs a nonempty universe");
  SignedMeasure m(universe);
  for (int z = 0; z < universe; ++z) m.set(z, Rational(1, universe));
  return m;
}

const Rational& SignedMeasure::at(int z) const {
  if (z < 0 || z >= universe()) throw StructuralError("measure index out of range");
  return coefficients_[z];
}

void SignedMeasure::set(int z, Rational value) {
  if (z < 0 || z >= universe()) throw StructuralError("measure index out of range");
  if (carrier_ && !carrier_->contains(z) && value != 0)
    throw StructuralError("assignment outside the measure's carrier");
  coefficients_[z] = std::move(value);
}

Rational SignedMeasure::mass() const {
  Rational total = 0;
  for (const auto& c : coefficients_) total += c;
  return total;
}

bool SignedMeasure::is_zero() const {
  for (const auto& c : coefficients_)
    if (c != 0) return false;
  return true;
}

void SignedMeasure::check_compatible(const SignedMeasure& other) const {
  if (universe() != other.universe()) throw StructuralError("measures over different universes");
  check_same_carrier(carrier_, other.carrier_, "measure arithmetic");
}

SignedMeasure& SignedMeasure::operator+=(const SignedMeasure& other) {
  check_compatible(other);
  for (int z = 0; z < universe(); ++z) coefficients_[z] += other.coefficients_[z];
  return *this;
}

SignedMeasure& SignedMeasure::operator-=(const SignedMeasure& other) {
  check_compatible(other);
  for (int z = 0; z < universe(); ++z) coefficients_[z] -= other.coefficients_[z];
  return *this;
}

SignedMeasure& SignedMeasure::scale(const Rational& a) {
  for (auto& c : coefficients_) c *= a;
  return *this;
}

SignedMeasure SignedMeasure::operator-() const {
  SignedMeasure result = *this;
  result.scale(-1);
  return result;
}

bool SignedMeasure::operator==(const SignedMeasure& other) const {
  if (universe() != other.universe()) return false;
  const bool carriers_match =
      (!carrier_ && !other.carrier_) || (carrier_ && other.carrier_ && *carrier_ == *other.carrier_);
  return carriers_match && coefficients_ == other.coefficients_;
}

Rational tv_norm(const SignedMeasure& mu) {
  Rational total = 0;
  for (int z = 0; z < mu.universe(); ++z) total += rational_abs(mu.at(z));
  return total;
}

PointSet support(const SignedMeasure& mu) {
  PointSet s(mu.universe());
  for (int z = 0; z < mu.universe(); ++z)
    if (mu.at(z) != 0) s.insert(z);
  return s;
}

SignedMeasure restrict(const SignedMeasure& mu, const PointSet& e) {
  if (e.universe() != mu.universe()) throw StructuralError("restrict: set over a different universe");
  if (e.empty()) throw StructuralError("restrict: empty subset");
  SignedMeasure result(mu.universe());
  for (int z = 0; z < mu.universe(); ++z)
    if (e.contains(z)) result.coefficients_[z] = mu.at(z);
  result.carrier_ = e;
  return result;
}

SignedMeasure extend(const SignedMeasure& mu) {
  if (!mu.carrier()) throw StructuralError("extend: measure has no carrier tag");
  SignedMeasure result = mu;
  result.carrier_.reset();
  return result;
}

ProbabilityMeasure::ProbabilityMeasure(SignedMeasure m) : measure_(std::move(m)) {
  for (int z = 0; z < measure_.universe(); ++z)
    if (measure_.at(z) < 0)
      throw StructuralError("probability measure with a negative coefficient");
  if (measure_.mass() != 1) throw StructuralError("probability measure with mass != 1");
}

BoundedFunction::BoundedFunction(int universe) {
  if (universe < 0) throw StructuralError("negative universe size");
  values_.assign(universe, Rational(0));
}

BoundedFunction::BoundedFunction(std::vector<Rational> values) : values_(std::move(values)) {}

BoundedFunction BoundedFunction::one(int universe) {
  BoundedFunction f(universe);
  for (int z = 0; z < universe; ++z) f.values_[z] = 1;
  return f;
}

BoundedFunction BoundedFunction::indicator(const PointSet& e) {
  BoundedFunction f(e.universe());
  for (int z : e.points()) f.values_[z] = 1;
  return f;
}

const Rational& BoundedFunction::at(int z) const {
  if (z < 0 || z >= universe()) throw StructuralError("function index out of range");
  return values_[z];
}

void BoundedFunction::set(int z, Rational value) {
  if (z < 0 || z >= universe()) throw StructuralError("function index out of range");
  if (carrier_ && !carrier_->contains(z) && value != 0)
    throw StructuralError("assignment outside the function's carrier");
  values_[z] = std::move(value);
}

bool BoundedFunction::operator==(const BoundedFunction& other) const {
  const bool carriers_match =
      (!carrier_ && !other.carrier_) || (carrier_ && other.carrier_ && *carrier_ == *other.carrier_);
  return carriers_match && values_ == other.values_;
}

BoundedFunction restrict(const BoundedFunction& f, const PointSet& e) {
  if (e.universe() != f.universe()) throw StructuralError("restrict: set over a different universe");
  if (e.empty()) throw StructuralError("restrict: empty subset");
  BoundedFunction result(f.universe());
  for (int z = 0; z < f.universe(); ++z)
    if (e.contains(z)) result.values_[z] = f.at(z);
  result.carrier_ = e;
  return result;
}

BoundedFunction extend(const BoundedFunction& f) {
  if (!f.carrier()) throw StructuralError("extend: function has no carrier tag");
  BoundedFunction result = f;
  result.carrier_.reset();
  return result;
}

Rational evaluate(const BoundedFunction& f, const SignedMeasure& mu) {
  if (f.universe() != mu.universe())
    throw StructuralError("evaluate: function and measure over different universes");
  check_same_carrier(f.carrier(), mu.carrier(), "evaluate");
  Rational total = 0;
  for (int z = 0; z < mu.universe(); ++z) total += f.at(z) * mu.at(z);
  return total;
}

MeanFormulationCheck check_mean_formulations(const SignedMeasure& m) {
  MeanFormulationCheck result;

  bool nonnegative = true;
  int negative_point = -1;
  for (int z = 0; z < m.universe(); ++z) {
    if (m.at(z) < 0) {
      nonnegative = false;
      negative_point = z;
      break;
    }
  }
  const Rational total = m.mass();
  result.positive_unit_mass = nonnegative && total == 1;
  result.norm_one_mass_one = tv_norm(m) == 1 && total == 1;

  // Formulation (3) over all functions reduces to the constant-one function
  // and the point indicators; see the declaration comment.
  const BoundedFunction one = BoundedFunction::one(m.universe());
  if (total != 1) {
    result.within_function_bounds = false;
    result.violating_function = one;
  } else if (!nonnegative) {
    result.within_function_bounds = false;
    result.violating_function =
        BoundedFunction::indicator(PointSet(m.universe(), {negative_point}));
  } else {
    result.within_function_bounds = true;
  }
  return result;
}

}  // namespace shg
