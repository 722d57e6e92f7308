#ifndef SHG_AMENABILITY_HPP
#define SHG_AMENABILITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shg/convolution.hpp"
#include "shg/measure.hpp"
#include "shg/structure.hpp"

namespace shg {

/// A probability measure m witnessing translation invariance, together
/// with its exact residuals. For whole-structure certificates the
/// residuals cover every point; for an H-scoped certificate they cover
/// the points of H and mass_on_scope records m(H). All residuals are
/// exactly zero by construction (asserted when the certificate is built).
struct MeanCertificate {
  ProbabilityMeasure mean;
  std::optional<PointSet> scope;
  std::vector<std::pair<int, Rational>> residuals;
  std::optional<Rational> mass_on_scope;
};

/// Minimum over the probability simplex of the worst-case translation
/// defect max_x tv_norm(p_x*m - m). Zero exactly when an invariant mean
/// exists; the minimizer then is one.
struct DefectReport {
  Rational defect;
  ProbabilityMeasure minimizer;
};

/// Exact minimum of tv_norm(mu*nu) over probability nu, with a minimizer.
struct ConvolutionInfimum {
  Rational value;
  ProbabilityMeasure minimizer;
};

/// A measure whose convolution norm infimum exceeds the absolute mass,
/// refuting the infimum characterization of amenability.
struct InfimumGapWitness {
  SignedMeasure witness;
  std::string origin;
  Rational infimum;
  Rational mass_abs;   // |mu(K)|
  Rational gap;        // infimum - mass_abs, > 0
  ProbabilityMeasure minimizer;
};

/// Outcome of the infimum-characterization check. The default witness
/// family is {p_x*p_y - p_y} and {p_x - p_y}, then seeded mass-zero
/// samples, then an adaptive chain that right-convolves exact equalizers;
/// the chain either exposes a strict gap or terminates in an invariant
/// mean, so on finite structures `refuted` is decisive, not heuristic.
struct InfimumCheckReport {
  bool refuted = false;
  std::optional<InfimumGapWitness> witness;
  int witnesses_checked = 0;
  /// The invariant mean the adaptive chain terminated in, when it did.
  std::optional<ProbabilityMeasure> constructed_mean;
};

/// Feasibility of {m in P(K) : p_x*m = m for all x}. Invariance under all
/// probability measures reduces to the n point masses by bilinearity.
std::optional<MeanCertificate> find_tlim(const FiniteSemihypergroup& k);

/// Point-mass-only invariance. On a finite structure the system is the
/// same as find_tlim's; kept separate so reports can state the collapse.
std::optional<MeanCertificate> find_lim(const FiniteSemihypergroup& k);

DefectReport minimize_defect(const FiniteSemihypergroup& k);

/// Always at least |mu(K)|.
ConvolutionInfimum inf_conv_norm(const FiniteSemihypergroup& k, const SignedMeasure& mu);

InfimumCheckReport check_condition3(
    const FiniteSemihypergroup& k,
    const std::optional<std::vector<SignedMeasure>>& witnesses = std::nullopt);

/// Feasibility of {nu in P(K) : p_z*nu identical for all z}; a solution
/// makes every right dual translate by nu a constant function.
std::optional<ProbabilityMeasure> find_stationary(const FiniteSemihypergroup& k);

enum class MassMode { full_mass, max_mass };

/// Means invariant under translation by the points of a sub-semihypergroup
/// H. full_mass demands m(H) = 1; max_mass maximizes m(H) and certifies
/// success iff the exact optimum is positive.
std::optional<MeanCertificate> find_h_invariant_mean(const FiniteSemihypergroup& k,
                                                     const PointSet& h, MassMode mode);

/// Exact data of the restriction-convolution comparison on a
/// convolution-closed subset H:
///   gap    = tv_norm( (mu*nu)|H - mu|H *H nu|H )
///   bound1 =  sum_y |nu|({y}) |mu|(H y~ inter H^c)
///           + sum_x |mu|({x}) |nu|(x~ H inter H^c)
///   bound2 =  sum_{y in H} |mu|({y}) |nu|(y~ H inter H^c),
/// bound2 being defined when supp(mu) lies inside H. gap <= bound1 always;
/// gap <= bound2 <= bound1 when defined; gap = 0 when both supports lie in
/// H, and also when a hypergroup structure is supplied, H is closed under
/// its involution and supp(mu) lies in H.
struct GapReport {
  Rational gap;
  Rational bound1;
  std::optional<Rational> bound2;
  bool mu_supported_in_h = false;
  bool nu_supported_in_h = false;
  /// Hypergroup case applies: involution-closed H with mu supported in H.
  bool hypergroup_case = false;
  /// gap == 0 is forced (both supports in H, or the hypergroup case).
  bool equality_forced = false;

  bool bounds_hold() const {
    if (gap > bound1) return false;
    if (bound2 && gap > *bound2) return false;
    if (bound2 && *bound2 > bound1) return false;
    if (equality_forced && gap != 0) return false;
    return true;
  }
};

GapReport restriction_gap(const FiniteSemihypergroup& k, const PointSet& h,
                          const SignedMeasure& mu, const SignedMeasure& nu,
                          const std::optional<HypergroupStructure>& hs = std::nullopt);

/// The four decidable characterizations of topological left amenability,
/// computed independently and compared: existence of an invariant mean,
/// zero minimal defect, no infimum gap, existence of a stationary measure.
/// The predual-algebra characterization is not computed independently; it
/// coincides with invariant-mean existence through the multiplicative
/// functional reduction and is reported as such.
struct AmenabilityEquivalenceReport {
  std::optional<MeanCertificate> tlim;
  std::optional<MeanCertificate> lim;
  DefectReport defect;
  InfimumCheckReport infimum_check;
  std::optional<ProbabilityMeasure> stationary;
  bool amenable = false;    // the common verdict when consistent
  bool consistent = false;  // all four outcomes agree
};

AmenabilityEquivalenceReport check_amenability_equivalence(const FiniteSemihypergroup& k);

/// Sub-structure invariance: (a) the restricted structure on H admits an
/// invariant mean of its own; (b) the parent admits an H-invariant mean
/// with full mass on H; (c) the parent admits an H-invariant mean with
/// positive mass on H. (a) and (b) are always equivalent; (c) joins the
/// equivalence when H is of Type L, and is only asserted then.
struct SubInvarianceReport {
  PointSet h;
  bool restricted_tlim = false;
  std::optional<MeanCertificate> restricted_certificate;
  bool full_mass_mean = false;
  std::optional<MeanCertificate> full_mass_certificate;
  bool type_l = false;
  Rational max_mass_optimum;
  std::optional<MeanCertificate> max_mass_certificate;
  bool consistent = false;
};

SubInvarianceReport check_sub_invariance(const FiniteSemihypergroup& k, const PointSet& h);

}  // namespace shg

#endif  // SHG_AMENABILITY_HPP
