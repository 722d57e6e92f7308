#ifndef SHG_STRUCTURE_HPP
#define SHG_STRUCTURE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shg/point_set.hpp"
#include "shg/rational.hpp"

namespace shg {

/// Dense n*n*n array of nonnegative rationals; entry (x, y, z) is the mass
/// the product of the point masses at x and y places on z. The whole
/// structure of a finite discrete semihypergroup lives in this tensor.
class ConvolutionTensor {
 public:
  explicit ConvolutionTensor(int n);

  int size() const { return n_; }
  const Rational& at(int x, int y, int z) const { return entries_[index(x, y, z)]; }
  void set(int x, int y, int z, Rational value);

 private:
  std::size_t index(int x, int y, int z) const;

  int n_;
  std::vector<Rational> entries_;
};

struct RowSumViolation {
  int x, y;
  Rational sum;
};

struct AssociativityViolation {
  int x, y, z, u;
  Rational lhs, rhs;  // the two association orders evaluated at u
};

/// Result of the structural axiom check. Listings are capped (counts are
/// exact); ok() is the load-bearing bit: empty report == valid structure.
struct AxiomReport {
  std::vector<RowSumViolation> row_sums;
  std::vector<AssociativityViolation> associativity;
  std::uint64_t row_sum_violations = 0;
  std::uint64_t associativity_violations = 0;

  bool ok() const { return row_sum_violations == 0 && associativity_violations == 0; }
};

/// Finite discrete semihypergroup candidate: a point count, optional point
/// names and the convolution tensor. Instances are immutable; nothing is
/// validated at construction so that the axiom verifier can report on
/// arbitrary tensors. Builders and the file reader emit validated ones.
///
/// In the discrete topology the two continuity axioms of the definition
/// (continuity of convolution and of the support map) hold for free, so
/// validity reduces to exact row normalization plus associativity.
class FiniteSemihypergroup {
 public:
  explicit FiniteSemihypergroup(ConvolutionTensor tensor, std::vector<std::string> names = {});

  int size() const { return tensor_.size(); }
  const ConvolutionTensor& tensor() const { return tensor_; }
  const Rational& coeff(int x, int y, int z) const;

  /// Empty, or exactly one label per point.
  const std::vector<std::string>& names() const { return names_; }

  /// supp(p_x * p_y), precomputed.
  const PointSet& product_support(int x, int y) const;

 private:
  ConvolutionTensor tensor_;
  std::vector<std::string> names_;
  std::vector<PointSet> supports_;
};

/// Identity point and involution turning a semihypergroup into a hypergroup
/// candidate; validated by verify_hypergroup.
struct HypergroupStructure {
  int identity = 0;
  std::vector<int> involution;
};

struct HypergroupReport {
  std::vector<int> identity_violations;               // x with p_x*p_e != p_x or p_e*p_x != p_x
  std::vector<int> involution_violations;             // x with inv(inv(x)) != x
  std::vector<std::pair<int, int>> inverse_violations;     // (x, y) breaking the identity-support law
  std::vector<std::array<int, 3>> antihom_violations;      // (x, y, z) breaking tensor anti-symmetry
  bool ok() const {
    return identity_violations.empty() && involution_violations.empty() &&
           inverse_violations.empty() && antihom_violations.empty();
  }
};

/// Checks exact row normalization and associativity of both association
/// orders on every quadruple. At most max_recorded violations of each kind
/// are listed; the counters are always exact.
AxiomReport verify_axioms(const FiniteSemihypergroup& k, std::size_t max_recorded = 4096);

/// The unique two-sided identity point, if one exists.
std::optional<int> detect_identity(const FiniteSemihypergroup& k);

/// Checks the hypergroup axioms for the supplied identity and involution:
/// identity law, involution of order two, the "identity lies in a product
/// support exactly for inverse pairs" law, and tensor anti-symmetry under
/// the involution. Assumes verify_axioms(k) already passed.
HypergroupReport verify_hypergroup(const FiniteSemihypergroup& k, int identity,
                                   const std::vector<int>& involution);

/// Detects identity and searches all involutions for one passing
/// verify_hypergroup. The permutation search is exhaustive and therefore
/// limited to n <= 8; above that callers must supply the involution.
std::optional<HypergroupStructure> find_hypergroup_structure(const FiniteSemihypergroup& k);

/// Union of product supports over A x B.
PointSet set_convolution(const FiniteSemihypergroup& k, const PointSet& a, const PointSet& b);

enum class Side { left, right };
enum class InverseMode { weak, full };

/// Inverse sets of a point against a target set E:
///   left/weak   {y : (p_x*p_y)(E) > 0}
///   left/full   {y : (p_x*p_y)(E) = 1}
///   right/weak  {y : (p_y*p_x)(E) > 0}
///   right/full  {y : (p_y*p_x)(E) = 1}
/// The full set is always contained in the weak one.
PointSet inverse_set(const FiniteSemihypergroup& k, Side side, InverseMode mode, int x,
                     const PointSet& e);

/// E is Type L when the weak and full left inverse sets of E agree for
/// every x in E; Type R is the right-sided analogue.
bool is_type_l(const FiniteSemihypergroup& k, const PointSet& e);
bool is_type_r(const FiniteSemihypergroup& k, const PointSet& e);

/// {x : supp(p_x*p_y) is a singleton for every y} and the mirror image.
PointSet right_centre(const FiniteSemihypergroup& k);
PointSet left_centre(const FiniteSemihypergroup& k);

bool is_sub_semihypergroup(const FiniteSemihypergroup& k, const PointSet& h);
bool is_sub_hypergroup(const FiniteSemihypergroup& k, const HypergroupStructure& hs,
                       const PointSet& h);

struct SubSemihypergroup {
  PointSet points;
  /// Set when a hypergroup structure was supplied to the enumeration:
  /// true iff the subset is also closed under the involution.
  std::optional<bool> sub_hypergroup;
};

struct EnumerationOptions {
  std::optional<int> max_size;  // only subsets up to this cardinality
  std::optional<HypergroupStructure> hypergroup;
  int cap = 20;  // refuse exhaustive enumeration above this point count
};

/// All nonempty subsets closed under set convolution, in increasing order
/// of their membership mask. Exhaustive over 2^n subsets; throws
/// CapExceededError for n beyond the cap, in which case
/// filter_sub_semihypergroups on explicit candidates is the way out.
std::vector<SubSemihypergroup> enumerate_sub_semihypergroups(const FiniteSemihypergroup& k,
                                                             const EnumerationOptions& opts = {});

/// The subset of the supplied candidates that are sub-semihypergroups.
std::vector<SubSemihypergroup> filter_sub_semihypergroups(
    const FiniteSemihypergroup& k, const std::vector<PointSet>& candidates,
    const std::optional<HypergroupStructure>& hs = std::nullopt);

/// Standalone structure on a convolution-closed subset: points reindexed to
/// 0..|H|-1, tensor entries copied. Closure makes every restricted row a
/// probability measure again, so the result is a valid structure whenever
/// the parent is.
FiniteSemihypergroup restrict_structure(const FiniteSemihypergroup& k, const PointSet& h);

}  // namespace shg

#endif  // SHG_STRUCTURE_HPP
