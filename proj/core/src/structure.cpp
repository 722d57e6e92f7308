#include "shg/structure.hpp"

#include <algorithm>
#include <numeric>

namespace shg {

ConvolutionTensor::ConvolutionTensor(int n) : n_(n) {
  if (n <= 0) throw StructuralError("point count must be positive");
  entries_.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
}

std::size_t ConvolutionTensor::index(int x, int y, int z) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_ || z < 0 || z >= n_)
    throw StructuralError("tensor index out of range");
  return (static_cast<std::size_t>(x) * n_ + y) * n_ + z;
}

void ConvolutionTensor::set(int x, int y, int z, Rational value) {
  entries_[index(x, y, z)] = std::move(value);
}

FiniteSemihypergroup::FiniteSemihypergroup(ConvolutionTensor tensor, std::vector<std::string> names)
    : tensor_(std::move(tensor)), names_(std::move(names)) {
  const int n = tensor_.size();
  if (!names_.empty() && static_cast<int>(names_.size()) != n)
    throw StructuralError("expected one name per point");
  supports_.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      PointSet s(n);
      for (int z = 0; z < n; ++z)
        if (tensor_.at(x, y, z) != 0) s.insert(z);
      supports_.push_back(std::move(s));
    }
  }
}

const Rational& FiniteSemihypergroup::coeff(int x, int y, int z) const {
  return tensor_.at(x, y, z);
}

const PointSet& FiniteSemihypergroup::product_support(int x, int y) const {
  const int n = size();
  if (x < 0 || x >= n || y < 0 || y >= n) throw StructuralError("point index out of range");
  return supports_[static_cast<std::size_t>(x) * n + y];
}

AxiomReport verify_axioms(const FiniteSemihypergroup& k, std::size_t max_recorded) {
  const int n = k.size();
  AxiomReport report;

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Rational sum = 0;
      bool negative = false;
      for (int z = 0; z < n; ++z) {
        const Rational& c = k.coeff(x, y, z);
        if (c < 0) negative = true;
        sum += c;
      }
      if (sum != 1 || negative) {
        ++report.row_sum_violations;
        if (report.row_sums.size() < max_recorded) report.row_sums.push_back({x, y, sum});
      }
    }
  }

  // Both association orders of (p_x * p_y) * p_z, compared entrywise.
  std::vector<Rational> lhs(n), rhs(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        std::fill(lhs.begin(), lhs.end(), Rational(0));
        std::fill(rhs.begin(), rhs.end(), Rational(0));
        for (int w = 0; w < n; ++w) {
          const Rational& a = k.coeff(x, y, w);
          if (a != 0)
            for (int u = 0; u < n; ++u) {
              const Rational& b = k.coeff(w, z, u);
              if (b != 0) lhs[u] += a * b;
            }
          const Rational& c = k.coeff(y, z, w);
          if (c != 0)
            for (int u = 0; u < n; ++u) {
              const Rational& d = k.coeff(x, w, u);
              if (d != 0) rhs[u] += c * d;
            }
        }
        for (int u = 0; u < n; ++u) {
          if (lhs[u] != rhs[u]) {
            ++report.associativity_violations;
            if (report.associativity.size() < max_recorded)
              report.associativity.push_back({x, y, z, u, lhs[u], rhs[u]});
          }
        }
      }
    }
  }
  return report;
}

namespace {

bool is_identity_point(const FiniteSemihypergroup& k, int e) {
  const int n = k.size();
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      const Rational expected = x == z ? 1 : 0;
      if (k.coeff(x, e, z) != expected || k.coeff(e, x, z) != expected) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<int> detect_identity(const FiniteSemihypergroup& k) {
  for (int e = 0; e < k.size(); ++e)
    if (is_identity_point(k, e)) return e;  // an identity is unique, stop at the first
  return std::nullopt;
}

HypergroupReport verify_hypergroup(const FiniteSemihypergroup& k, int identity,
                                   const std::vector<int>& involution) {
  const int n = k.size();
  if (identity < 0 || identity >= n) throw StructuralError("identity point out of range");
  if (static_cast<int>(involution.size()) != n)
    throw StructuralError("involution must assign every point");
  std::vector<bool> seen(n, false);
  for (int x : involution) {
    if (x < 0 || x >= n || seen[x]) throw StructuralError("involution is not a permutation");
    seen[x] = true;
  }

  HypergroupReport report;
  for (int x = 0; x < n; ++x)
    if (involution[involution[x]] != x) report.involution_violations.push_back(x);

  for (int x = 0; x < n; ++x)
    if (!is_identity_point(k, identity) ||
        [&] {
          for (int z = 0; z < n; ++z) {
            const Rational expected = x == z ? 1 : 0;
            if (k.coeff(x, identity, z) != expected || k.coeff(identity, x, z) != expected)
              return true;
          }
          return false;
        }())
      report.identity_violations.push_back(x);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const bool has_identity = k.product_support(x, y).contains(identity);
      const bool inverse_pair = x == involution[y];
      if (has_identity != inverse_pair) report.inverse_violations.push_back({x, y});
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (k.coeff(x, y, z) != k.coeff(involution[y], involution[x], involution[z])) {
          report.antihom_violations.push_back({x, y, z});
        }

  return report;
}

std::optional<HypergroupStructure> find_hypergroup_structure(const FiniteSemihypergroup& k) {
  const auto e = detect_identity(k);
  if (!e) return std::nullopt;
  const int n = k.size();
  if (n > 8) return std::nullopt;  // exhaustive permutation search only
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[*e] != *e) continue;
    bool order_two = true;
    for (int x = 0; x < n && order_two; ++x) order_two = perm[perm[x]] == x;
    if (!order_two) continue;
    if (verify_hypergroup(k, *e, perm).ok()) return HypergroupStructure{*e, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

PointSet set_convolution(const FiniteSemihypergroup& k, const PointSet& a, const PointSet& b) {
  if (a.universe() != k.size() || b.universe() != k.size())
    throw StructuralError("point set over a different universe");
  PointSet result(k.size());
  for (int x : a.points())
    for (int y : b.points()) result = result.unite(k.product_support(x, y));
  return result;
}

PointSet inverse_set(const FiniteSemihypergroup& k, Side side, InverseMode mode, int x,
                     const PointSet& e) {
  const int n = k.size();
  if (x < 0 || x >= n) throw StructuralError("point index out of range");
  if (e.universe() != n) throw StructuralError("point set over a different universe");
  PointSet result(n);
  for (int y = 0; y < n; ++y) {
    Rational mass = 0;
    for (int z : e.points()) mass += side == Side::left ? k.coeff(x, y, z) : k.coeff(y, x, z);
    const bool in = mode == InverseMode::weak ? mass > 0 : mass == 1;
    if (in) result.insert(y);
  }
  return result;
}

bool is_type_l(const FiniteSemihypergroup& k, const PointSet& e) {
  for (int x : e.points())
    if (!(inverse_set(k, Side::left, InverseMode::weak, x, e) ==
          inverse_set(k, Side::left, InverseMode::full, x, e)))
      return false;
  return true;
}

bool is_type_r(const FiniteSemihypergroup& k, const PointSet& e) {
  for (int x : e.points())
    if (!(inverse_set(k, Side::right, InverseMode::weak, x, e) ==
          inverse_set(k, Side::right, InverseMode::full, x, e)))
      return false;
  return true;
}

PointSet right_centre(const FiniteSemihypergroup& k) {
  const int n = k.size();
  PointSet result(n);
  for (int x = 0; x < n; ++x) {
    bool all_singleton = true;
    for (int y = 0; y < n && all_singleton; ++y)
      all_singleton = k.product_support(x, y).size() == 1;
    if (all_singleton) result.insert(x);
  }
  return result;
}

PointSet left_centre(const FiniteSemihypergroup& k) {
  const int n = k.size();
  PointSet result(n);
  for (int x = 0; x < n; ++x) {
    bool all_singleton = true;
    for (int y = 0; y < n && all_singleton; ++y)
      all_singleton = k.product_support(y, x).size() == 1;
    if (all_singleton) result.insert(x);
  }
  return result;
}

bool is_sub_semihypergroup(const FiniteSemihypergroup& k, const PointSet& h) {
  if (h.universe() != k.size()) throw StructuralError("point set over a different universe");
  if (h.empty()) return false;
  for (int x : h.points())
    for (int y : h.points())
      if (!k.product_support(x, y).is_subset_of(h)) return false;
  return true;
}

bool is_sub_hypergroup(const FiniteSemihypergroup& k, const HypergroupStructure& hs,
                       const PointSet& h) {
  if (!is_sub_semihypergroup(k, h)) return false;
  for (int x : h.points())
    if (!h.contains(hs.involution[x])) return false;
  return true;
}

std::vector<SubSemihypergroup> enumerate_sub_semihypergroups(const FiniteSemihypergroup& k,
                                                             const EnumerationOptions& opts) {
  const int n = k.size();
  if (n > opts.cap)
    throw CapExceededError("sub-structure enumeration over " + std::to_string(n) +
                           " points exceeds the cap of " + std::to_string(opts.cap) +
                           "; pass explicit candidate subsets to filter_sub_semihypergroups");
  std::vector<SubSemihypergroup> result;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    PointSet h(n);
    for (int p = 0; p < n; ++p)
      if ((mask >> p) & 1) h.insert(p);
    if (opts.max_size && h.size() > *opts.max_size) continue;
    if (!is_sub_semihypergroup(k, h)) continue;
    SubSemihypergroup entry{h, std::nullopt};
    if (opts.hypergroup) entry.sub_hypergroup = is_sub_hypergroup(k, *opts.hypergroup, h);
    result.push_back(std::move(entry));
  }
  return result;
}

std::vector<SubSemihypergroup> filter_sub_semihypergroups(
    const FiniteSemihypergroup& k, const std::vector<PointSet>& candidates,
    const std::optional<HypergroupStructure>& hs) {
  std::vector<SubSemihypergroup> result;
  for (const auto& h : candidates) {
    if (!is_sub_semihypergroup(k, h)) continue;
    SubSemihypergroup entry{h, std::nullopt};
    if (hs) entry.sub_hypergroup = is_sub_hypergroup(k, *hs, h);
    result.push_back(std::move(entry));
  }
  return result;
}

FiniteSemihypergroup restrict_structure(const FiniteSemihypergroup& k, const PointSet& h) {
  if (!is_sub_semihypergroup(k, h))
    throw StructuralError("restriction requires a convolution-closed nonempty subset");
  const auto points = h.points();
  const int m = static_cast<int>(points.size());
  ConvolutionTensor tensor(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l) tensor.set(i, j, l, k.coeff(points[i], points[j], points[l]));
  std::vector<std::string> names;
  if (!k.names().empty()) {
    names.reserve(m);
    for (int p : points) names.push_back(k.names()[p]);
  }
  return FiniteSemihypergroup(std::move(tensor), std::move(names));
}

}  // namespace shg
