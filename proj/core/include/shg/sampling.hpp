#ifndef SHG_SAMPLING_HPP
#define SHG_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "shg/measure.hpp"
#include "shg/structure.hpp"

namespace shg {

enum class MeasureConstraint { probability, mass_zero };

/// Deterministic seeded sampling of rational measures with denominators
/// bounded by 64. probability: points of the simplex. mass_zero: signed
/// vectors with total mass exactly 0 and total variation at most 2.
std::vector<SignedMeasure> sample_measures(const FiniteSemihypergroup& k, int count,
                                           std::uint64_t seed, MeasureConstraint constraint);

struct SampledStructure {
  std::string kind;
  FiniteSemihypergroup structure;
};

/// Deterministic seeded stream of valid structures with 1 <= n <= 6, mixing
/// several families: stochastically perturbed right/left-constant tensors
/// built from idempotent row matrices, rejection-sampled associative
/// multiplication tables, two-point hypergroups, cyclic orbit hypergroups,
/// semilattice chains and direct products. Every emitted structure has been
/// revalidated against the full axiom check.
std::vector<SampledStructure> sample_structures(int count, std::uint64_t seed);

}  // namespace shg

#endif  // SHG_SAMPLING_HPP
