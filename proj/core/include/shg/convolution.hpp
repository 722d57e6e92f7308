#ifndef SHG_CONVOLUTION_HPP
#define SHG_CONVOLUTION_HPP

#include "shg/measure.hpp"
#include "shg/structure.hpp"

namespace shg {

/// The tensor row (x, y) as a probability measure.
ProbabilityMeasure convolve_points(const FiniteSemihypergroup& k, int x, int y);

/// Bilinear extension of the point convolution to signed measures:
/// (mu*nu)({u}) = sum over x, y of mu({x}) nu({y}) c[x][y][u].
/// Both arguments must live on the full universe.
SignedMeasure convolve(const FiniteSemihypergroup& k, const SignedMeasure& mu,
                       const SignedMeasure& nu);

/// (L_x f)(y) = f(x*y) = sum_z c[x][y][z] f(z).
BoundedFunction left_translate_fn(const FiniteSemihypergroup& k, const BoundedFunction& f, int x);

/// (R_y f)(x) = f(x*y); same kernel, fixing the other argument.
BoundedFunction right_translate_fn(const FiniteSemihypergroup& k, const BoundedFunction& f, int y);

/// Function form of the dual-space left translate of f by nu: the g with
/// g(z) = integral of f d(nu * p_z). Pairing g against omega evaluates the
/// translated functional at omega by bilinearity.
BoundedFunction dual_left_translate(const FiniteSemihypergroup& k, const BoundedFunction& f,
                                    const SignedMeasure& nu);

/// Right-sided counterpart: h(z) = integral of f d(p_z * nu).
BoundedFunction dual_right_translate(const FiniteSemihypergroup& k, const BoundedFunction& f,
                                     const SignedMeasure& nu);

/// Convolution inside the restricted structure on a convolution-closed
/// subset H, computed in parent coordinates: both inputs and the result
/// carry the tag H.
SignedMeasure convolve_restricted(const FiniteSemihypergroup& k, const PointSet& h,
                                  const SignedMeasure& mu_h, const SignedMeasure& nu_h);

}  // namespace shg

#endif  // SHG_CONVOLUTION_HPP
