#pragma once

#include <array>
#include <string>

#include "curvlab/curvature.hpp"
#include "curvlab/frame.hpp"
#include "curvlab/metric.hpp"

namespace curvlab {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

/// Frame components R(e_a, e_b, e_c, e_d) of the lowered Riemann tensor.
Tensor4 frame_riemann(const CurvatureBundle& c, const Mat4& frame_vectors);

/// The curvature operator block on self-dual 2-forms (W+ + R/12 I) in the
/// oriented frame, with frame leg 0 the first coframe leg:
///   A_ij = 1/2 [ R_0i0j + 1/2 eps_jkl R_0ikl + 1/2 eps_imn R_mn0j + 1/4 eps_imn eps_jkl R_mnkl ].
/// Legs are taken in the metric's orientation-label order; throws ContractViolation
/// when the frame Gram matrix deviates from Id by more than 1e-8 or when the
/// coframe orientation disagrees with the metric's orientation metadata.
Mat3 weyl_plus_matrix(const MetricField& metric, const ChartPoint& p, const FrameField& frame);
Mat3 weyl_plus_matrix(const MetricField& metric, const CurvatureBundle& c, const ChartPoint& p,
                      const FrameField& frame);

struct WeylSpectrum {
  Vec3 eigenvalues{};      // ascending
  bool pattern = false;    // multiset {l, l, -2l}
  double pattern_residual = 0.0;
  bool vanishes = false;   // W+ = 0: Derdzinski's theorem does not apply
  double trace = 0.0;
  double norm2 = 0.0;      // sum of squared eigenvalues
};

/// Eigenvalues of a symmetric 3x3 matrix in ascending order (closed form).
Vec3 symmetric_eigenvalues(const Mat3& a);

/// Degenerate-pair detector: the pair residual is |l_a - l_b| for the closer
/// adjacent pair together with |l_c + l_a + l_b| for the remaining one, divided
/// by max(1, |l_c|); the pattern holds when it is <= 1e-7. `scale` sets the
/// vanishing threshold (max |l| <= 1e-9 * scale).
WeylSpectrum weyl_plus_spectrum(const Mat3& a, double scale = 1.0);

double frobenius2(const Mat3& a);

}  // namespace curvlab
