#include <arm_neon.h>

#include "blochgeom/kernels.hpp"

namespace blochgeom::kernels::detail {

void project_qubits_neon(const QubitBatch& in, Vec3Batch out, std::span<double> norm) {
  const std::size_t n = in.size();
  const float64x2_t two = vdupq_n_f64(2.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t ar = vld1q_f64(in.alpha_re.data() + i);
    const float64x2_t ai = vld1q_f64(in.alpha_im.data() + i);
    const float64x2_t br = vld1q_f64(in.beta_re.data() + i);
    const float64x2_t bi = vld1q_f64(in.beta_im.data() + i);
    const float64x2_t re = vaddq_f64(vmulq_f64(ar, br), vmulq_f64(ai, bi));
    const float64x2_t im = vsubq_f64(vmulq_f64(ar, bi), vmulq_f64(ai, br));
    const float64x2_t x = vmulq_f64(two, re);
    const float64x2_t y = vmulq_f64(two, im);
    const float64x2_t pa = vaddq_f64(vmulq_f64(ar, ar), vmulq_f64(ai, ai));
    const float64x2_t pb = vaddq_f64(vmulq_f64(br, br), vmulq_f64(bi, bi));
    const float64x2_t z = vsubq_f64(pa, pb);
    const float64x2_t sq =
        vaddq_f64(vaddq_f64(vmulq_f64(x, x), vmulq_f64(y, y)), vmulq_f64(z, z));
    vst1q_f64(out.x.data() + i, x);
    vst1q_f64(out.y.data() + i, y);
    vst1q_f64(out.z.data() + i, z);
    vst1q_f64(norm.data() + i, vsqrtq_f64(sq));
  }
  project_qubits_scalar(in, out, norm, i);
}

void rotate_vectors_neon(std::span<const double, 9> r, ConstVec3Batch in, Vec3Batch out) {
  const std::size_t n = in.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(in.x.data() + i);
    const float64x2_t y = vld1q_f64(in.y.data() + i);
    const float64x2_t z = vld1q_f64(in.z.data() + i);
    for (int row = 0; row < 3; ++row) {
      const float64x2_t v = vaddq_f64(
          vaddq_f64(vmulq_n_f64(x, r[3 * row]), vmulq_n_f64(y, r[3 * row + 1])),
          vmulq_n_f64(z, r[3 * row + 2]));
      double* dst = row == 0 ? out.x.data() : row == 1 ? out.y.data() : out.z.data();
      vst1q_f64(dst + i, v);
    }
  }
  rotate_vectors_scalar(r, in, out, i);
}

}  // namespace blochgeom::kernels::detail
