#include <cmath>

#include "blochgeom/kernels.hpp"

namespace blochgeom::kernels::detail {

void project_qubits_scalar(const QubitBatch& in, Vec3Batch out, std::span<double> norm,
                           std::size_t begin) {
  for (std::size_t i = begin; i < in.size(); ++i) {
    const double ar = in.alpha_re[i];
    const double ai = in.alpha_im[i];
    const double br = in.beta_re[i];
    const double bi = in.beta_im[i];
    // conj(a) * b = (ar*br + ai*bi) + i (ar*bi - ai*br)
    const double re = ar * br + ai * bi;
    const double im = ar * bi - ai * br;
    const double x = 2.0 * re;
    const double y = 2.0 * im;
    const double z = (ar * ar + ai * ai) - (br * br + bi * bi);
    out.x[i] = x;
    out.y[i] = y;
    out.z[i] = z;
    norm[i] = std::sqrt(x * x + y * y + z * z);
  }
}

void rotate_vectors_scalar(std::span<const double, 9> r, ConstVec3Batch in, Vec3Batch out,
                           std::size_t begin) {
  for (std::size_t i = begin; i < in.size(); ++i) {
    const double x = in.x[i];
    const double y = in.y[i];
    const double z = in.z[i];
    out.x[i] = r[0] * x + r[1] * y + r[2] * z;
    out.y[i] = r[3] * x + r[4] * y + r[5] * z;
    out.z[i] = r[6] * x + r[7] * y + r[8] * z;
  }
}

}  // namespace blochgeom::kernels::detail
