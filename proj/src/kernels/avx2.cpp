#include <immintrin.h>

#include "blochgeom/kernels.hpp"

namespace blochgeom::kernels::detail {

void project_qubits_avx2(const QubitBatch& in, Vec3Batch out, std::span<double> norm) {
  const std::size_t n = in.size();
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ar = _mm256_loadu_pd(in.alpha_re.data() + i);
    const __m256d ai = _mm256_loadu_pd(in.alpha_im.data() + i);
    const __m256d br = _mm256_loadu_pd(in.beta_re.data() + i);
    const __m256d bi = _mm256_loadu_pd(in.beta_im.data() + i);
    const __m256d re = _mm256_add_pd(_mm256_mul_pd(ar, br), _mm256_mul_pd(ai, bi));
    const __m256d im = _mm256_sub_pd(_mm256_mul_pd(ar, bi), _mm256_mul_pd(ai, br));
    const __m256d x = _mm256_mul_pd(two, re);
    const __m256d y = _mm256_mul_pd(two, im);
    const __m256d pa = _mm256_add_pd(_mm256_mul_pd(ar, ar), _mm256_mul_pd(ai, ai));
    const __m256d pb = _mm256_add_pd(_mm256_mul_pd(br, br), _mm256_mul_pd(bi, bi));
    const __m256d z = _mm256_sub_pd(pa, pb);
    const __m256d sq = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y)),
                                     _mm256_mul_pd(z, z));
    _mm256_storeu_pd(out.x.data() + i, x);
    _mm256_storeu_pd(out.y.data() + i, y);
    _mm256_storeu_pd(out.z.data() + i, z);
    _mm256_storeu_pd(norm.data() + i, _mm256_sqrt_pd(sq));
  }
  project_qubits_scalar(in, out, norm, i);
}

void rotate_vectors_avx2(std::span<const double, 9> r, ConstVec3Batch in, Vec3Batch out) {
  const std::size_t n = in.size();
  __m256d m[9];
  for (int k = 0; k < 9; ++k) m[k] = _mm256_set1_pd(r[k]);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(in.x.data() + i);
    const __m256d y = _mm256_loadu_pd(in.y.data() + i);
    const __m256d z = _mm256_loadu_pd(in.z.data() + i);
    for (int row = 0; row < 3; ++row) {
      const __m256d v = _mm256_add_pd(
          _mm256_add_pd(_mm256_mul_pd(m[3 * row], x), _mm256_mul_pd(m[3 * row + 1], y)),
          _mm256_mul_pd(m[3 * row + 2], z));
      double* dst = row == 0 ? out.x.data() : row == 1 ? out.y.data() : out.z.data();
      _mm256_storeu_pd(dst + i, v);
    }
  }
  rotate_vectors_scalar(r, in, out, i);
}

}  // namespace blochgeom::kernels::detail
