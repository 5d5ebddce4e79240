#include <cstdlib>
#include <string>

#include "blochgeom/error.hpp"
#include "blochgeom/kernels.hpp"

namespace blochgeom::kernels {

namespace {

void check_sizes(const QubitBatch& in, const Vec3Batch& out, std::span<double> norm) {
  const std::size_t n = in.size();
  if (in.alpha_im.size() != n || in.beta_re.size() != n || in.beta_im.size() != n ||
      out.x.size() != n || out.y.size() != n || out.z.size() != n || norm.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "project_qubits: batch arrays differ in length");
  }
}

void check_sizes(const ConstVec3Batch& in, const Vec3Batch& out) {
  const std::size_t n = in.size();
  if (in.y.size() != n || in.z.size() != n || out.x.size() != n || out.y.size() != n ||
      out.z.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "rotate_vectors: batch arrays differ in length");
  }
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(BLOCHGEOM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(BLOCHGEOM_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa select_isa() {
  if (const char* forced = std::getenv("BLOCHGEOM_ISA")) {
    const std::string name(forced);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (name == to_string(isa) && cpu_supports(isa)) return isa;
    }
  }
  if (cpu_supports(Isa::Avx2)) return Isa::Avx2;
  if (cpu_supports(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

void require(Isa isa) {
  if (!cpu_supports(isa)) {
    throw Error(ErrorKind::Usage, "kernel variant " + std::string(to_string(isa)) + " is not available");
  }
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  return cpu_supports(isa);
}

Isa active_isa() {
  static const Isa isa = select_isa();
  return isa;
}

void project_qubits(Isa isa, const QubitBatch& in, Vec3Batch out, std::span<double> norm) {
  check_sizes(in, out, norm);
  require(isa);
  switch (isa) {
    case Isa::Scalar:
      detail::project_qubits_scalar(in, out, norm, 0);
      return;
    case Isa::Avx2:
#if defined(BLOCHGEOM_HAVE_AVX2)
      detail::project_qubits_avx2(in, out, norm);
#endif
      return;
    case Isa::Neon:
#if defined(BLOCHGEOM_HAVE_NEON)
      detail::project_qubits_neon(in, out, norm);
#endif
      return;
  }
}

void rotate_vectors(Isa isa, std::span<const double, 9> r, ConstVec3Batch in, Vec3Batch out) {
  check_sizes(in, out);
  require(isa);
  switch (isa) {
    case Isa::Scalar:
      detail::rotate_vectors_scalar(r, in, out, 0);
      return;
    case Isa::Avx2:
#if defined(BLOCHGEOM_HAVE_AVX2)
      detail::rotate_vectors_avx2(r, in, out);
#endif
      return;
    case Isa::Neon:
#if defined(BLOCHGEOM_HAVE_NEON)
      detail::rotate_vectors_neon(r, in, out);
#endif
      return;
  }
}

void project_qubits(const QubitBatch& in, Vec3Batch out, std::span<double> norm) {
  project_qubits(active_isa(), in, out, norm);
}

void rotate_vectors(std::span<const double, 9> r, ConstVec3Batch in, Vec3Batch out) {
  rotate_vectors(active_isa(), r, in, out);
}

}  // namespace blochgeom::kernels
