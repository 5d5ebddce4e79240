#pragma once

// Batched inner loops over many qubit states / Bloch vectors, stored as
// structure-of-arrays. Each kernel has a scalar reference and SIMD
// variants; the variant is chosen once at runtime from CPU features and
// can be pinned with the BLOCHGEOM_ISA environment variable
// ("scalar", "avx2", "neon"). All variants use the same operation order
// without fused multiply-add, so results match the scalar path exactly.

#include <cstddef>
#include <span>
#include <string_view>

namespace blochgeom::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// Variants compiled into this build and supported by the running CPU.
bool isa_available(Isa isa);

/// Variant used by the dispatching entry points.
Isa active_isa();

/// Qubit amplitudes alpha|0> + beta|1>, split into real/imaginary arrays.
struct QubitBatch {
  std::span<const double> alpha_re, alpha_im, beta_re, beta_im;
  std::size_t size() const noexcept { return alpha_re.size(); }
};

struct Vec3Batch {
  std::span<double> x, y, z;
  std::size_t size() const noexcept { return x.size(); }
};

struct ConstVec3Batch {
  std::span<const double> x, y, z;
  std::size_t size() const noexcept { return x.size(); }
};

/// Pauli expectation values: x = 2 Re(conj(a) b), y = 2 Im(conj(a) b),
/// z = |a|^2 - |b|^2, and norm = |(x, y, z)|.
void project_qubits(const QubitBatch& in, Vec3Batch out, std::span<double> norm);

/// out_i = R * v_i for a row-major 3x3 matrix R. `out` must not alias `in`.
void rotate_vectors(std::span<const double, 9> r, ConstVec3Batch in, Vec3Batch out);

// Per-ISA entry points, exposed for equivalence testing. Calling a variant
// that is not available throws.
void project_qubits(Isa isa, const QubitBatch& in, Vec3Batch out, std::span<double> norm);
void rotate_vectors(Isa isa, std::span<const double, 9> r, ConstVec3Batch in, Vec3Batch out);

namespace detail {
void project_qubits_scalar(const QubitBatch& in, Vec3Batch out, std::span<double> norm,
                           std::size_t begin);
void rotate_vectors_scalar(std::span<const double, 9> r, ConstVec3Batch in, Vec3Batch out,
                           std::size_t begin);
void project_qubits_avx2(const QubitBatch& in, Vec3Batch out, std::span<double> norm);
void rotate_vectors_avx2(std::span<const double, 9> r, ConstVec3Batch in, Vec3Batch out);
void project_qubits_neon(const QubitBatch& in, Vec3Batch out, std::span<double> norm);
void rotate_vectors_neon(std::span<const double, 9> r, ConstVec3Batch in, Vec3Batch out);
}  // namespace detail

}  // namespace blochgeom::kernels
