#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Vector kernels used by the hot loops (leapfrog updates, distance and Gibbs
// norms, BFGS operator products, Gaussian-family gradients). A scalar
// reference implementation always exists; AVX2 (x86-64) and NEON (aarch64)
// variants are selected once at runtime and must agree with the scalar
// kernels up to floating-point reassociation.

namespace atlas::simd {

enum class Isa { scalar, avx2, neon };

struct Kernels {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sumsq)(const double*, std::size_t);
  double (*dist_sq)(const double*, const double*, std::size_t);
  double (*wsumsq)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*axpy_w)(double, const double*, const double*, double*, std::size_t);
  void (*scal)(double, double*, std::size_t);
  void (*cscal)(double, const double*, double*, std::size_t);
  void (*cmul_w)(double, const double*, const double*, double*, std::size_t);
};

const Kernels& scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2_kernels();
#endif
#if defined(__aarch64__)
const Kernels& neon_kernels();
#endif

// Active table; chosen on first use from CPU features (ATLAS_SIMD=scalar|avx2|neon|auto overrides).
const Kernels& active();
Isa active_isa();
std::string_view isa_name(Isa isa);
void force_isa(Isa isa);  // for equivalence tests

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline double sumsq(std::span<const double> a) { return active().sumsq(a.data(), a.size()); }
inline double dist_sq(std::span<const double> a, std::span<const double> b) {
  return active().dist_sq(a.data(), b.data(), a.size());
}
/// sum_i w_i * x_i^2
inline double wsumsq(std::span<const double> w, std::span<const double> x) {
  return active().wsumsq(w.data(), x.data(), x.size());
}
/// y += a * x
inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}
/// y += a * x_i * w_i
inline void axpy_w(double a, std::span<const double> x, std::span<const double> w,
                   std::span<double> y) {
  active().axpy_w(a, x.data(), w.data(), y.data(), x.size());
}
/// x *= a
inline void scal(double a, std::span<double> x) { active().scal(a, x.data(), x.size()); }
/// out = a * x
inline void cscal(double a, std::span<const double> x, std::span<double> out) {
  active().cscal(a, x.data(), out.data(), x.size());
}
/// out = a * x_i * w_i
inline void cmul_w(double a, std::span<const double> x, std::span<const double> w,
                   std::span<double> out) {
  active().cmul_w(a, x.data(), w.data(), out.data(), x.size());
}

}  // namespace atlas::simd
