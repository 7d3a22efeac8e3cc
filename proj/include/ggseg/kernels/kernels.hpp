#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Arithmetic inner loops used by the segmentation, normalization, and
// clustering code. Every kernel exists as a scalar reference implementation
// and, on x86-64, as an AVX2 variant compiled into its own translation unit.
// The front-end functions below dispatch through a table selected at runtime
// from CPU features (overridable via set_backend or the GGSEG_BACKEND
// environment variable). Backends agree to floating-point tolerance, not
// bit-for-bit; the equivalence suite in tests/kernels_test.cpp pins the
// tolerance.

namespace ggseg::kernels {

enum class Backend { scalar, avx2 };

const char* to_string(Backend b);
bool backend_supported(Backend b);
/// Currently dispatched backend. Defaults to the best supported one.
Backend active_backend();
/// Force a backend. Throws ggseg::Error(invalid_argument) if unsupported.
void set_backend(Backend b);

struct MeanVar {
  double mean = 0.0;
  double var = 0.0;
};

/// Two-pass mean and variance; ddof = 0 for population, 1 for sample.
MeanVar mean_var(const double* x, std::ptrdiff_t n, int ddof);

/// In-place x[i] = a * x[i] + b.
void axpb(double* x, std::ptrdiff_t n, double a, double b);

/// acc[i] += (x[i] - c)^2. One k-means (point, centroid-coordinate) pass.
void accum_sq_dist(double* acc, const double* x, std::ptrdiff_t n, double c);

/// d holds k distance columns of length n (column j at d + j*n).
/// labels[i] = argmin_j d[j*n + i], smallest j on ties.
void argmin_columns(const double* d, std::ptrdiff_t n, int k, int* labels);

enum class Objective { paper, original_ggs };

/// Running first and second moments of a T x C sample matrix.
/// Component arrays are stored contiguously so a scan over candidate split
/// positions reads unit-stride: sum_col(j)[t] = sum of column j over rows
/// [0, t), sq_col(p)[t] likewise for the packed product pair p. Pairs are
/// packed upper-triangular row-wise: (0,0),(0,1),..,(0,C-1),(1,1),..
struct PrefixMoments {
  std::ptrdiff_t count = 0;  // T + 1 entries per component
  int channels = 0;
  std::vector<double> sum;
  std::vector<double> sumsq;

  const double* sum_col(int j) const { return sum.data() + j * count; }
  const double* sq_col(int p) const { return sumsq.data() + p * count; }
  static int pair_index(int channels, int r, int c);
};

/// Build prefix moments from column-major data (T rows, C columns).
/// Center the data first when means are large; the Gaussian terms only
/// depend on within-segment covariance.
PrefixMoments build_prefix(const double* data, std::ptrdiff_t rows, int cols);

/// One summand of the segmentation objective for segment [a, b):
///   -1/2 [ w logdet(R) - lambda tr(R^-1) ]          (paper)
///   -1/2 [ w logdet(R) - lambda tr(S R^-1) ]        (original_ggs)
/// with S the segment covariance, w = b - a, R = S + (lambda/w) I.
/// Returns quiet NaN when R is not numerically positive definite.
double segment_term(const PrefixMoments& pm, std::ptrdiff_t a, std::ptrdiff_t b,
                    double lambda, Objective obj);

struct BestSplit {
  std::ptrdiff_t split = -1;  // -1: no feasible candidate
  double value = 0.0;         // max over s of term(a,s) + term(s,b)
};

/// Scan all s in [a+min_len, b-min_len] and return the argmax of
/// term(a,s) + term(s,b); ties resolve to the smallest s. Candidates whose
/// regularized covariance is not positive definite are skipped. Channels
/// 1..3 use closed-form determinants (vectorized in the AVX2 backend);
/// larger channel counts fall back to the generic Cholesky path.
BestSplit split_scan(const PrefixMoments& pm, std::ptrdiff_t a,
                     std::ptrdiff_t b, std::ptrdiff_t min_len, double lambda,
                     Objective obj);

namespace scalar {
MeanVar mean_var(const double* x, std::ptrdiff_t n, int ddof);
void axpb(double* x, std::ptrdiff_t n, double a, double b);
void accum_sq_dist(double* acc, const double* x, std::ptrdiff_t n, double c);
void argmin_columns(const double* d, std::ptrdiff_t n, int k, int* labels);
double segment_term(const PrefixMoments& pm, std::ptrdiff_t a, std::ptrdiff_t b,
                    double lambda, Objective obj);
BestSplit split_scan(const PrefixMoments& pm, std::ptrdiff_t a,
                     std::ptrdiff_t b, std::ptrdiff_t min_len, double lambda,
                     Objective obj);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define GGSEG_HAVE_AVX2_BACKEND 1
namespace avx2 {
MeanVar mean_var(const double* x, std::ptrdiff_t n, int ddof);
void axpb(double* x, std::ptrdiff_t n, double a, double b);
void accum_sq_dist(double* acc, const double* x, std::ptrdiff_t n, double c);
void argmin_columns(const double* d, std::ptrdiff_t n, int k, int* labels);
BestSplit split_scan(const PrefixMoments& pm, std::ptrdiff_t a,
                     std::ptrdiff_t b, std::ptrdiff_t min_len, double lambda,
                     Objective obj);
/// Vectorized natural log over 4 lanes, exposed for accuracy tests.
void log4(const double in[4], double out[4]);
}  // namespace avx2
#else
#define GGSEG_HAVE_AVX2_BACKEND 0
#endif

}  // namespace ggseg::kernels
