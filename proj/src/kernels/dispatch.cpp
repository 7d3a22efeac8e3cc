#include <cstdlib>
#include <cstring>
#include <string>

#include "ggseg/error.hpp"
#include "ggseg/kernels/kernels.hpp"

namespace ggseg::kernels {

namespace {

struct KernelTable {
  MeanVar (*mean_var)(const double*, std::ptrdiff_t, int);
  void (*axpb)(double*, std::ptrdiff_t, double, double);
  void (*accum_sq_dist)(double*, const double*, std::ptrdiff_t, double);
  void (*argmin_columns)(const double*, std::ptrdiff_t, int, int*);
  BestSplit (*split_scan)(const PrefixMoments&, std::ptrdiff_t, std::ptrdiff_t,
                          std::ptrdiff_t, double, Objective);
};

constexpr KernelTable kScalarTable{
    scalar::mean_var, scalar::axpb, scalar::accum_sq_dist,
    scalar::argmin_columns, scalar::split_scan};

#if GGSEG_HAVE_AVX2_BACKEND
constexpr KernelTable kAvx2Table{
    avx2::mean_var, avx2::axpb, avx2::accum_sq_dist,
    avx2::argmin_columns, avx2::split_scan};
#endif

bool cpu_has_avx2() {
#if GGSEG_HAVE_AVX2_BACKEND
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct Dispatch {
  Backend backend;
  const KernelTable* table;

  Dispatch() {
    backend = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
    if (const char* env = std::getenv("GGSEG_BACKEND")) {
      if (std::strcmp(env, "scalar") == 0) backend = Backend::scalar;
      if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) backend = Backend::avx2;
    }
    apply();
  }

  void apply() {
#if GGSEG_HAVE_AVX2_BACKEND
    table = backend == Backend::avx2 ? &kAvx2Table : &kScalarTable;
#else
    table = &kScalarTable;
#endif
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

const char* to_string(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

bool backend_supported(Backend b) {
  if (b == Backend::scalar) return true;
  return cpu_has_avx2();
}

Backend active_backend() { return dispatch().backend; }

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    fail(Errc::invalid_argument,
         std::string("kernel backend not supported on this CPU: ") + to_string(b));
  }
  dispatch().backend = b;
  dispatch().apply();
}

MeanVar mean_var(const double* x, std::ptrdiff_t n, int ddof) {
  return dispatch().table->mean_var(x, n, ddof);
}

void axpb(double* x, std::ptrdiff_t n, double a, double b) {
  dispatch().table->axpb(x, n, a, b);
}

void accum_sq_dist(double* acc, const double* x, std::ptrdiff_t n, double c) {
  dispatch().table->accum_sq_dist(acc, x, n, c);
}

void argmin_columns(const double* d, std::ptrdiff_t n, int k, int* labels) {
  dispatch().table->argmin_columns(d, n, k, labels);
}

double segment_term(const PrefixMoments& pm, std::ptrdiff_t a, std::ptrdiff_t b,
                    double lambda, Objective obj) {
  // Single-segment evaluation is not a hot loop; the generic scalar routine
  // is the one reference both backends share.
  return scalar::segment_term(pm, a, b, lambda, obj);
}

BestSplit split_scan(const PrefixMoments& pm, std::ptrdiff_t a,
                     std::ptrdiff_t b, std::ptrdiff_t min_len, double lambda,
                     Objective obj) {
  return dispatch().table->split_scan(pm, a, b, min_len, lambda, obj);
}

}  // namespace ggseg::kernels
