// AVX2 backend. Compiled with -mavx2 -mfma in its own translation unit;
// only reached after a runtime CPU check in dispatch.cpp.

#include "ggseg/kernels/kernels.hpp"

#if GGSEG_HAVE_AVX2_BACKEND

#include <immintrin.h>

#include <cmath>
#include <cstring>
#include <limits>

namespace ggseg::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

// log over 4 lanes: x = m 2^e with m in [sqrt(1/2), sqrt(2)), then
// log m = 2 atanh((m-1)/(m+1)) as an odd polynomial. Two-part ln2 keeps the
// exponent contribution accurate. Handles 0, negatives, inf, nan, subnormals.
inline __m256d vlog(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half_exp_mask = _mm256_castsi256_pd(
      _mm256_set1_epi64x(0x3fe0000000000000LL));  // exponent bits of 0.5
  const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffLL);
  const __m256d sqrt2 = _mm256_set1_pd(1.4142135623730951);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d two54 = _mm256_set1_pd(1.80143985094819840000e+16);

  __m256d in = x;
  // Scale subnormals into the normal range.
  __m256d tiny = _mm256_cmp_pd(in, _mm256_set1_pd(2.2250738585072014e-308),
                               _CMP_LT_OQ);
  __m256d scaled = _mm256_mul_pd(in, two54);
  x = _mm256_blendv_pd(in, scaled, tiny);
  __m256d ebias = _mm256_blendv_pd(_mm256_setzero_pd(),
                                   _mm256_set1_pd(-54.0), tiny);

  __m256i bits = _mm256_castpd_si256(x);
  __m256i expo = _mm256_srli_epi64(bits, 52);
  // Unbiased exponent as double via int64 lanes (values are small).
  __m256i unb = _mm256_sub_epi64(expo, _mm256_set1_epi64x(1023));
  alignas(32) long long ei[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(ei), unb);
  __m256d e = _mm256_set_pd(static_cast<double>(ei[3]), static_cast<double>(ei[2]),
                            static_cast<double>(ei[1]), static_cast<double>(ei[0]));
  e = _mm256_add_pd(e, ebias);

  // Mantissa in [1, 2): keep fraction bits, force exponent of 1.0.
  __m256i mbits = _mm256_or_si256(
      _mm256_and_si256(bits, mant_mask),
      _mm256_castpd_si256(_mm256_set1_pd(1.0)));
  __m256d m = _mm256_castsi256_pd(mbits);
  // Fold [sqrt(2), 2) down so m is in [sqrt(1/2), sqrt(2)).
  __m256d fold = _mm256_cmp_pd(m, sqrt2, _CMP_GE_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), fold);
  e = _mm256_add_pd(e, _mm256_and_pd(fold, one));

  __m256d z = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  __m256d z2 = _mm256_mul_pd(z, z);
  __m256d p = _mm256_set1_pd(1.0 / 19.0);
  p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 17.0));
  p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 15.0));
  p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 13.0));
  p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 11.0));
  p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 9.0));
  p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 7.0));
  p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 5.0));
  p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 3.0));
  p = _mm256_fmadd_pd(p, z2, one);
  __m256d logm = _mm256_mul_pd(_mm256_add_pd(z, z), p);

  __m256d r = _mm256_fmadd_pd(e, ln2_lo, logm);
  r = _mm256_fmadd_pd(e, ln2_hi, r);

  // Special cases on the original input.
  const __m256d ninf = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  const __m256d pinf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  const __m256d qnan = _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN());
  __m256d is_zero = _mm256_cmp_pd(in, _mm256_setzero_pd(), _CMP_EQ_OQ);
  __m256d is_neg = _mm256_cmp_pd(in, _mm256_setzero_pd(), _CMP_LT_OQ);
  __m256d is_inf = _mm256_cmp_pd(in, pinf, _CMP_EQ_OQ);
  __m256d is_nan = _mm256_cmp_pd(in, in, _CMP_UNORD_Q);
  r = _mm256_blendv_pd(r, ninf, is_zero);
  r = _mm256_blendv_pd(r, qnan, is_neg);
  r = _mm256_blendv_pd(r, pinf, is_inf);
  r = _mm256_blendv_pd(r, qnan, is_nan);
  return r;
}

}  // namespace

void log4(const double in[4], double out[4]) {
  __m256d v = _mm256_loadu_pd(in);
  _mm256_storeu_pd(out, vlog(v));
}

MeanVar mean_var(const double* x, std::ptrdiff_t n, int ddof) {
  MeanVar mv;
  if (n <= 0) return mv;
  std::ptrdiff_t i = 0;
  __m256d acc = _mm256_setzero_pd();
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i];
  mv.mean = s / static_cast<double>(n);

  __m256d mu = _mm256_set1_pd(mv.mean);
  __m256d qacc = _mm256_setzero_pd();
  i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), mu);
    qacc = _mm256_fmadd_pd(d, d, qacc);
  }
  double q = hsum(qacc);
  for (; i < n; ++i) {
    double d = x[i] - mv.mean;
    q += d * d;
  }
  std::ptrdiff_t denom = n - ddof;
  mv.var = denom > 0 ? q / static_cast<double>(denom) : 0.0;
  return mv;
}

void axpb(double* x, std::ptrdiff_t n, double a, double b) {
  __m256d va = _mm256_set1_pd(a);
  __m256d vb = _mm256_set1_pd(b);
  std::ptrdiff_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vb));
  }
  for (; i < n; ++i) x[i] = a * x[i] + b;
}

void accum_sq_dist(double* acc, const double* x, std::ptrdiff_t n, double c) {
  __m256d vc = _mm256_set1_pd(c);
  std::ptrdiff_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), vc);
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(d, d, _mm256_loadu_pd(acc + i)));
  }
  for (; i < n; ++i) {
    double d = x[i] - c;
    acc[i] += d * d;
  }
}

void argmin_columns(const double* d, std::ptrdiff_t n, int k, int* labels) {
  std::ptrdiff_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d best = _mm256_loadu_pd(d + i);
    __m256d bestj = _mm256_setzero_pd();
    for (int j = 1; j < k; ++j) {
      __m256d v = _mm256_loadu_pd(d + static_cast<std::ptrdiff_t>(j) * n + i);
      __m256d lt = _mm256_cmp_pd(v, best, _CMP_LT_OQ);
      best = _mm256_blendv_pd(best, v, lt);
      bestj = _mm256_blendv_pd(bestj, _mm256_set1_pd(static_cast<double>(j)), lt);
    }
    __m128i ji = _mm256_cvtpd_epi32(bestj);
    alignas(16) int tmp[4];
    _mm_store_si128(reinterpret_cast<__m128i*>(tmp), ji);
    labels[i] = tmp[0];
    labels[i + 1] = tmp[1];
    labels[i + 2] = tmp[2];
    labels[i + 3] = tmp[3];
  }
  for (; i < n; ++i) {
    double best = d[i];
    int bestj = 0;
    for (int j = 1; j < k; ++j) {
      double v = d[static_cast<std::ptrdiff_t>(j) * n + i];
      if (v < best) {
        best = v;
        bestj = j;
      }
    }
    labels[i] = bestj;
  }
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Closed-form per-side term evaluation for 1..3 channels, vectorized over 4
// candidate split positions. `Side` packs the prefix differences for either
// the left [a, s) or right [s, b) part.

struct ScanState {
  __m256d best_val;
  __m256d best_idx;

  ScanState() {
    best_val = _mm256_set1_pd(kNegInf);
    best_idx = _mm256_set1_pd(-1.0);
  }

  inline void update(__m256d val, __m256d idx) {
    __m256d gt = _mm256_cmp_pd(val, best_val, _CMP_GT_OQ);
    best_val = _mm256_blendv_pd(best_val, val, gt);
    best_idx = _mm256_blendv_pd(best_idx, idx, gt);
  }

  // Reduce lanes; equal values resolve to the smallest index.
  BestSplit reduce() const {
    alignas(32) double v[4];
    alignas(32) double ix[4];
    _mm256_store_pd(v, best_val);
    _mm256_store_pd(ix, best_idx);
    BestSplit out;
    out.value = kNegInf;
    for (int l = 0; l < 4; ++l) {
      if (ix[l] < 0) continue;
      if (v[l] > out.value ||
          (v[l] == out.value && static_cast<std::ptrdiff_t>(ix[l]) < out.split)) {
        out.value = v[l];
        out.split = static_cast<std::ptrdiff_t>(ix[l]);
      }
    }
    return out;
  }
};

struct TermPair {
  __m256d value;  // left + right combined term
  __m256d valid;  // lanes with positive definite R on both sides
};

// term = -1/2 (w logdet(R) - lambda * tr), tr per objective variant.
inline __m256d combine(__m256d w, __m256d logdet, __m256d tr, __m256d lambda) {
  __m256d t = _mm256_fnmadd_pd(lambda, tr, _mm256_mul_pd(w, logdet));
  return _mm256_mul_pd(_mm256_set1_pd(-0.5), t);
}

template <Objective Obj>
inline void term_c1(__m256d w, __m256d sum, __m256d sq, double lambda,
                    __m256d* term, __m256d* valid) {
  __m256d invw = _mm256_div_pd(_mm256_set1_pd(1.0), w);
  __m256d mu = _mm256_mul_pd(sum, invw);
  __m256d S = _mm256_fnmadd_pd(mu, mu, _mm256_mul_pd(sq, invw));
  __m256d lam = _mm256_set1_pd(lambda);
  __m256d R = _mm256_fmadd_pd(lam, invw, S);
  *valid = _mm256_cmp_pd(R, _mm256_setzero_pd(), _CMP_GT_OQ);
  __m256d logdet = vlog(R);
  __m256d tr = Obj == Objective::paper
                   ? _mm256_div_pd(_mm256_set1_pd(1.0), R)
                   : _mm256_div_pd(S, R);
  *term = combine(w, logdet, tr, lam);
}

template <Objective Obj>
inline void term_c2(__m256d w, const __m256d sum[2], const __m256d sq[3],
                    double lambda, __m256d* term, __m256d* valid) {
  __m256d invw = _mm256_div_pd(_mm256_set1_pd(1.0), w);
  __m256d mu0 = _mm256_mul_pd(sum[0], invw);
  __m256d mu1 = _mm256_mul_pd(sum[1], invw);
  __m256d S00 = _mm256_fnmadd_pd(mu0, mu0, _mm256_mul_pd(sq[0], invw));
  __m256d S01 = _mm256_fnmadd_pd(mu0, mu1, _mm256_mul_pd(sq[1], invw));
  __m256d S11 = _mm256_fnmadd_pd(mu1, mu1, _mm256_mul_pd(sq[2], invw));
  __m256d lam = _mm256_set1_pd(lambda);
  __m256d reg = _mm256_mul_pd(lam, invw);
  __m256d R00 = _mm256_add_pd(S00, reg);
  __m256d R11 = _mm256_add_pd(S11, reg);
  __m256d det = _mm256_fnmadd_pd(S01, S01, _mm256_mul_pd(R00, R11));
  __m256d zero = _mm256_setzero_pd();
  *valid = _mm256_and_pd(_mm256_cmp_pd(R00, zero, _CMP_GT_OQ),
                         _mm256_cmp_pd(det, zero, _CMP_GT_OQ));
  __m256d logdet = vlog(det);
  __m256d tr;
  if (Obj == Objective::paper) {
    tr = _mm256_div_pd(_mm256_add_pd(R00, R11), det);
  } else {
    // tr(S adj(R)) / det, adj(R) = [[R11, -S01], [-S01, R00]]
    __m256d num = _mm256_mul_pd(S00, R11);
    num = _mm256_fmadd_pd(S11, R00, num);
    num = _mm256_fnmadd_pd(_mm256_add_pd(S01, S01), S01, num);
    tr = _mm256_div_pd(num, det);
  }
  *term = combine(w, logdet, tr, lam);
}

template <Objective Obj>
inline void term_c3(__m256d w, const __m256d sum[3], const __m256d sq[6],
                    double lambda, __m256d* term, __m256d* valid) {
  __m256d invw = _mm256_div_pd(_mm256_set1_pd(1.0), w);
  __m256d mu0 = _mm256_mul_pd(sum[0], invw);
  __m256d mu1 = _mm256_mul_pd(sum[1], invw);
  __m256d mu2 = _mm256_mul_pd(sum[2], invw);
  // pair order: (0,0),(0,1),(0,2),(1,1),(1,2),(2,2)
  __m256d S00 = _mm256_fnmadd_pd(mu0, mu0, _mm256_mul_pd(sq[0], invw));
  __m256d S01 = _mm256_fnmadd_pd(mu0, mu1, _mm256_mul_pd(sq[1], invw));
  __m256d S02 = _mm256_fnmadd_pd(mu0, mu2, _mm256_mul_pd(sq[2], invw));
  __m256d S11 = _mm256_fnmadd_pd(mu1, mu1, _mm256_mul_pd(sq[3], invw));
  __m256d S12 = _mm256_fnmadd_pd(mu1, mu2, _mm256_mul_pd(sq[4], invw));
  __m256d S22 = _mm256_fnmadd_pd(mu2, mu2, _mm256_mul_pd(sq[5], invw));
  __m256d lam = _mm256_set1_pd(lambda);
  __m256d reg = _mm256_mul_pd(lam, invw);
  __m256d R00 = _mm256_add_pd(S00, reg);
  __m256d R11 = _mm256_add_pd(S11, reg);
  __m256d R22 = _mm256_add_pd(S22, reg);

  __m256d c00 = _mm256_fnmadd_pd(S12, S12, _mm256_mul_pd(R11, R22));
  __m256d c11 = _mm256_fnmadd_pd(S02, S02, _mm256_mul_pd(R00, R22));
  __m256d c22 = _mm256_fnmadd_pd(S01, S01, _mm256_mul_pd(R00, R11));
  // Minor pairs reused by det and by the off-diagonal inverse entries.
  __m256d m01 = _mm256_fnmadd_pd(S12, S02, _mm256_mul_pd(S01, R22));  // R01*R22 - R12*R02
  __m256d m02 = _mm256_fnmadd_pd(S02, R11, _mm256_mul_pd(S01, S12));  // R01*R12 - R02*R11
  __m256d det = _mm256_mul_pd(R00, c00);
  det = _mm256_fnmadd_pd(S01, m01, det);
  det = _mm256_fmadd_pd(S02, m02, det);

  __m256d zero = _mm256_setzero_pd();
  __m256d valid1 = _mm256_cmp_pd(R00, zero, _CMP_GT_OQ);
  __m256d valid2 = _mm256_cmp_pd(c22, zero, _CMP_GT_OQ);
  __m256d valid3 = _mm256_cmp_pd(det, zero, _CMP_GT_OQ);
  *valid = _mm256_and_pd(valid1, _mm256_and_pd(valid2, valid3));

  __m256d logdet = vlog(det);
  __m256d tr;
  if (Obj == Objective::paper) {
    tr = _mm256_div_pd(_mm256_add_pd(c00, _mm256_add_pd(c11, c22)), det);
  } else {
    // Sum_ij S_ij (R^-1)_ij via adjugate entries.
    __m256d a01 = _mm256_sub_pd(zero, m01);
    __m256d a02 = m02;
    __m256d a12 = _mm256_fnmadd_pd(R00, S12, _mm256_mul_pd(S01, S02));  // -(R00*R12 - R01*R02)
    __m256d num = _mm256_mul_pd(S00, c00);
    num = _mm256_fmadd_pd(S11, c11, num);
    num = _mm256_fmadd_pd(S22, c22, num);
    __m256d off = _mm256_mul_pd(S01, a01);
    off = _mm256_fmadd_pd(S02, a02, off);
    off = _mm256_fmadd_pd(S12, a12, off);
    num = _mm256_fmadd_pd(_mm256_set1_pd(2.0), off, num);
    tr = _mm256_div_pd(num, det);
  }
  *term = combine(w, logdet, tr, lam);
}

template <int C, Objective Obj>
BestSplit scan_impl(const PrefixMoments& pm, std::ptrdiff_t a, std::ptrdiff_t b,
                    std::ptrdiff_t min_len, double lambda) {
  constexpr int P = C * (C + 1) / 2;
  const double* sums[C];
  const double* sqs[P];
  double sum_a[C], sum_b[C], sq_a[P], sq_b[P];
  for (int j = 0; j < C; ++j) {
    sums[j] = pm.sum_col(j);
    sum_a[j] = sums[j][a];
    sum_b[j] = sums[j][b];
  }
  for (int p = 0; p < P; ++p) {
    sqs[p] = pm.sq_col(p);
    sq_a[p] = sqs[p][a];
    sq_b[p] = sqs[p][b];
  }

  const std::ptrdiff_t lo = a + min_len;
  const std::ptrdiff_t hi = b - min_len;  // inclusive
  ScanState state;
  const __m256d wa = _mm256_set1_pd(static_cast<double>(a));
  const __m256d wb = _mm256_set1_pd(static_cast<double>(b));
  const __m256d lane = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);

  std::ptrdiff_t s = lo;
  for (; s + 4 <= hi + 1; s += 4) {
    __m256d sv = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(s)), lane);
    __m256d wl = _mm256_sub_pd(sv, wa);
    __m256d wr = _mm256_sub_pd(wb, sv);
    __m256d suml[C], sumr[C], sql[P], sqr[P];
    for (int j = 0; j < C; ++j) {
      __m256d ps = _mm256_loadu_pd(sums[j] + s);
      suml[j] = _mm256_sub_pd(ps, _mm256_set1_pd(sum_a[j]));
      sumr[j] = _mm256_sub_pd(_mm256_set1_pd(sum_b[j]), ps);
    }
    for (int p = 0; p < P; ++p) {
      __m256d ps = _mm256_loadu_pd(sqs[p] + s);
      sql[p] = _mm256_sub_pd(ps, _mm256_set1_pd(sq_a[p]));
      sqr[p] = _mm256_sub_pd(_mm256_set1_pd(sq_b[p]), ps);
    }
    __m256d tl, tr2, vl, vr;
    if constexpr (C == 1) {
      term_c1<Obj>(wl, suml[0], sql[0], lambda, &tl, &vl);
      term_c1<Obj>(wr, sumr[0], sqr[0], lambda, &tr2, &vr);
    } else if constexpr (C == 2) {
      term_c2<Obj>(wl, suml, sql, lambda, &tl, &vl);
      term_c2<Obj>(wr, sumr, sqr, lambda, &tr2, &vr);
    } else {
      term_c3<Obj>(wl, suml, sql, lambda, &tl, &vl);
      term_c3<Obj>(wr, sumr, sqr, lambda, &tr2, &vr);
    }
    __m256d val = _mm256_add_pd(tl, tr2);
    __m256d valid = _mm256_and_pd(vl, vr);
    // NaN lanes compare false in update(); still mask invalid ones hard.
    val = _mm256_blendv_pd(_mm256_set1_pd(kNegInf), val, valid);
    state.update(val, sv);
  }
  BestSplit best = state.reduce();

  // Scalar tail, same closed forms via one-lane vectors.
  for (; s <= hi; ++s) {
    __m256d sv = _mm256_set1_pd(static_cast<double>(s));
    __m256d wl = _mm256_sub_pd(sv, wa);
    __m256d wr = _mm256_sub_pd(wb, sv);
    __m256d suml[C], sumr[C], sql[P], sqr[P];
    for (int j = 0; j < C; ++j) {
      __m256d ps = _mm256_set1_pd(sums[j][s]);
      suml[j] = _mm256_sub_pd(ps, _mm256_set1_pd(sum_a[j]));
      sumr[j] = _mm256_sub_pd(_mm256_set1_pd(sum_b[j]), ps);
    }
    for (int p = 0; p < P; ++p) {
      __m256d ps = _mm256_set1_pd(sqs[p][s]);
      sql[p] = _mm256_sub_pd(ps, _mm256_set1_pd(sq_a[p]));
      sqr[p] = _mm256_sub_pd(_mm256_set1_pd(sq_b[p]), ps);
    }
    __m256d tl, tr2, vl, vr;
    if constexpr (C == 1) {
      term_c1<Obj>(wl, suml[0], sql[0], lambda, &tl, &vl);
      term_c1<Obj>(wr, sumr[0], sqr[0], lambda, &tr2, &vr);
    } else if constexpr (C == 2) {
      term_c2<Obj>(wl, suml, sql, lambda, &tl, &vl);
      term_c2<Obj>(wr, sumr, sqr, lambda, &tr2, &vr);
    } else {
      term_c3<Obj>(wl, suml, sql, lambda, &tl, &vl);
      term_c3<Obj>(wr, sumr, sqr, lambda, &tr2, &vr);
    }
    double val = _mm256_cvtsd_f64(_mm256_add_pd(tl, tr2));
    bool ok = (_mm256_movemask_pd(_mm256_and_pd(vl, vr)) & 1) != 0;
    if (ok && !std::isnan(val) && val > best.value) {
      best.value = val;
      best.split = s;
    }
  }
  return best;
}

}  // namespace

BestSplit split_scan(const PrefixMoments& pm, std::ptrdiff_t a,
                     std::ptrdiff_t b, std::ptrdiff_t min_len, double lambda,
                     Objective obj) {
  BestSplit none;
  none.value = kNegInf;
  if (b - a < 2 * min_len) return none;
  switch (pm.channels) {
    case 1:
      return obj == Objective::paper
                 ? scan_impl<1, Objective::paper>(pm, a, b, min_len, lambda)
                 : scan_impl<1, Objective::original_ggs>(pm, a, b, min_len, lambda);
    case 2:
      return obj == Objective::paper
                 ? scan_impl<2, Objective::paper>(pm, a, b, min_len, lambda)
                 : scan_impl<2, Objective::original_ggs>(pm, a, b, min_len, lambda);
    case 3:
      return obj == Objective::paper
                 ? scan_impl<3, Objective::paper>(pm, a, b, min_len, lambda)
                 : scan_impl<3, Objective::original_ggs>(pm, a, b, min_len, lambda);
    default:
      return scalar::split_scan(pm, a, b, min_len, lambda, obj);
  }
}

}  // namespace ggseg::kernels::avx2

#endif  // GGSEG_HAVE_AVX2_BACKEND
