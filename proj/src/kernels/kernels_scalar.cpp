#include <cmath>
#include <limits>

#include "ggseg/kernels/kernels.hpp"

namespace ggseg::kernels {

int PrefixMoments::pair_index(int channels, int r, int c) {
  if (r > c) std::swap(r, c);
  return r * channels - r * (r - 1) / 2 + (c - r);
}

PrefixMoments build_prefix(const double* data, std::ptrdiff_t rows, int cols) {
  PrefixMoments pm;
  pm.count = rows + 1;
  pm.channels = cols;
  const int pairs = cols * (cols + 1) / 2;
  pm.sum.assign(static_cast<size_t>(pm.count) * cols, 0.0);
  pm.sumsq.assign(static_cast<size_t>(pm.count) * pairs, 0.0);
  for (int j = 0; j < cols; ++j) {
    const double* col = data + static_cast<std::ptrdiff_t>(j) * rows;
    double* out = pm.sum.data() + static_cast<std::ptrdiff_t>(j) * pm.count;
    double acc = 0.0;
    out[0] = 0.0;
    for (std::ptrdiff_t t = 0; t < rows; ++t) {
      acc += col[t];
      out[t + 1] = acc;
    }
  }
  for (int r = 0; r < cols; ++r) {
    for (int c = r; c < cols; ++c) {
      const double* cr = data + static_cast<std::ptrdiff_t>(r) * rows;
      const double* cc = data + static_cast<std::ptrdiff_t>(c) * rows;
      double* out = pm.sumsq.data() +
                    static_cast<std::ptrdiff_t>(pair_index(cols, r, c)) * pm.count;
      double acc = 0.0;
      out[0] = 0.0;
      for (std::ptrdiff_t t = 0; t < rows; ++t) {
        acc += cr[t] * cc[t];
        out[t + 1] = acc;
      }
    }
  }
  return pm;
}

namespace scalar {

MeanVar mean_var(const double* x, std::ptrdiff_t n, int ddof) {
  MeanVar mv;
  if (n <= 0) return mv;
  double s = 0.0;
  for (std::ptrdiff_t i = 0; i < n; ++i) s += x[i];
  mv.mean = s / static_cast<double>(n);
  double q = 0.0;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double d = x[i] - mv.mean;
    q += d * d;
  }
  std::ptrdiff_t denom = n - ddof;
  mv.var = denom > 0 ? q / static_cast<double>(denom) : 0.0;
  return mv;
}

void axpb(double* x, std::ptrdiff_t n, double a, double b) {
  for (std::ptrdiff_t i = 0; i < n; ++i) x[i] = a * x[i] + b;
}

void accum_sq_dist(double* acc, const double* x, std::ptrdiff_t n, double c) {
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double d = x[i] - c;
    acc[i] += d * d;
  }
}

void argmin_columns(const double* d, std::ptrdiff_t n, int k, int* labels) {
  for (std::ptrdiff_t i = 0; i < n; ++i) {
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

// Generic Gaussian segment term for any channel count. Assembles the
// regularized covariance from the prefix moments and factorizes it in a
// workspace allocated once, so a scan reuses it across candidates.
// Returns NaN on a non-positive-definite matrix.
struct TermEval {
  const PrefixMoments& pm;
  double lambda;
  Objective obj;
  int C;
  std::vector<double> buf;
  double* S;
  double* L;
  double* y;
  double* mu;

  TermEval(const PrefixMoments& pm_, double lambda_, Objective obj_)
      : pm(pm_), lambda(lambda_), obj(obj_), C(pm_.channels),
        buf(static_cast<size_t>(2 * C * C + 2 * C), 0.0) {
    S = buf.data();
    L = S + C * C;
    y = L + C * C;
    mu = y + C;
  }

  double operator()(std::ptrdiff_t a, std::ptrdiff_t b) {
    const double w = static_cast<double>(b - a);
    const double invw = 1.0 / w;
    for (int j = 0; j < C; ++j) {
      const double* col = pm.sum_col(j);
      mu[j] = (col[b] - col[a]) * invw;
    }
    for (int r = 0; r < C; ++r) {
      for (int c = r; c < C; ++c) {
        const double* q = pm.sq_col(PrefixMoments::pair_index(C, r, c));
        double v = (q[b] - q[a]) * invw - mu[r] * mu[c];
        S[r * C + c] = v;
        S[c * C + r] = v;
      }
    }
    // In-place lower Cholesky of R = S + (lambda/w) I.
    const double reg = lambda * invw;
    double logdet = 0.0;
    for (int r = 0; r < C; ++r) {
      for (int c = 0; c <= r; ++c) {
        double acc = S[r * C + c] + (r == c ? reg : 0.0);
        for (int t = 0; t < c; ++t) acc -= L[r * C + t] * L[c * C + t];
        if (r == c) {
          if (!(acc > 0.0)) return std::numeric_limits<double>::quiet_NaN();
          L[r * C + r] = std::sqrt(acc);
          logdet += std::log(acc);
        } else {
          L[r * C + c] = acc / L[c * C + c];
        }
      }
    }
    double tr = 0.0;
    for (int j = 0; j < C; ++j) {
      // Forward solve L y = e_j; y is column j of L^{-1}.
      for (int r = 0; r < j; ++r) y[r] = 0.0;
      for (int r = j; r < C; ++r) {
        double acc = (r == j) ? 1.0 : 0.0;
        for (int t = j; t < r; ++t) acc -= L[r * C + t] * y[t];
        y[r] = acc / L[r * C + r];
      }
      if (obj == Objective::paper) {
        // tr(R^-1) = ||L^-1||_F^2
        for (int r = j; r < C; ++r) tr += y[r] * y[r];
      } else {
        // Back solve L^T z = y, giving z = R^-1 e_j; then tr += S_j . z
        for (int r = C - 1; r >= 0; --r) {
          double acc = y[r];
          for (int t = r + 1; t < C; ++t) acc -= L[t * C + r] * y[t];
          y[r] = acc / L[r * C + r];
        }
        for (int r = 0; r < C; ++r) tr += S[j * C + r] * y[r];
      }
    }
    return -0.5 * (w * logdet - lambda * tr);
  }
};

}  // namespace

double segment_term(const PrefixMoments& pm, std::ptrdiff_t a, std::ptrdiff_t b,
                    double lambda, Objective obj) {
  TermEval eval(pm, lambda, obj);
  return eval(a, b);
}

BestSplit split_scan(const PrefixMoments& pm, std::ptrdiff_t a,
                     std::ptrdiff_t b, std::ptrdiff_t min_len, double lambda,
                     Objective obj) {
  BestSplit best;
  best.value = -std::numeric_limits<double>::infinity();
  if (b - a < 2 * min_len) return best;
  TermEval eval(pm, lambda, obj);
  for (std::ptrdiff_t s = a + min_len; s <= b - min_len; ++s) {
    double left = eval(a, s);
    double right = eval(s, b);
    double v = left + right;
    if (std::isnan(v)) continue;
    if (v > best.value) {
      best.value = v;
      best.split = s;
    }
  }
  return best;
}

}  // namespace scalar
}  // namespace ggseg::kernels
