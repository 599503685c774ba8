#include "shepkit/forms.hpp"

#include <cmath>
#include <numbers>

namespace shepkit {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double cosine_entry(const Label& m) {
  if (m.is_infinite()) return -1.0;
  return -std::cos(kPi / m.value());
}

double hermitian_entry(const Label& p, const Label& q, const Label& m,
                       double tol) {
  if (p.is_infinite() || q.is_infinite() || m.is_infinite())
    throw InfiniteLabelError("hermitian form is undefined for infinite labels");
  double sp = std::sin(kPi / p.value());
  double sq = std::sin(kPi / q.value());
  double radicand = (std::cos(kPi / p.value() - kPi / q.value()) +
                     std::cos(2.0 * kPi / m.value())) /
                    (2.0 * sp * sq);
  if (radicand < -tol)
    throw NegativeRadicandError("negative radicand for labels (" + p.str() +
                                "," + m.str() + "," + q.str() + ")");
  if (radicand < 0.0) radicand = 0.0;
  return -std::sqrt(radicand);
}

SymmetricRealMatrix cosine_matrix(const ExtendedCoxeterDiagram& d) {
  SymmetricRealMatrix c(d.size());
  for (int i = 0; i < d.size(); ++i) {
    c.at(i, i) = 1.0;
    for (int j = i + 1; j < d.size(); ++j) c.set(i, j, cosine_entry(d.m(i, j)));
  }
  return c;
}

SymmetricRealMatrix hermitian_matrix(const ExtendedCoxeterDiagram& d,
                                     double tol) {
  for (int i = 0; i < d.size(); ++i)
    if (d.p(i).is_infinite())
      throw InfiniteLabelError("hermitian form is undefined: vertex '" +
                               d.vertex(i).name + "' has label inf");
  SymmetricRealMatrix h(d.size());
  for (int i = 0; i < d.size(); ++i) {
    h.at(i, i) = 1.0;
    for (int j = i + 1; j < d.size(); ++j) {
      Label m = d.m(i, j);
      if (m.is_infinite())
        throw InfiniteLabelError("hermitian form is undefined: edge " +
                                 d.vertex(i).name + "-" + d.vertex(j).name +
                                 " has label inf");
      if (m == Label::finite(2)) continue;
      h.set(i, j, hermitian_entry(d.p(i), d.p(j), m, tol));
    }
  }
  return h;
}

DefinitenessVerdict is_positive_definite(const SymmetricRealMatrix& m,
                                         double tol) {
  const int n = m.size();
  DefinitenessVerdict v;
  // LDL^T without pivoting; minor_k = d_0 * ... * d_k.
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  std::vector<double> d(n, 0.0);
  double minor = 1.0;
  for (int k = 0; k < n; ++k) {
    double dk = m.at(k, k);
    for (int j = 0; j < k; ++j) dk -= l[k][j] * l[k][j] * d[j];
    d[k] = dk;
    minor *= dk;
    v.leading_minors.push_back(minor);
    if (minor <= tol || dk <= tol) {
      // Witness direction from the failing pivot: solve L^T x = e_k.
      std::vector<double> x(n, 0.0);
      x[k] = 1.0;
      for (int i = k - 1; i >= 0; --i) {
        double s = 0.0;
        for (int j = i + 1; j <= k; ++j) s += l[j][i] * x[j];
        x[i] = -s;
      }
      double value = 0.0;
      for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) value += x[i] * m.at(i, j) * x[j];
      v.positive_definite = false;
      v.witness = std::move(x);
      v.witness_value = value;
      return v;
    }
    for (int i = k + 1; i < n; ++i) {
      double s = m.at(i, k);
      for (int j = 0; j < k; ++j) s -= l[i][j] * l[k][j] * d[j];
      l[i][k] = s / dk;
    }
  }
  v.positive_definite = true;
  return v;
}

double determinant(const SymmetricRealMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[pivot][k])) pivot = i;
    if (a[pivot][k] == 0.0) return 0.0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (int i = k + 1; i < n; ++i) {
      double f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

bool audit_alpha_leq_c(const Label& p, const Label& m, const Label& q,
                       double tol) {
  if (p.is_infinite() || q.is_infinite() || m.is_infinite())
    throw InfiniteLabelError("audit_alpha_leq_c requires finite labels");
  if (p.value() < 2 || q.value() < 2 || m.value() < 3)
    throw ValidationError("audit_alpha_leq_c: labels out of range");
  if (m.value() % 2 == 1 && p != q)
    throw ValidationError("audit_alpha_leq_c: odd m requires p = q");
  return hermitian_entry(p, q, m) <= cosine_entry(m) + tol;
}

}  // namespace shepkit
