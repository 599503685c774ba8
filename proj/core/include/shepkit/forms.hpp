#pragma once

#include "shepkit/diagram.hpp"

#include <stdexcept>
#include <vector>

namespace shepkit {

class SymmetricRealMatrix {
public:
  explicit SymmetricRealMatrix(int n) : n_(n), a_(size_t(n) * n, 0.0) {}
  int size() const { return n_; }
  double& at(int i, int j) { return a_[size_t(i) * n_ + j]; }
  double at(int i, int j) const { return a_[size_t(i) * n_ + j]; }
  void set(int i, int j, double v) {
    at(i, j) = v;
    at(j, i) = v;
  }

private:
  int n_;
  std::vector<double> a_;
};

struct DefinitenessVerdict {
  bool positive_definite = false;
  // Leading principal minors, in order; on failure the list stops at the
  // first minor <= tol.
  std::vector<double> leading_minors;
  // On failure: x with x^T M x <= tol, and that value.
  std::vector<double> witness;
  double witness_value = 0.0;
};

class InfiniteLabelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NegativeRadicandError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Cosine matrix: c_ii = 1, c_ij = -cos(pi/m_ij), with -1 for m = inf and 0
// for non-edges.
SymmetricRealMatrix cosine_matrix(const ExtendedCoxeterDiagram& d);

// Hermitian form Gram matrix: alpha_ii = 1, alpha_ij = 0 for non-edges,
// alpha_ij = -sqrt((cos(pi/p_i - pi/p_j) + cos(2 pi/m_ij)) /
//                  (2 sin(pi/p_i) sin(pi/p_j)))
// for edges. Defined only for all-finite labels.
SymmetricRealMatrix hermitian_matrix(const ExtendedCoxeterDiagram& d,
                                     double tol = 1e-12);

// Off-diagonal entry values for a single pair.
double cosine_entry(const Label& m);
double hermitian_entry(const Label& p, const Label& q, const Label& m,
                       double tol = 1e-12);

// Sylvester leading-principal-minor test.
DefinitenessVerdict is_positive_definite(const SymmetricRealMatrix& m,
                                         double tol = 1e-9);

double determinant(const SymmetricRealMatrix& m);

// alpha(p,m,q) <= c(m) + tol. Requires p,q >= 2, m >= 3 finite, p = q when
// m is odd.
bool audit_alpha_leq_c(const Label& p, const Label& m, const Label& q,
                       double tol = 1e-12);

}  // namespace shepkit
