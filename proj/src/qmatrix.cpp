#include "hecke/qmatrix.hpp"

#include "hecke/error.hpp"

namespace hecke {

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<mpq_class> QMatrix::column(size_t j) const {
  std::vector<mpq_class> v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

void QMatrix::set_column(size_t j, const std::vector<mpq_class>& v) {
  for (size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.c_ != b.r_) fail(ErrorCode::Internal, "matrix shape mismatch");
  QMatrix r(a.r_, b.c_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) {
      const mpq_class& x = a(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < b.c_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

std::vector<mpq_class> QMatrix::apply(const std::vector<mpq_class>& v) const {
  std::vector<mpq_class> r(r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

// Row echelon form in place; returns pivot columns. Tracks the determinant sign.
std::vector<size_t> echelon(QMatrix& m, mpq_class* det_acc, QMatrix* rhs) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
      if (rhs)
        for (size_t j = 0; j < rhs->cols(); ++j) std::swap((*rhs)(p, j), (*rhs)(row, j));
      if (det_acc) *det_acc = -*det_acc;
    }
    mpq_class inv = 1 / m(row, col);
    if (det_acc) *det_acc *= m(row, col);
    for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    if (rhs)
      for (size_t j = 0; j < rhs->cols(); ++j) (*rhs)(row, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      mpq_class f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
      if (rhs)
        for (size_t j = 0; j < rhs->cols(); ++j)
          if ((*rhs)(row, j) != 0) (*rhs)(i, j) -= f * (*rhs)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

mpq_class det(QMatrix m) {
  if (m.rows() != m.cols()) fail(ErrorCode::Internal, "determinant of non-square matrix");
  mpq_class d = 1;
  auto piv = echelon(m, &d, nullptr);
  if (piv.size() < m.rows()) return 0;
  return d;
}

size_t rank(QMatrix m) { return echelon(m, nullptr, nullptr).size(); }

std::optional<QMatrix> inverse(QMatrix m) {
  if (m.rows() != m.cols()) return std::nullopt;
  QMatrix id = QMatrix::identity(m.rows());
  auto piv = echelon(m, nullptr, &id);
  if (piv.size() < m.rows()) return std::nullopt;
  return id;
}

std::optional<std::vector<mpq_class>> solve(QMatrix m, std::vector<mpq_class> b) {
  QMatrix rhs(b.size(), 1);
  for (size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  auto piv = echelon(m, nullptr, &rhs);
  for (size_t i = piv.size(); i < m.rows(); ++i)
    if (rhs(i, 0) != 0) return std::nullopt;
  std::vector<mpq_class> x(m.cols());
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = rhs(r, 0);
  return x;
}

QPoly charpoly(QMatrix h) {
  // Reduction to upper Hessenberg form followed by the standard recurrence.
  const size_t n = h.rows();
  for (size_t m = 1; m + 1 < n; ++m) {
    if (h(m, m - 1) == 0) {
      size_t p = m + 1;
      while (p < n && h(p, m - 1) == 0) ++p;
      if (p == n) continue;
      for (size_t j = 0; j < n; ++j) std::swap(h(p, j), h(m, j));
      for (size_t j = 0; j < n; ++j) std::swap(h(j, p), h(j, m));
    }
    mpq_class t = h(m, m - 1);
    for (size_t r = m + 1; r < n; ++r) {
      if (h(r, m - 1) == 0) continue;
      mpq_class u = h(r, m - 1) / t;
      for (size_t j = 0; j < n; ++j)
        if (h(m, j) != 0) h(r, j) -= u * h(m, j);
      for (size_t j = 0; j < n; ++j)
        if (h(j, r) != 0) h(j, m) += u * h(j, r);
    }
  }
  std::vector<QPoly> p(n + 1);
  p[0] = QPoly::constant(1);
  for (size_t m = 1; m <= n; ++m) {
    QPoly xm(std::vector<mpq_class>{-h(m - 1, m - 1), 1});
    p[m] = xm * p[m - 1];
    mpq_class t = 1;
    for (size_t i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (t == 0) break;
      mpq_class c = t * h(m - i - 1, m - 1);
      if (c != 0) p[m] -= p[m - i - 1] * c;
    }
  }
  return p[n];
}

}  // namespace hecke
