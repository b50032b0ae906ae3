#ifndef HECKE_QMATRIX_HPP
#define HECKE_QMATRIX_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "hecke/qpoly.hpp"

namespace hecke {

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static QMatrix identity(size_t n);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  mpq_class& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const mpq_class& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  std::vector<mpq_class> column(size_t j) const;
  void set_column(size_t j, const std::vector<mpq_class>& v);

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  std::vector<mpq_class> apply(const std::vector<mpq_class>& v) const;
  QMatrix transpose() const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<mpq_class> a_;
};

mpq_class det(QMatrix m);
size_t rank(QMatrix m);
std::optional<QMatrix> inverse(QMatrix m);
/// Solves m x = b; returns nullopt when inconsistent. Free variables are set to zero.
std::optional<std::vector<mpq_class>> solve(QMatrix m, std::vector<mpq_class> b);
/// Characteristic polynomial det(x I - m), monic.
QPoly charpoly(QMatrix m);

}  // namespace hecke

#endif
