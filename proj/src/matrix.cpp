#include "dqpair/matrix.hpp"

#include <sstream>

namespace dqpair {

std::string to_string(const GaussRat& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
  if (z.im == 0) return os << z.re;
  if (z.re == 0) {
    if (z.im == 1) return os << "i";
    if (z.im == -1) return os << "-i";
    return os << z.im << "i";
  }
  os << z.re;
  if (z.im > 0) os << "+";
  if (z.im == 1)
    os << "i";
  else if (z.im == -1)
    os << "-i";
  else
    os << z.im << "i";
  return os;
}

IntMatrix identity_matrix(Index n) { return IntMatrix::Identity(n, n); }

IntMatrix ones_matrix(Index n) { return IntMatrix::Constant(n, n, Int(1)); }

RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rat>(); }

GaussMatrix to_gauss(const IntMatrix& m) {
  GaussMatrix g(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) g(i, j) = GaussRat(Rat(m(i, j)));
  return g;
}

GaussMatrix to_gauss(const RatMatrix& m) {
  GaussMatrix g(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) g(i, j) = GaussRat(m(i, j));
  return g;
}

bool is_zero_one(const IntMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && m(i, j) != 1) return false;
  return true;
}

}  // namespace dqpair
