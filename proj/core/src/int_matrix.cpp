#include "psweyl/int_matrix.hpp"

#include <stdexcept>

namespace psw {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<IntMatrix::value_type> IntMatrix::apply(std::span<const value_type> v) const {
  if (v.size() != n_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  std::vector<value_type> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    value_type acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("IntMatrix product: dimension mismatch");
  const std::size_t n = a.n_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
  // FNV-1a over the entries
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : m.entries()) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace psw
