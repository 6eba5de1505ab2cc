#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace psw {

/// Dense square integer matrix, row-major. Weyl group elements and
/// reflections are stored this way, acting on column vectors of
/// simple-root coordinates.
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }

  value_type& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  value_type operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

  std::span<const value_type> entries() const { return data_; }

  /// this * v
  std::vector<value_type> apply(std::span<const value_type> v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<value_type> data_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

}  // namespace psw
