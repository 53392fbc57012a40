#ifndef CPDM_TYPES_HPP
#define CPDM_TYPES_HPP

#include <cstddef>
#include <vector>

namespace cpdm {

using Vec = std::vector<double>;

// Dense square matrix, row-major. Sized once, never resized afterwards.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  int size() const { return n_; }
  const double* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * n_; }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

}  // namespace cpdm

#endif
