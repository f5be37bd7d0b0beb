#pragma once

#include <cstddef>
#include <vector>

namespace atl {

// Monotone cubic (Fritsch-Carlson / PCHIP) interpolant.  Exact at the nodes,
// C^1, and free of overshoot between them, so sqrt(E - V(R)) integrands stay
// well defined wherever the table itself is monotone.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  // x strictly increasing, size >= 2
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;  // throws OutOfRangeError outside [front, back]

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }
  std::size_t size() const { return x_.size(); }
  const std::vector<double>& xs() const { return x_; }
  const std::vector<double>& ys() const { return y_; }

 private:
  std::vector<double> x_, y_, d_;  // nodes, values, node derivatives
};

}  // namespace atl
