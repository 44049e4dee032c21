#pragma once

#include "mso/common.hpp"

#include <vector>

namespace mso {

// kd-tree over an n x d point set, d in {2,3}. Nearest-neighbor ties are
// broken toward the lowest point index so queries are deterministic.
class KdTree {
 public:
  KdTree() = default;
  explicit KdTree(const Matrix& points);

  int size() const { return static_cast<int>(pts_.rows()); }
  int dim() const { return static_cast<int>(pts_.cols()); }
  const Matrix& points() const { return pts_; }

  // Index of the nearest point; optionally its squared distance.
  int nearest(const Eigen::Ref<const Vector>& x, double* dist_sq = nullptr) const;

  // Indices i with |p_i - x| < radius, ascending.
  std::vector<int> radius_search(const Eigen::Ref<const Vector>& x, double radius) const;

 private:
  struct Node {
    int left = -1, right = -1;
    int begin = 0, end = 0;  // leaf range into order_
    int axis = -1;
    double split = 0.0;
    double lo[3], hi[3];  // bounding box
  };

  int build(int begin, int end, int depth);
  void nearest_rec(int node, const double* x, int& best, double& best_d2) const;
  void radius_rec(int node, const double* x, double r2, std::vector<int>& out) const;

  Matrix pts_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace mso
