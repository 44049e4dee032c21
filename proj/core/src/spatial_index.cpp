#include "mso/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mso {

namespace {
constexpr int kLeafSize = 16;

inline double dist_sq(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    const double t = a[i] - b[i];
    s += t * t;
  }
  return s;
}
}  // namespace

KdTree::KdTree(const Matrix& points) : pts_(points) {
  const int n = size();
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  if (n > 0) {
    nodes_.reserve(2 * n / kLeafSize + 4);
    root_ = build(0, n, 0);
  }
}

int KdTree::build(int begin, int end, int /*depth*/) {
  const int d = dim();
  Node node;
  node.begin = begin;
  node.end = end;
  for (int a = 0; a < d; ++a) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = begin; i < end; ++i) {
      const double v = pts_(order_[i], a);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    node.lo[a] = lo;
    node.hi[a] = hi;
  }
  const int idx = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  if (end - begin <= kLeafSize) return idx;

  // Split the widest axis at the median.
  int axis = 0;
  double width = -1.0;
  for (int a = 0; a < d; ++a) {
    const double w = nodes_[idx].hi[a] - nodes_[idx].lo[a];
    if (w > width) {
      width = w;
      axis = a;
    }
  }
  if (width <= 0.0) return idx;  // all points identical; keep as leaf

  const int mid = (begin + end) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](int a, int b) {
                     const double va = pts_(a, axis), vb = pts_(b, axis);
                     return va < vb || (va == vb && a < b);
                   });
  const double split = pts_(order_[mid], axis);
  const int left = build(begin, mid, 0);
  const int right = build(mid, end, 0);
  nodes_[idx].axis = axis;
  nodes_[idx].split = split;
  nodes_[idx].left = left;
  nodes_[idx].right = right;
  return idx;
}

void KdTree::nearest_rec(int ni, const double* x, int& best, double& best_d2) const {
  const Node& node = nodes_[ni];
  const int d = dim();
  // Prune by box distance.
  double box_d2 = 0.0;
  for (int a = 0; a < d; ++a) {
    double t = 0.0;
    if (x[a] < node.lo[a]) t = node.lo[a] - x[a];
    else if (x[a] > node.hi[a]) t = x[a] - node.hi[a];
    box_d2 += t * t;
  }
  if (box_d2 > best_d2) return;

  if (node.axis < 0) {
    for (int i = node.begin; i < node.end; ++i) {
      const int p = order_[i];
      const double d2 = dist_sq(x, pts_.row(p).data(), d);
      if (d2 < best_d2 || (d2 == best_d2 && p < best)) {
        best_d2 = d2;
        best = p;
      }
    }
    return;
  }
  const bool go_left_first = x[node.axis] <= node.split;
  const int first = go_left_first ? node.left : node.right;
  const int second = go_left_first ? node.right : node.left;
  nearest_rec(first, x, best, best_d2);
  nearest_rec(second, x, best, best_d2);
}

int KdTree::nearest(const Eigen::Ref<const Vector>& x, double* dist_sq_out) const {
  if (size() == 0) throw std::invalid_argument("KdTree::nearest on empty tree");
  int best = size();  // sentinel larger than any index for tie-breaks
  double best_d2 = std::numeric_limits<double>::infinity();
  nearest_rec(root_, x.data(), best, best_d2);
  if (dist_sq_out) *dist_sq_out = best_d2;
  return best;
}

void KdTree::radius_rec(int ni, const double* x, double r2, std::vector<int>& out) const {
  const Node& node = nodes_[ni];
  const int d = dim();
  double box_d2 = 0.0;
  for (int a = 0; a < d; ++a) {
    double t = 0.0;
    if (x[a] < node.lo[a]) t = node.lo[a] - x[a];
    else if (x[a] > node.hi[a]) t = x[a] - node.hi[a];
    box_d2 += t * t;
  }
  if (box_d2 >= r2) return;

  if (node.axis < 0) {
    for (int i = node.begin; i < node.end; ++i) {
      const int p = order_[i];
      if (dist_sq(x, pts_.row(p).data(), d) < r2) out.push_back(p);
    }
    return;
  }
  radius_rec(node.left, x, r2, out);
  radius_rec(node.right, x, r2, out);
}

std::vector<int> KdTree::radius_search(const Eigen::Ref<const Vector>& x, double radius) const {
  std::vector<int> out;
  if (size() == 0) return out;
  radius_rec(root_, x.data(), radius * radius, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mso
