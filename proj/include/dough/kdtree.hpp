#pragma once

#include <algorithm>
#include <vector>

#include "dough/geometry.hpp"

namespace dough {

// Exact nearest-neighbor search over 3-D points. Distance ties resolve to the
// smallest point index, so results do not depend on build order.
class KdTree {
 public:
  explicit KdTree(const std::vector<Vec3>& pts) : pts_(pts) {
    if (pts_.empty()) return;
    std::vector<int> order(pts_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    nodes_.reserve(pts_.size());
    root_ = build(order, 0, static_cast<int>(order.size()), 0);
  }

  bool empty() const { return pts_.empty(); }

  // Index of the nearest point to q (smallest index on ties); -1 if empty.
  int nearest(const Vec3& q) const {
    if (root_ < 0) return -1;
    double bd2 = 1e300;
    int bi = -1;
    query(root_, q, bd2, bi);
    return bi;
  }

  double nearest_dist2(const Vec3& q, int skip = -1) const {
    double bd2 = 1e300;
    int bi = -1;
    if (root_ >= 0) query_skip(root_, q, skip, bd2, bi);
    return bd2;
  }

 private:
  struct Node {
    int pt;
    int left = -1;
    int right = -1;
    int axis;
  };

  static double coord(const Vec3& p, int axis) {
    return axis == 0 ? p.x : axis == 1 ? p.y : p.z;
  }

  int build(std::vector<int>& order, int lo, int hi, int depth) {
    if (lo >= hi) return -1;
    const int axis = depth % 3;
    const int mid = lo + (hi - lo) / 2;
    std::nth_element(order.begin() + lo, order.begin() + mid, order.begin() + hi,
                     [&](int a, int b) {
                       const double ca = coord(pts_[a], axis), cb = coord(pts_[b], axis);
                       return ca < cb || (ca == cb && a < b);
                     });
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({order[mid], -1, -1, axis});
    nodes_[id].left = build(order, lo, mid, depth + 1);
    const int right = build(order, mid + 1, hi, depth + 1);
    nodes_[id].right = right;
    return id;
  }

  void query(int node, const Vec3& q, double& bd2, int& bi) const {
    const Node& n = nodes_[node];
    const Vec3& p = pts_[n.pt];
    const double dx = q.x - p.x, dy = q.y - p.y, dz = q.z - p.z;
    const double d2 = dx * dx + dy * dy + dz * dz;
    if (d2 < bd2 || (d2 == bd2 && n.pt < bi)) {
      bd2 = d2;
      bi = n.pt;
    }
    const double delta = coord(q, n.axis) - coord(p, n.axis);
    const int first = delta < 0.0 ? n.left : n.right;
    const int second = delta < 0.0 ? n.right : n.left;
    if (first >= 0) query(first, q, bd2, bi);
    if (second >= 0 && delta * delta <= bd2) query(second, q, bd2, bi);
  }

  void query_skip(int node, const Vec3& q, int skip, double& bd2, int& bi) const {
    const Node& n = nodes_[node];
    const Vec3& p = pts_[n.pt];
    if (n.pt != skip) {
      const double dx = q.x - p.x, dy = q.y - p.y, dz = q.z - p.z;
      const double d2 = dx * dx + dy * dy + dz * dz;
      if (d2 < bd2 || (d2 == bd2 && n.pt < bi)) {
        bd2 = d2;
        bi = n.pt;
      }
    }
    const double delta = coord(q, n.axis) - coord(p, n.axis);
    const int first = delta < 0.0 ? n.left : n.right;
    const int second = delta < 0.0 ? n.right : n.left;
    if (first >= 0) query_skip(first, q, skip, bd2, bi);
    if (second >= 0 && delta * delta <= bd2) query_skip(second, q, skip, bd2, bi);
  }

  std::vector<Vec3> pts_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace dough
