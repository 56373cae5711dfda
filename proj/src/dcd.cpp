#include "dough/dcd.hpp"

#include <cmath>

#include "dough/errors.hpp"
#include "dough/kdtree.hpp"

namespace dough {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Matches {
  std::vector<int> nn12, nn21;     // nn12[i]: index in s2 of the NN of s1[i]
  std::vector<double> d12, d21;    // Euclidean distances to those NNs
  std::vector<int> cnt1, cnt2;     // cnt2[j]: how many s1 points picked j
};

Matches match(const PointCloud& s1, const PointCloud& s2) {
  if (s1.empty() || s2.empty()) raise(ErrorCode::EmptyCloud, "empty point cloud");
  Matches m;
  m.nn12.resize(s1.size());
  m.d12.resize(s1.size());
  m.nn21.resize(s2.size());
  m.d21.resize(s2.size());
  m.cnt1.assign(s1.size(), 0);
  m.cnt2.assign(s2.size(), 0);
  const KdTree t1(s1.pts), t2(s2.pts);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    const int j = t2.nearest(s1.pts[i]);
    m.nn12[i] = j;
    m.d12[i] = (s1.pts[i] - s2.pts[j]).norm();
    ++m.cnt2[j];
  }
  for (std::size_t j = 0; j < s2.size(); ++j) {
    const int i = t1.nearest(s2.pts[j]);
    m.nn21[j] = i;
    m.d21[j] = (s2.pts[j] - s1.pts[i]).norm();
    ++m.cnt1[i];
  }
  return m;
}

double loss_from(const Matches& m, double alpha) {
  double t1 = 0.0;
  for (std::size_t i = 0; i < m.nn12.size(); ++i)
    t1 += 1.0 - std::exp(-alpha * m.d12[i]) / m.cnt2[m.nn12[i]];
  t1 /= static_cast<double>(m.nn12.size());
  double t2 = 0.0;
  for (std::size_t j = 0; j < m.nn21.size(); ++j)
    t2 += 1.0 - std::exp(-alpha * m.d21[j]) / m.cnt1[m.nn21[j]];
  t2 /= static_cast<double>(m.nn21.size());
  return 0.5 * (t1 + t2);
}

std::vector<Vec3> grads_from(const PointCloud& s1, const PointCloud& s2,
                             const Matches& m, double alpha) {
  std::vector<Vec3> g(s2.size(), {0.0, 0.0, 0.0});
  const double w1 = 0.5 / static_cast<double>(s1.size());
  const double w2 = 0.5 / static_cast<double>(s2.size());
  // s1-side term: moving y_j changes every match that selected it.
  for (std::size_t i = 0; i < s1.size(); ++i) {
    const int j = m.nn12[i];
    const double d = m.d12[i];
    if (d <= 0.0) continue;  // coincident points: flat subgradient
    const double scale = w1 * alpha * std::exp(-alpha * d) / (m.cnt2[j] * d);
    g[j] = g[j] + (s2.pts[j] - s1.pts[i]) * scale;
  }
  // s2-side term: each y_j carries its own match to x̂.
  for (std::size_t j = 0; j < s2.size(); ++j) {
    const int i = m.nn21[j];
    const double d = m.d21[j];
    if (d <= 0.0) continue;
    const double scale = w2 * alpha * std::exp(-alpha * d) / (m.cnt1[i] * d);
    g[j] = g[j] + (s2.pts[j] - s1.pts[i]) * scale;
  }
  return g;
}

}  // namespace

PointCloud discretize_target(const Disk& target, int n, double dough_volume) {
  if (n < 16) raise(ErrorCode::InvalidArgument, "need at least 16 target points");
  if (target.radius <= 0.0) raise(ErrorCode::InvalidArgument, "target radius must be > 0");
  if (dough_volume < 0.0) raise(ErrorCode::InvalidArgument, "volume must be >= 0");
  const double z = dough_volume / (kPi * target.radius * target.radius);
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  PointCloud c;
  c.pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double r = target.radius * std::sqrt((i + 0.5) / n);
    const double th = i * golden;
    c.pts.push_back({target.center.x + r * std::cos(th),
                     target.center.y + r * std::sin(th), z});
  }
  return c;
}

double dcd_loss(const PointCloud& s1, const PointCloud& s2, const DcdParams& p) {
  if (p.alpha <= 0.0) raise(ErrorCode::InvalidConfig, "alpha must be > 0");
  return loss_from(match(s1, s2), p.alpha);
}

std::vector<Vec3> dcd_gradient(const PointCloud& s1, const PointCloud& s2,
                               const DcdParams& p) {
  if (p.alpha <= 0.0) raise(ErrorCode::InvalidConfig, "alpha must be > 0");
  return grads_from(s1, s2, match(s1, s2), p.alpha);
}

std::size_t max_grad_point(const std::vector<Vec3>& grads) {
  if (grads.empty()) raise(ErrorCode::InvalidArgument, "no gradients");
  std::size_t best = 0;
  double bn = grads[0].norm_sq();
  for (std::size_t i = 1; i < grads.size(); ++i) {
    const double n = grads[i].norm_sq();
    if (n > bn) {  // strict: ties keep the smallest index
      bn = n;
      best = i;
    }
  }
  return best;
}

double chamfer(const PointCloud& s1, const PointCloud& s2) {
  if (s1.empty() || s2.empty()) raise(ErrorCode::EmptyCloud, "empty point cloud");
  const KdTree t1(s1.pts), t2(s2.pts);
  double a = 0.0;
  for (const Vec3& x : s1.pts) a += (x - s2.pts[t2.nearest(x)]).norm_sq();
  a /= static_cast<double>(s1.size());
  double b = 0.0;
  for (const Vec3& y : s2.pts) b += (y - s1.pts[t1.nearest(y)]).norm_sq();
  b /= static_cast<double>(s2.size());
  return 0.5 * (a + b);
}

SgdResult sgd_deform(const PointCloud& source, const PointCloud& target, int steps,
                     double lr, const DcdParams& p) {
  if (steps < 1) raise(ErrorCode::InvalidArgument, "steps must be >= 1");
  if (lr <= 0.0) raise(ErrorCode::InvalidArgument, "learning rate must be > 0");
  SgdResult r;
  r.cloud = source;
  r.losses.reserve(steps + 1);
  r.chamfers.reserve(steps + 1);
  for (int s = 0; s < steps; ++s) {
    const Matches m = match(target, r.cloud);
    r.losses.push_back(loss_from(m, p.alpha));
    r.chamfers.push_back(chamfer(target, r.cloud));
    const std::vector<Vec3> g = grads_from(target, r.cloud, m, p.alpha);
    for (std::size_t i = 0; i < r.cloud.size(); ++i)
      r.cloud.pts[i] = r.cloud.pts[i] - g[i] * lr;
  }
  r.losses.push_back(dcd_loss(target, r.cloud, p));
  r.chamfers.push_back(chamfer(target, r.cloud));
  return r;
}

}  // namespace dough
