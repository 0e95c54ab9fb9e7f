#include "vsls/se3.hpp"

#include <cmath>

namespace vsls {

Pose compose(const Pose& a, const Pose& b) {
  Pose out;
  out.q = (a.q * b.q).normalized();
  out.t = a.t + a.q * b.t;
  return out;
}

Pose inverse(const Pose& p) {
  Pose out;
  out.q = p.q.conjugate();
  out.t = -(out.q * p.t);
  return out;
}

double rotation_angle(const Quat& q1, const Quat& q2) {
  const double d = std::abs(q1.dot(q2));
  return 2.0 * std::acos(std::min(1.0, d));
}

double pose_distance(const Pose& p, const Pose& g, const DistanceWeights& w) {
  return w.c1 * (p.t - g.t).norm() + w.c2 * rotation_angle(p.q, g.q);
}

Pose apply_action_unchecked(const Pose& p, const ActionDelta& a) {
  // intrinsic x-y-z rotation about the camera axes
  const Quat dq = Quat(Eigen::AngleAxisd(a[3], Vec3::UnitX())) *
                  Quat(Eigen::AngleAxisd(a[4], Vec3::UnitY())) *
                  Quat(Eigen::AngleAxisd(a[5], Vec3::UnitZ()));
  Pose out;
  out.t = p.t + p.q * a.translation();
  out.q = (p.q * dq).normalized();
  return out;
}

std::optional<Pose> apply_action(const Pose& p, const ActionDelta& a, const ActionBounds& bounds) {
  if (!bounds.contains(a)) return std::nullopt;
  return apply_action_unchecked(p, a);
}

std::optional<Pose> lookat_pose(const Vec3& position, const Vec3& target, double roll) {
  const Vec3 dir = target - position;
  const double n = dir.norm();
  if (n < 1e-12) return std::nullopt;
  const Vec3 z = dir / n;
  const Vec3 up_ref = Vec3::UnitY();
  Vec3 x = up_ref.cross(z);
  const double xn = x.norm();
  if (xn < 1e-9) return std::nullopt;  // view direction parallel to the reference axis
  x /= xn;
  const Vec3 y = z.cross(x);
  Mat3 r;
  r.col(0) = x;
  r.col(1) = y;
  r.col(2) = z;
  Pose out;
  out.q = (Quat(r) * Quat(Eigen::AngleAxisd(roll, Vec3::UnitZ()))).normalized();
  out.t = position;
  return out;
}

Pose integrate_twist(const Pose& p, const Twist& xi, double dt) {
  const Vec3 w = xi.w * dt;
  const Vec3 v = xi.v * dt;
  const double theta = w.norm();

  Mat3 wx;
  wx << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;

  Mat3 rot, vmat;
  if (theta < 1e-10) {
    rot = Mat3::Identity() + wx;
    vmat = Mat3::Identity() + 0.5 * wx;
  } else {
    const double t2 = theta * theta;
    rot = Mat3::Identity() + std::sin(theta) / theta * wx + (1.0 - std::cos(theta)) / t2 * wx * wx;
    vmat = Mat3::Identity() + (1.0 - std::cos(theta)) / t2 * wx + (theta - std::sin(theta)) / (t2 * theta) * wx * wx;
  }

  Pose delta;
  delta.q = Quat(rot).normalized();
  delta.t = vmat * v;
  return compose(p, delta);
}

Pose interpolate(const Pose& a, const Pose& b, double s) {
  Pose out;
  out.t = (1.0 - s) * a.t + s * b.t;
  out.q = a.q.slerp(s, b.q).normalized();
  return out;
}

std::pair<double, double> pose_error(const Pose& p, const Pose& g) {
  return {(p.t - g.t).norm(), rotation_angle(p.q, g.q)};
}

}  // namespace vsls
