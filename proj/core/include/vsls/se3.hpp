#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <array>
#include <optional>

namespace vsls {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;  // stored (w, x, y, z)

// Rigid camera/end-effector pose: world_from_camera. `q` maps camera-frame
// vectors into the world frame and is kept unit-norm after every operation.
struct Pose {
  Vec3 t = Vec3::Zero();
  Quat q = Quat::Identity();

  static Pose identity() { return {}; }
  static Pose translation(double x, double y, double z) { return {Vec3(x, y, z), Quat::Identity()}; }
  static Pose rotation(const Vec3& axis, double angle) {
    return {Vec3::Zero(), Quat(Eigen::AngleAxisd(angle, axis.normalized()))};
  }

  Mat3 rotation_matrix() const { return q.toRotationMatrix(); }
  Vec3 transform_point(const Vec3& p) const { return q * p + t; }
  Vec3 rotate(const Vec3& v) const { return q * v; }
  // camera optical axis (+z of the camera frame) expressed in world coordinates
  Vec3 optical_axis() const { return q * Vec3::UnitZ(); }
};

// Camera-frame velocity command: linear (m/s) then angular (rad/s).
struct Twist {
  Vec3 v = Vec3::Zero();
  Vec3 w = Vec3::Zero();

  Eigen::Matrix<double, 6, 1> vector() const {
    Eigen::Matrix<double, 6, 1> x;
    x << v, w;
    return x;
  }
  static Twist from_vector(const Eigen::Matrix<double, 6, 1>& x) { return {x.head<3>(), x.tail<3>()}; }
  double norm() const { return vector().norm(); }
};

// One agent action: camera-frame displacement
// (dx, dy, dz) meters and intrinsic (roll, pitch, yaw) radians.
struct ActionDelta {
  std::array<double, 6> d{0, 0, 0, 0, 0, 0};

  double& operator[](int i) { return d[i]; }
  double operator[](int i) const { return d[i]; }
  Vec3 translation() const { return Vec3(d[0], d[1], d[2]); }
  Vec3 rpy() const { return Vec3(d[3], d[4], d[5]); }
  static ActionDelta zero() { return {}; }
};

// Per-axis symmetric action bounds; |d[i]| <= bound(i).
struct ActionBounds {
  double translation = 0.05;  // m
  double rotation = 5.0 * M_PI / 180.0;  // rad

  double bound(int axis) const { return axis < 3 ? translation : rotation; }
  bool contains(const ActionDelta& a) const {
    for (int i = 0; i < 6; ++i)
      if (std::abs(a[i]) > bound(i)) return false;
    return true;
  }
};

// Scaling of the two pose-distance terms. c1 (1/m) normalizes translation by
// the workspace size, c2 scales the geodesic rotation angle; defaults put
// each term in [0, 1] over the default workspace.
struct DistanceWeights {
  double c1 = 1.0;
  double c2 = 1.0 / M_PI;
};

Pose compose(const Pose& a, const Pose& b);
Pose inverse(const Pose& p);

// geodesic angle between two rotations, in [0, pi]; sign-flip invariant
double rotation_angle(const Quat& q1, const Quat& q2);

// c1 * |p.t - g.t| + c2 * rotation_angle(p.q, g.q)
double pose_distance(const Pose& p, const Pose& g, const DistanceWeights& w);

// Apply a camera-frame displacement: translation in the current camera frame,
// rotation as intrinsic roll-pitch-yaw about the camera x, y, z axes.
// Components outside `bounds` are rejected.
std::optional<Pose> apply_action(const Pose& p, const ActionDelta& a, const ActionBounds& bounds);
Pose apply_action_unchecked(const Pose& p, const ActionDelta& a);

// Pose whose optical axis points from `position` toward `target`, with `roll`
// about the optical axis. Gram-Schmidt reference is world +y; returns nullopt
// when the view direction is parallel to it (caller resamples).
std::optional<Pose> lookat_pose(const Vec3& position, const Vec3& target, double roll);

// SE(3) exponential of a camera-frame twist integrated over dt, composed onto p.
Pose integrate_twist(const Pose& p, const Twist& xi, double dt);

// Geodesic interpolation between poses (lerp on translation, slerp on rotation).
Pose interpolate(const Pose& a, const Pose& b, double s);

// Split of a relative pose into translation/rotation magnitudes: (m, rad).
std::pair<double, double> pose_error(const Pose& p, const Pose& g);

}  // namespace vsls
