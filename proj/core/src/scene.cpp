#include "vsls/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vsls {

double plane_distance(const Vec3& point, const Pose& plane_pose) {
  const Vec3 n = plane_pose.q * Vec3::UnitZ();
  return n.dot(point - plane_pose.t);
}

bool is_feasible(const Pose& pose, const Workspace& ws, const Pose& plane_pose) {
  const Vec3 lo = ws.lo(), hi = ws.hi();
  for (int i = 0; i < 3; ++i)
    if (pose.t[i] < lo[i] || pose.t[i] > hi[i]) return false;
  return plane_distance(pose.t, plane_pose) >= ws.plane_clearance;
}

namespace {

struct RenderFrame {
  Vec3 origin;      // camera center, world
  Mat3 cam_rot;     // world_from_camera
  Mat3 plane_rot;   // world_from_plane
  Vec3 plane_org;
  Vec3 normal;
};

RenderFrame make_frame(const PlanarScene& scene, const Pose& camera_pose) {
  RenderFrame f;
  f.origin = camera_pose.t;
  f.cam_rot = camera_pose.rotation_matrix();
  f.plane_rot = scene.plane_pose.rotation_matrix();
  f.plane_org = scene.plane_pose.t;
  f.normal = f.plane_rot.col(2);
  return f;
}

// Returns the optical-axis depth s of the ray through (u, v), or NaN.
// The world intersection point is origin + s * cam_rot * dir_cam.
double intersect(const RenderFrame& f, const CameraIntrinsics& k, double u, double v, Vec3* world_point) {
  const Vec3 dir_cam((u - k.cx) / k.fx, (v - k.cy) / k.fy, 1.0);
  const Vec3 dir = f.cam_rot * dir_cam;
  const double denom = dir.dot(f.normal);
  if (std::abs(denom) < 1e-12) return std::numeric_limits<double>::quiet_NaN();
  const double s = (f.plane_org - f.origin).dot(f.normal) / denom;
  if (s <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (world_point) *world_point = f.origin + s * dir;
  return s;
}

}  // namespace

Image render(const PlanarScene& scene, const CameraIntrinsics& k, const Pose& camera_pose) {
  if (scene.texture.empty()) throw std::invalid_argument("render: empty texture");
  if (plane_distance(camera_pose.t, scene.plane_pose) <= 1e-9)
    throw std::domain_error("render: camera behind or on the scene plane");

  const RenderFrame f = make_frame(scene, camera_pose);
  Image out(k.width, k.height, scene.background);
  const double tw = scene.texture.width - 1;
  const double th = scene.texture.height - 1;

  for (int v = 0; v < k.height; ++v) {
    for (int u = 0; u < k.width; ++u) {
      Vec3 p;
      const double s = intersect(f, k, u, v, &p);
      if (!std::isfinite(s)) continue;
      const Vec3 local = f.plane_rot.transpose() * (p - f.plane_org);
      const double ax = local.x() / scene.extent_x + 0.5;
      const double ay = local.y() / scene.extent_y + 0.5;
      if (ax < 0.0 || ax > 1.0 || ay < 0.0 || ay > 1.0) continue;
      out.at(u, v) = static_cast<float>(bilinear_sample(scene.texture, ax * tw, ay * th));
    }
  }
  return out;
}

std::optional<double> pixel_depth(const PlanarScene& scene, const CameraIntrinsics& k, const Pose& camera_pose,
                                  double u, double v) {
  const RenderFrame f = make_frame(scene, camera_pose);
  const double s = intersect(f, k, u, v, nullptr);
  if (!std::isfinite(s)) return std::nullopt;
  return s;
}

std::vector<double> depth_map(const PlanarScene& scene, const CameraIntrinsics& k, const Pose& camera_pose) {
  const RenderFrame f = make_frame(scene, camera_pose);
  std::vector<double> out(static_cast<size_t>(k.width) * k.height);
  for (int v = 0; v < k.height; ++v)
    for (int u = 0; u < k.width; ++u)
      out[static_cast<size_t>(v) * k.width + u] = intersect(f, k, u, v, nullptr);
  return out;
}

Image augment(const Image& img, const AugmentConfig& cfg, Rng& rng) {
  Image out = img;

  const bool do_bc = cfg.brightness_lo != 0.0 || cfg.brightness_hi != 0.0 || cfg.contrast_lo != 1.0 ||
                     cfg.contrast_hi != 1.0;
  if (do_bc) {
    const double b = rng.uniform(cfg.brightness_lo, cfg.brightness_hi);
    const double c = rng.uniform(cfg.contrast_lo, cfg.contrast_hi);
    for (auto& p : out.pixels) p = static_cast<float>((p - 0.5) * c + 0.5 + b);
  }
  if (cfg.noise_sigma > 0.0)
    for (auto& p : out.pixels) p = static_cast<float>(p + rng.normal(0.0, cfg.noise_sigma));
  if (cfg.posterize_bits >= 1) {
    const double levels = static_cast<double>((1u << cfg.posterize_bits) - 1u);
    for (auto& p : out.pixels)
      p = static_cast<float>(std::round(std::clamp(static_cast<double>(p), 0.0, 1.0) * levels) / levels);
  }
  for (int i = 0; i < cfg.cutout_count; ++i) {
    const double side = std::sqrt(std::clamp(cfg.cutout_max_frac, 0.0, 1.0));
    const int cw = std::max(1, static_cast<int>(rng.uniform(1.0, side * out.width + 1.0)));
    const int ch = std::max(1, static_cast<int>(rng.uniform(1.0, side * out.height + 1.0)));
    const int cx = rng.uniform_int(out.width);
    const int cy = rng.uniform_int(out.height);
    for (int y = cy; y < std::min(cy + ch, out.height); ++y)
      for (int x = cx; x < std::min(cx + cw, out.width); ++x) out.at(x, y) = 0.0f;
  }
  for (auto& p : out.pixels) p = std::clamp(p, 0.0f, 1.0f);
  return out;
}

Image DomainShift::apply(const Image& img, Rng& rng) const {
  Image out = img;
  if (brightness_offset != 0.0)
    for (auto& p : out.pixels) p = static_cast<float>(p + brightness_offset);
  out = augment(out, aug, rng);
  for (int y = occ_y; y < std::min(occ_y + occ_h, out.height); ++y)
    for (int x = occ_x; x < std::min(occ_x + occ_w, out.width); ++x) out.at(x, y) = occ_value;
  return out;
}

DomainShift domain_shift_preset(const std::string& name, int img_w, int img_h) {
  DomainShift d;
  if (name == "default") {
    d.brightness_offset = 0.12;
    d.aug.noise_sigma = 0.03;
    d.occ_w = img_w / 4;
    d.occ_h = img_h / 4;
    d.occ_x = img_w / 8;
    d.occ_y = (5 * img_h) / 8;
    d.occ_value = 0.08f;
  } else if (name == "strong") {
    d.brightness_offset = 0.2;
    d.aug.noise_sigma = 0.05;
    d.aug.contrast_lo = 0.85;
    d.aug.contrast_hi = 0.85;
    d.occ_w = img_w / 3;
    d.occ_h = img_h / 3;
    d.occ_x = img_w / 2;
    d.occ_y = img_h / 12;
    d.occ_value = 0.05f;
  } else {
    throw std::invalid_argument("unknown domain shift preset: " + name);
  }
  return d;
}

SimState make_sim(const PlanarScene& scene, const Pose& start_pose, uint64_t seed) {
  SimState s;
  s.scene = scene;
  s.camera_pose = start_pose;
  s.rng = Rng(seed);
  return s;
}

StepResult step(const SimState& state, const ActionDelta& a, const ActionBounds& bounds, const Workspace& ws,
                const CameraIntrinsics& k) {
  const auto target = apply_action(state.camera_pose, a, bounds);
  if (!target) throw std::invalid_argument("step: action outside per-axis bounds");

  Pose goal = *target;
  bool clamped = false;
  const Vec3 lo = ws.lo(), hi = ws.hi();
  for (int i = 0; i < 3; ++i) {
    const double c = std::clamp(goal.t[i], lo[i], hi[i]);
    if (c != goal.t[i]) clamped = true;
    goal.t[i] = c;
  }
  const double dist = plane_distance(goal.t, state.scene.plane_pose);
  if (dist < ws.plane_clearance) {
    goal.t += (ws.plane_clearance - dist) * state.scene.normal();
    clamped = true;
  }

  StepResult out;
  out.state = state;
  out.clamped = clamped;
  out.state.last_substeps.clear();
  for (int i = 1; i <= 3; ++i)
    out.state.last_substeps.push_back(interpolate(state.camera_pose, goal, static_cast<double>(i) / 3.0));
  out.state.camera_pose = out.state.last_substeps.back();
  out.state.step_count = state.step_count + 1;
  out.obs = render(out.state.scene, k, out.state.camera_pose);
  return out;
}

}  // namespace vsls
