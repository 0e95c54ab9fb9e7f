#pragma once

#include <optional>
#include <vector>

#include "vsls/image.hpp"
#include "vsls/rng.hpp"
#include "vsls/se3.hpp"

namespace vsls {

// Pinhole model; pixel (u, v) maps to the camera-frame ray
// ((u - cx) / fx, (v - cy) / fy, 1).
struct CameraIntrinsics {
  double fx = 70.0;
  double fy = 70.0;
  double cx = 31.5;
  double cy = 31.5;
  int width = 64;
  int height = 64;

  static CameraIntrinsics make_default(int w = 64, int h = 64) {
    CameraIntrinsics k;
    k.width = w;
    k.height = h;
    k.fx = k.fy = 1.09375 * w;  // ~49 deg horizontal FOV
    k.cx = 0.5 * (w - 1);
    k.cy = 0.5 * (h - 1);
    return k;
  }
};

// Textured plane: local +z is the normal, the texture spans local
// x in [-extent_x/2, extent_x/2] and y likewise. Rays that hit the plane
// outside the textured extent see `background`.
struct PlanarScene {
  Image texture;
  Pose plane_pose;                  // world_from_plane
  double extent_x = 0.7;            // m
  double extent_y = 0.7;            // m
  float background = 0.5f;

  Vec3 normal() const { return plane_pose.q * Vec3::UnitZ(); }
  Vec3 center() const { return plane_pose.t; }
};

// Axis-aligned workspace box plus minimum clearance above the scene plane.
struct Workspace {
  Vec3 center = Vec3(0.0, 0.0, 0.6);
  Vec3 half_extents = Vec3(0.375, 0.375, 0.3);
  double plane_clearance = 0.05;  // m along the plane normal

  Vec3 lo() const { return center - half_extents; }
  Vec3 hi() const { return center + half_extents; }
};

// Inside the (closed) box and at least `plane_clearance` in front of the plane.
bool is_feasible(const Pose& pose, const Workspace& ws, const Pose& plane_pose = Pose::identity());

// Signed distance from a point to the scene plane along its normal.
double plane_distance(const Vec3& point, const Pose& plane_pose);

// Per-pixel ray/plane rendering with bilinear texture lookup. Pure and
// deterministic. Throws std::domain_error when the camera is not strictly in
// front of the plane.
Image render(const PlanarScene& scene, const CameraIntrinsics& k, const Pose& camera_pose);

// Distance along the optical axis to the ray/plane intersection for one
// pixel; nullopt when the ray is parallel to or diverges from the plane.
std::optional<double> pixel_depth(const PlanarScene& scene, const CameraIntrinsics& k, const Pose& camera_pose,
                                  double u, double v);

// Depths for every pixel; misses are NaN.
std::vector<double> depth_map(const PlanarScene& scene, const CameraIntrinsics& k, const Pose& camera_pose);

// Photometric augmentation settings. Pipeline order is
// brightness/contrast -> additive noise -> posterize -> cutout, with the
// result clamped to [0, 1]. posterize_bits == 0 disables quantization.
struct AugmentConfig {
  double brightness_lo = 0.0, brightness_hi = 0.0;  // additive offset range
  double contrast_lo = 1.0, contrast_hi = 1.0;      // multiplicative range about 0.5
  double noise_sigma = 0.0;                         // Gaussian intensity std
  int posterize_bits = 0;
  int cutout_count = 0;
  double cutout_max_frac = 0.1;   // max rectangle area as fraction of the image
  double grayscale_prob = 0.0;    // no-op for the grayscale pipeline, kept for RGB extension

  static AugmentConfig off() { return {}; }
  static AugmentConfig train_default() {
    AugmentConfig c;
    c.brightness_lo = -0.08;
    c.brightness_hi = 0.08;
    c.contrast_lo = 0.9;
    c.contrast_hi = 1.1;
    c.noise_sigma = 0.01;
    c.posterize_bits = 5;
    c.cutout_count = 1;
    c.cutout_max_frac = 0.04;
    return c;
  }
};

Image augment(const Image& img, const AugmentConfig& cfg, Rng& rng);

// Fixed appearance shift standing in for the unseen deployment domain:
// stronger noise, a brightness offset, and one occluder at a persistent
// location. Never used during training.
struct DomainShift {
  AugmentConfig aug;
  double brightness_offset = 0.0;
  int occ_x = 0, occ_y = 0, occ_w = 0, occ_h = 0;  // persistent occluder rect (px)
  float occ_value = 0.0f;

  Image apply(const Image& img, Rng& rng) const;
};

// Named presets for the CLI / experiments ("default", "strong").
DomainShift domain_shift_preset(const std::string& name, int img_w = 64, int img_h = 64);

// Eye-in-hand simulator state. Independent instances may run in parallel;
// a single instance is not thread safe.
struct SimState {
  Pose camera_pose;
  PlanarScene scene;
  Rng rng{0};
  int step_count = 0;

  // poses visited by the low-level controller in the most recent step
  std::vector<Pose> last_substeps;
};

struct StepResult {
  SimState state;
  Image obs;
  bool clamped = false;  // target left the workspace and was clamped to its boundary
};

SimState make_sim(const PlanarScene& scene, const Pose& start_pose, uint64_t seed);

// Low-level controller: three equal sub-steps interpolating to
// apply_action(pose, a), geodesic on rotations, then a render at the final
// pose. Throws std::invalid_argument when `a` violates `bounds`.
StepResult step(const SimState& state, const ActionDelta& a, const ActionBounds& bounds, const Workspace& ws,
                const CameraIntrinsics& k);

}  // namespace vsls
