#include "vsls/dvs.hpp"

#include <cmath>
#include <stdexcept>

namespace vsls {

std::pair<Eigen::VectorXd, double> photometric_error(const Image& img, const Image& goal) {
  if (!img.same_shape(goal)) throw std::invalid_argument("photometric_error: dimension mismatch");
  Eigen::VectorXd e(img.size());
  for (size_t i = 0; i < img.pixels.size(); ++i)
    e[static_cast<Eigen::Index>(i)] = static_cast<double>(img.pixels[i]) - goal.pixels[i];
  return {e, e.squaredNorm() / static_cast<double>(img.size())};
}

Eigen::MatrixXd interaction_matrix(const Image& img, const std::vector<double>& depths, const CameraIntrinsics& k,
                                   std::vector<uint8_t>* valid) {
  if (depths.size() != img.size()) throw std::invalid_argument("interaction_matrix: depth map size mismatch");
  const int w = img.width, h = img.height;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(img.size()), 6);
  if (valid) valid->assign(img.size(), 0);

  int n_valid = 0;
  for (int v = 0; v < h; ++v) {
    for (int u = 0; u < w; ++u) {
      const size_t idx = static_cast<size_t>(v) * w + u;
      if (u == 0 || v == 0 || u == w - 1 || v == h - 1) continue;  // central differences undefined
      const double z = depths[idx];
      if (!std::isfinite(z) || z <= 0.0) continue;

      // gradient in pixel units, converted to normalized image coordinates
      const double gu = 0.5 * (static_cast<double>(img.at(u + 1, v)) - img.at(u - 1, v));
      const double gv = 0.5 * (static_cast<double>(img.at(u, v + 1)) - img.at(u, v - 1));
      const double gx = k.fx * gu;
      const double gy = k.fy * gv;

      const double x = (u - k.cx) / k.fx;
      const double y = (v - k.cy) / k.fy;

      L(idx, 0) = -(gx * (-1.0 / z));
      L(idx, 1) = -(gy * (-1.0 / z));
      L(idx, 2) = -(gx * (x / z) + gy * (y / z));
      L(idx, 3) = -(gx * (x * y) + gy * (1.0 + y * y));
      L(idx, 4) = -(gx * (-(1.0 + x * x)) + gy * (-x * y));
      L(idx, 5) = -(gx * y + gy * (-x));
      if (valid) (*valid)[idx] = 1;
      ++n_valid;
    }
  }
  if (n_valid == 0) throw std::runtime_error("interaction_matrix: no valid pixels");
  return L;
}

Twist control_step(const Image& img, const Image& goal, const std::vector<double>& depths,
                   const CameraIntrinsics& k, const DvsConfig& cfg) {
  const auto [e, mse] = photometric_error(img, goal);
  (void)mse;
  const Eigen::MatrixXd L = interaction_matrix(img, depths, k);

  const Eigen::Matrix<double, 6, 6> h = L.transpose() * L;
  const Eigen::Matrix<double, 6, 1> g = L.transpose() * e;

  double mu = cfg.mu;
  for (int attempt = 0; attempt < 2; ++attempt) {
    Eigen::Matrix<double, 6, 6> a = h;
    a.diagonal() += mu * h.diagonal();
    if (mu == 0.0) a.diagonal().array() += 0.0;  // plain pseudoinverse path
    Eigen::LDLT<Eigen::Matrix<double, 6, 6>> ldlt(a);
    if (ldlt.info() == Eigen::Success) {
      const Eigen::Matrix<double, 6, 1> x = -cfg.lambda * ldlt.solve(g);
      if (x.allFinite()) return Twist::from_vector(x);
    }
    mu = (mu == 0.0) ? 1e-3 : mu * 10.0;  // damping retry
  }
  throw std::runtime_error("control_step: normal matrix numerically singular");
}

DvsResult servo(const SimState& sim, const CameraIntrinsics& k, const Image& goal_img, const Pose& goal_pose,
                const DvsConfig& cfg) {
  DvsResult res;
  Pose pose = sim.camera_pose;

  for (int it = 0; it < cfg.max_iters; ++it) {
    const Image img = render(sim.scene, k, pose);
    const auto [e, mse] = photometric_error(img, goal_img);
    (void)e;
    const auto [terr, rerr] = pose_error(pose, goal_pose);
    res.error_trace.push_back(mse);
    res.pose_error_trace.emplace_back(terr * 100.0, rerr * 180.0 / M_PI);
    res.iters = it + 1;

    if (mse < cfg.error_eps) {
      res.converged = true;
      break;
    }
    const std::vector<double> depths = depth_map(sim.scene, k, pose);
    const Twist xi = control_step(img, goal_img, depths, k, cfg);
    if (xi.norm() < cfg.velocity_eps) break;  // stalled
    pose = integrate_twist(pose, xi, cfg.dt);
    if (plane_distance(pose.t, sim.scene.plane_pose) <= 1e-6) break;  // diverged into the plane
  }
  res.final_pose = pose;
  return res;
}

}  // namespace vsls
