#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vsls/scene.hpp"

namespace vsls {

// Photometric visual servoing settings. The damped pseudoinverse control law
// is v = -lambda (L^T L + mu diag(L^T L))^{-1} L^T e.
struct DvsConfig {
  double lambda = 0.4;        // gain, in (0, 2]
  double mu = 1e-3;           // Levenberg damping; 0 recovers the plain pseudoinverse
  int max_iters = 600;
  double error_eps = 1e-5;    // photometric MSE convergence threshold
  double velocity_eps = 1e-6; // twist-norm stall threshold
  double dt = 0.05;           // integration step (s)
};

struct DvsResult {
  bool converged = false;
  int iters = 0;
  Pose final_pose;
  std::vector<double> error_trace;                     // photometric MSE per iteration
  std::vector<std::pair<double, double>> pose_error_trace;  // (cm, deg) vs goal per iteration
};

// residual = I - I_goal flattened row-major, plus its mean square.
std::pair<Eigen::VectorXd, double> photometric_error(const Image& img, const Image& goal);

// N x 6 photometric interaction matrix. Row for pixel (u, v) with normalized
// coordinates (x, y) and depth Z is -[fx*dI/du, fy*dI/dv] * L_x with
//   L_x = [ -1/Z   0    x/Z   xy      -(1+x^2)  y ]
//         [  0   -1/Z   y/Z   1+y^2   -xy      -x ].
// Gradients are central differences; border pixels and depth misses get zero
// rows and are reported in `valid`.
Eigen::MatrixXd interaction_matrix(const Image& img, const std::vector<double>& depths, const CameraIntrinsics& k,
                                   std::vector<uint8_t>* valid = nullptr);

// One control step toward the goal image; the twist is expressed in the
// camera frame. Throws std::runtime_error if the normal matrix stays singular
// after the damping retry.
Twist control_step(const Image& img, const Image& goal, const std::vector<double>& depths,
                   const CameraIntrinsics& k, const DvsConfig& cfg);

// Full servo loop from the simulator state toward `goal_img` (rendered at
// `goal_pose`, used only for the diagnostic pose-error trace).
DvsResult servo(const SimState& sim, const CameraIntrinsics& k, const Image& goal_img, const Pose& goal_pose,
                const DvsConfig& cfg);

}  // namespace vsls
