#pragma once

#include <optional>
#include <vector>

#include "vlo/geometry.hpp"

namespace vlo {

struct NormalCloud {
    std::vector<Vec3> points;
    std::vector<Vec3> normals;
    std::vector<bool> valid;
};

/// Per-point plane fit over the exact k nearest neighbours (within a radius
/// cap); the normal is the smallest-eigenvalue direction of the neighbourhood
/// covariance. Grid acceleration is behaviorally identical to brute force.
NormalCloud estimate_normals(const PointCloud& cloud, int k, double radius_cap = 2.0);

struct IcpConfig {
    double max_corr_dist = 1.0;
    int max_iters = 20;
    double update_eps = 1e-6;
    int min_correspondences = 10;
};

struct IcpResult {
    Pose pose;          // maps source into the target frame
    double residual = 0.0;  // RMS point-to-plane residual, meters
    int iterations = 0;
};

/// Point-to-plane ICP via the small-angle 6x6 linearization.
IcpResult point_to_plane_icp(const PointCloud& source, const NormalCloud& target,
                             const Pose& init, const IcpConfig& cfg);

enum class OdomInitMode { bootstrap, constant_velocity };

struct OdomState {
    Pose last_pose;          // T_w^{L_k}
    Pose last_relative;      // constant-velocity prediction
    int frame_index = 0;
    PointCloud last_scan;
    NormalCloud last_normals;
    int fallback_count = 0;  // bootstrap frames that had no VO relative pose
};

struct OdomStepResult {
    Pose pose;  // T_w^{L_k}
    bool used_fallback = false;
};

/// Registers `scan` against the previous scan; the initial guess comes from
/// the VO relative pose (bootstrap) or the previous relative motion
/// (constant velocity). The first frame primes the state at identity.
OdomStepResult lidar_odometry_step(OdomState& state, const PointCloud& scan,
                                   const std::optional<Pose>& vo_relative, OdomInitMode mode,
                                   const IcpConfig& cfg = {}, int normal_k = 10);

}  // namespace vlo
