#pragma once

#include <cstdint>
#include <vector>

#include "vlo/geometry.hpp"
#include "vlo/image_ops.hpp"

namespace vlo {

/// A tracked correspondence that survived epipolar culling.
struct MatchedPair {
    Vec2 x_prev;
    Vec2 x_cur;
    double lidar_depth = 0.0;  // LiDAR-measured depth at x_prev, meters
    Vec2 grad_cur = Vec2::Zero();
};

/// Candidate before culling: a tracked point plus its LiDAR depth and the
/// image gradient at the tracked location.
using TrackedCandidate = MatchedPair;

struct ScaleSample {
    double s = 0.0;  // lidar depth / visual depth
    double d = 0.0;
    double v = 0.0;
};

struct ScaleEstimate {
    double scale = 1.0;
    int inlier_count = 0;
    int sample_count = 0;
    double inlier_spread = 0.0;  // relative standard deviation of the inliers
};

struct LocalMap {
    std::vector<Pose> keyframe_poses;  // T_w^{C_k}
    std::vector<Vec3> map_points;      // world frame
    std::size_t reference_index = 0;   // index of C_0
};

struct CullingThresholds {
    double max_normal_error = 0.5;  // px, point-to-epipolar-line distance
    double min_abs_cos = 0.5;       // |cos| between line direction and gradient
};

/// Keeps candidates close to their epipolar line whose gradient is well
/// aligned with the line direction. Zero-gradient candidates are culled.
std::vector<MatchedPair> cull_matches(const std::vector<TrackedCandidate>& candidates,
                                      const CameraIntrinsics& k, const Pose& rel,
                                      const CullingThresholds& thresholds);

struct SampleDiagnostics {
    int dropped_cheirality = 0;
    int dropped_parallax = 0;
};

/// Triangulates each pair against the VO relative pose and emits the
/// depth-ratio samples s = d / v. Pairs failing cheirality or the parallax
/// floor are dropped.
std::vector<ScaleSample> compute_scale_samples(const std::vector<MatchedPair>& pairs,
                                               const CameraIntrinsics& k, const Pose& rel,
                                               SampleDiagnostics* diag = nullptr);

struct RansacConfig {
    int iterations = 100;
    double inlier_tol = 0.05;  // relative deviation from the hypothesis
    int min_samples = 10;
    int min_inliers = 8;
    std::uint64_t seed = 0;
};

/// 1-point RANSAC on the scalar scale model; the result is the mean of the
/// largest consensus set (ties broken by smaller relative spread).
/// When the sample count does not exceed cfg.iterations every sample is tried
/// as a hypothesis, making the search exhaustive.
ScaleEstimate ransac_scale(const std::vector<ScaleSample>& samples, const RansacConfig& cfg);

/// Correction trigger: |scale - 1| >= 2%.
bool should_correct(const ScaleEstimate& est);

/// Rescales the local map about its reference keyframe C_0: translations and
/// map points expressed in the C_0 frame are multiplied by `scale`, rotations
/// and the C_0 pose itself are untouched.
LocalMap apply_scale_correction(const LocalMap& map, double scale);

}  // namespace vlo
