#pragma once

#include <optional>
#include <vector>

#include "vlo/geometry.hpp"

namespace vlo {

struct Trajectory {
    std::vector<TimedPose> samples;  // strictly increasing timestamps
};

enum class AlignMode { none, rigid, similarity };

struct EvalReport {
    double ate_rmse = 0.0;
    std::optional<double> are_deg;
    std::optional<double> kitti_trans_pct;
    std::optional<double> kitti_rot_deg_per_m;
    SimilarityTransform alignment;
};

/// Linear translation / slerp rotation interpolation at the query timestamps.
Trajectory interpolate_trajectory(const Trajectory& traj, const std::vector<double>& timestamps);

/// Associates est to gt by timestamp (0.005 s tolerance, interpolating
/// otherwise), optionally aligns, and reports translation / rotation RMSE.
EvalReport evaluate_ate_are(const Trajectory& gt, const Trajectory& est, AlignMode align);

struct KittiSegmentErrors {
    double trans_pct = 0.0;
    double rot_deg_per_m = 0.0;
    int segment_count = 0;
};

/// KITTI-style relative errors averaged over 100..800 m segments from every
/// start index.
KittiSegmentErrors kitti_segment_errors(const Trajectory& gt, const Trajectory& est);

/// Geodesic angle between two orientations, degrees.
double rotation_angle_deg(const Eigen::Quaterniond& a, const Eigen::Quaterniond& b);

}  // namespace vlo
