#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vlo/geometry.hpp"
#include "vlo/image_ops.hpp"
#include "vlo/kitti.hpp"
#include "vlo/lidar_odom.hpp"
#include "vlo/scale_corrector.hpp"
#include "vlo/synth_world.hpp"
#include "vlo/traj_eval.hpp"

namespace vlo {

enum class RunMode { synthetic, kitti };

struct RunConfig {
    RunMode mode = RunMode::synthetic;

    // synthetic world
    std::string scene = "standard";  // standard | corridor
    TrajectoryConfig trajectory;
    LidarModel lidar;
    DriftModel drift;
    CameraIntrinsics intrinsics{400.0, 400.0, 256.0, 192.0, 512, 384};
    Pose t_lidar_cam{Eigen::Quaterniond::Identity(), Vec3(0.1, 0.0, 0.0)};

    // kitti mode
    std::string sequence_dir;
    std::string vo_trajectory_file;
    std::string gt_trajectory_file;  // optional
    int max_frames = -1;

    // estimation
    int keyframe_stride = 2;
    int pyramid_levels = 4;
    CullingThresholds culling;
    RansacConfig ransac;
    SelectionConfig selection;
    TrackerConfig tracker;
    int local_map_size = 10;
    double track_noise_sigma = 0.0;  // test instrumentation, px

    // lidar odometry
    bool lidar_odom = true;
    OdomInitMode odom_mode = OdomInitMode::bootstrap;
    IcpConfig icp;
    int normal_k = 10;

    std::uint64_t seed = 0;
};

struct CorrectionEvent {
    double timestamp = 0.0;
    int frame = 0;
    int keypoint_count = 0;
    int tracked_count = 0;
    int culled_count = 0;  // pairs surviving the epipolar culling
    int sample_count = 0;
    int inlier_count = 0;
    double scale = 1.0;
    bool triggered = false;
};

struct RunReport {
    std::vector<TimedPose> gt;            // empty when unavailable
    std::vector<TimedPose> vo_input;      // drifting VO, T_w^C
    std::vector<TimedPose> vo_corrected;  // scale-corrected VO, T_w^C
    std::vector<TimedPose> lidar_poses;   // converted to the camera/world frame
    std::vector<CorrectionEvent> events;
    int keyframe_count = 0;
    int estimation_failures = 0;
    int fallback_count = 0;
    std::optional<EvalReport> vo_eval;
    std::optional<EvalReport> lidar_eval;
};

/// Runs the full synchronized loop: VO scale correction at every keyframe and
/// (optionally) visual-bootstrapped LiDAR odometry at every frame.
RunReport run_pipeline(const RunConfig& cfg);

/// Writes trajectory_vo.txt, trajectory_lidar.txt, events.csv and report.json.
void emit_report(const RunReport& report, const std::string& out_dir);

/// Plain-text "key = value" run configuration; unknown keys are errors.
RunConfig parse_run_config(const std::string& path);
RunConfig parse_run_config_text(const std::string& text, const std::string& origin = "<config>");

/// Renders and exports a synthetic sequence in KITTI layout (used by the
/// kitti-import round-trip checks and for offline inspection).
void export_synthetic_sequence(const RunConfig& cfg, const std::string& out_dir, int frame_count);

}  // namespace vlo
