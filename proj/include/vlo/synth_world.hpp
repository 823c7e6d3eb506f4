#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vlo/geometry.hpp"
#include "vlo/image_ops.hpp"

namespace vlo {

/// Deterministic procedural texture anchored in plane coordinates.
/// The smooth component is multi-octave value noise; the block component is a
/// nearest-neighbour lattice that produces sharp edges and corners.
struct PlaneTexture {
    double base = 120.0;        // mean intensity
    double amp_smooth = 40.0;   // smooth octave amplitude
    double amp_block = 50.0;    // blocky lattice amplitude
    double frequency = 0.7;     // lattice cells per meter (smooth component)
    double block_frequency = 2.0;
    double amp_stripe = 0.0;       // diagonal stripe amplitude (off by default)
    double stripe_frequency = 0.0; // stripe cells per meter along the diagonal
    int octaves = 3;
    std::uint64_t seed = 1;
};

struct Plane {
    Vec3 anchor = Vec3::Zero();
    Vec3 normal = Vec3::UnitZ();       // unit length
    double extent_u = 1e6;             // half extents along the in-plane axes
    double extent_v = 1e6;
    PlaneTexture texture;

    Vec3 axis_u() const;  // deterministic in-plane basis
    Vec3 axis_v() const;
};

struct RayHit {
    Vec3 point;
    double range = 0.0;
    int plane_index = -1;
};

struct Scene {
    std::vector<Plane> planes;
    std::uint8_t background_intensity = 30;

    std::optional<RayHit> raycast(const Vec3& origin, const Vec3& dir) const;
    double intensity_at(const RayHit& hit) const;
};

/// Forward-driving world: textured ground plane plus side and far walls.
Scene standard_scene(std::uint64_t seed);

/// Texture-poor corridor: two parallel walls and a floor, near-zero texture
/// amplitude. Geometrically unconstrained along the corridor (z) axis.
Scene corridor_scene(std::uint64_t seed);

struct LidarModel {
    int beam_count = 64;
    double vertical_fov_min_deg = -20.0;
    double vertical_fov_max_deg = 2.0;
    double azimuth_step_deg = 0.5;
    double range_noise_sigma = 0.0;
    double max_range = 120.0;
    std::uint64_t seed = 0;
};

enum class DriftKind { constant, linear_in_distance, random_walk };

struct DriftModel {
    DriftKind kind = DriftKind::constant;
    double scale = 1.0;          // constant factor, or the starting value
    double slope_per_meter = 0.0;  // linear-in-distance term
    double random_walk_sigma = 0.0;  // per-frame log-scale sigma
    double rot_noise_sigma_deg = 0.0;
    double trans_noise_sigma = 0.0;
    std::uint64_t seed = 0;
};

enum class TrajectoryKind { straight, arc, corridor_detour };

struct TrajectoryConfig {
    TrajectoryKind kind = TrajectoryKind::straight;
    double length = 100.0;  // meters along the path
    double speed = 10.0;    // m/s
    double rate = 10.0;     // Hz
    double arc_radius = 50.0;
    // optional speed step: speed multiplies by `factor` after `at_fraction` of the path
    double speed_step_fraction = 1.0;
    double speed_step_factor = 1.0;
};

/// Camera convention: z forward, x right, y down; world = first camera frame.
std::vector<TimedPose> generate_trajectory(const TrajectoryConfig& cfg);

std::vector<TimedPose> generate_trajectory(TrajectoryKind kind, double length, double speed,
                                           double rate);

/// Ray-casts every pixel of the virtual camera. `cam_pose` is T_w^C.
ImageGray render_image(const Scene& scene, const CameraIntrinsics& k, const Pose& cam_pose);

/// One ray per (beam, azimuth); returns sensor-frame hits with optional seeded
/// range noise and beam indices. `lidar_pose` is T_w^L.
PointCloud simulate_scan(const Scene& scene, const LidarModel& model, const Pose& lidar_pose);

/// Rebuilds a trajectory from its relative motions with per-frame scale and
/// noise applied; the first pose is unchanged.
std::vector<TimedPose> inject_vo_drift(const std::vector<TimedPose>& gt,
                                       const DriftModel& model);

struct Correspondence {
    Vec2 x_prev;
    Vec2 x_cur;
    double depth_prev = 0.0;  // camera-frame z in the previous camera
    Vec3 world_point;
};

/// Mathematically exact pixel correspondences of world points visible
/// (unoccluded, in bounds) from both cameras. Poses are T_w^C.
std::vector<Correspondence> exact_correspondences(const Scene& scene,
                                                  const CameraIntrinsics& k,
                                                  const Pose& cam_prev, const Pose& cam_cur,
                                                  const std::vector<Vec3>& world_points);

}  // namespace vlo
