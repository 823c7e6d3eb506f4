#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <optional>
#include <vector>

#include "vlo/errors.hpp"

namespace vlo {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Rigid transform T_A^B: maps coordinates of frame A into frame B.
struct Pose {
    Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
    Vec3 translation = Vec3::Zero();

    static Pose identity() { return Pose{}; }

    static Pose from_matrix(const Mat3& r, const Vec3& t) {
        return Pose{Eigen::Quaterniond(r).normalized(), t};
    }

    Mat3 rotation_matrix() const { return rotation.toRotationMatrix(); }

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

    Pose inverse() const {
        Eigen::Quaterniond rinv = rotation.conjugate();
        return Pose{rinv, rinv * (-translation)};
    }

    /// compose(a, b) applies b first, then a.
    friend Pose compose(const Pose& a, const Pose& b) {
        return Pose{(a.rotation * b.rotation).normalized(),
                    a.rotation * b.translation + a.translation};
    }
};

struct TimedPose {
    double timestamp = 0.0;
    Pose pose;
};

struct CameraIntrinsics {
    double fx = 0, fy = 0;
    double cx = 0, cy = 0;
    int width = 0, height = 0;

    Mat3 matrix() const {
        Mat3 k;
        k << fx, 0, cx, 0, fy, cy, 0, 0, 1;
        return k;
    }
};

struct PointCloud {
    std::vector<Vec3> points;
    std::vector<int> beam_index;  // empty or same size as points
    double timestamp = 0.0;

    bool has_beams() const { return !beam_index.empty(); }
    std::size_t size() const { return points.size(); }
};

struct ProjectedKeypoint {
    Vec2 pixel;
    double depth = 0.0;      // camera-frame z, meters
    Vec3 source_point;       // original sensor-frame point
    int beam = -1;
};

/// Line a*u + b*v + c = 0 in pixel coordinates, normalized so a^2 + b^2 = 1.
struct EpipolarLine {
    double a = 0, b = 0, c = 0;

    double signed_distance(const Vec2& px) const { return a * px.x() + b * px.y() + c; }
    Vec2 direction() const { return Vec2(-b, a); }
};

/// Pinhole projection of a LiDAR-frame point through extrinsics T_L^C.
/// Returns (pixel, camera-frame depth); no image bounds check.
std::pair<Vec2, double> project_point(const CameraIntrinsics& k, const Pose& t_lidar_cam,
                                      const Vec3& p);

/// Projects a whole cloud, keeping only points with positive depth inside the
/// image. When two points fall in the same integer pixel cell the nearer one wins.
std::vector<ProjectedKeypoint> project_cloud(const CameraIntrinsics& k,
                                             const Pose& t_lidar_cam,
                                             const PointCloud& cloud);

/// Epipolar line of x_prev in the current image. `rel` is the pose of the
/// previous camera with respect to the current one (maps prev-frame points
/// into the current frame).
EpipolarLine epipolar_line(const CameraIntrinsics& k, const Pose& rel, const Vec2& x_prev);

struct TriangulationResult {
    Vec3 point;      // in the previous camera frame
    double depth;    // z in the previous camera frame
};

/// Linear (DLT) two-view triangulation. Throws on zero baseline, cheirality
/// failure, or ray parallax below 0.5 degrees.
TriangulationResult triangulate_pair(const CameraIntrinsics& k, const Pose& rel,
                                     const Vec2& x_prev, const Vec2& x_cur);

struct SimilarityTransform {
    double scale = 1.0;
    Mat3 rotation = Mat3::Identity();
    Vec3 translation = Vec3::Zero();

    Vec3 apply(const Vec3& p) const { return scale * (rotation * p) + translation; }
};

/// Closed-form least-squares alignment mapping `estimate` onto `reference`.
/// With `with_scale` off the returned scale is fixed at 1.
SimilarityTransform umeyama_align(const std::vector<Vec3>& reference,
                                  const std::vector<Vec3>& estimate, bool with_scale);

/// Trajectory text format: one "timestamp tx ty tz qx qy qz qw" line per pose.
std::vector<TimedPose> read_trajectory_file(const std::string& path);
void write_trajectory_file(const std::string& path, const std::vector<TimedPose>& poses);

}  // namespace vlo
