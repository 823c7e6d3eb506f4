#include "vlo/geometry.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>

namespace vlo {

namespace {
constexpr double kMinDepth = 1e-6;
constexpr double kMinBaseline = 1e-6;
constexpr double kMinParallaxDeg = 0.5;

Mat3 skew(const Vec3& v) {
    Mat3 m;
    m << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
    return m;
}
}  // namespace

std::pair<Vec2, double> project_point(const CameraIntrinsics& k, const Pose& t_lidar_cam,
                                      const Vec3& p) {
    const Vec3 q = t_lidar_cam.apply(p);
    if (q.z() <= kMinDepth)
        throw BehindCameraError("point behind camera, z = " + std::to_string(q.z()));
    const Vec2 pixel(k.fx * q.x() / q.z() + k.cx, k.fy * q.y() / q.z() + k.cy);
    return {pixel, q.z()};
}

std::vector<ProjectedKeypoint> project_cloud(const CameraIntrinsics& k,
                                             const Pose& t_lidar_cam,
                                             const PointCloud& cloud) {
    // cell key -> index into out; nearest depth wins per integer pixel cell
    std::unordered_map<long long, std::size_t> cell_best;
    std::vector<ProjectedKeypoint> out;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        const Vec3& p = cloud.points[i];
        const Vec3 q = t_lidar_cam.apply(p);
        if (q.z() <= kMinDepth) continue;
        const Vec2 px(k.fx * q.x() / q.z() + k.cx, k.fy * q.y() / q.z() + k.cy);
        if (px.x() < 0.0 || px.x() >= k.width || px.y() < 0.0 || px.y() >= k.height)
            continue;
        ProjectedKeypoint kp;
        kp.pixel = px;
        kp.depth = q.z();
        kp.source_point = p;
        kp.beam = cloud.has_beams() ? cloud.beam_index[i] : -1;
        const long long key =
            static_cast<long long>(std::floor(px.y())) * (k.width + 1) +
            static_cast<long long>(std::floor(px.x()));
        auto it = cell_best.find(key);
        if (it == cell_best.end()) {
            cell_best.emplace(key, out.size());
            out.push_back(kp);
        } else if (kp.depth < out[it->second].depth) {
            out[it->second] = kp;
        }
    }
    return out;
}

EpipolarLine epipolar_line(const CameraIntrinsics& k, const Pose& rel, const Vec2& x_prev) {
    if (rel.translation.norm() <= kMinBaseline)
        throw DegenerateEpipolarError("near-zero translation, epipolar line undefined");
    const Mat3 kmat = k.matrix();
    const Mat3 fundamental = kmat.transpose().inverse() * skew(rel.translation) *
                             rel.rotation_matrix() * kmat.inverse();
    const Vec3 l = fundamental * Vec3(x_prev.x(), x_prev.y(), 1.0);
    const double norm = std::hypot(l.x(), l.y());
    if (norm < 1e-12)
        throw DegenerateEpipolarError("point maps to the epipole, line undefined");
    return EpipolarLine{l.x() / norm, l.y() / norm, l.z() / norm};
}

TriangulationResult triangulate_pair(const CameraIntrinsics& k, const Pose& rel,
                                     const Vec2& x_prev, const Vec2& x_cur) {
    if (rel.translation.norm() <= kMinBaseline)
        throw DegenerateEpipolarError("zero baseline, cannot triangulate");
    const Mat3 kmat = k.matrix();
    Eigen::Matrix<double, 3, 4> p1 = Eigen::Matrix<double, 3, 4>::Zero();
    p1.block<3, 3>(0, 0) = kmat;
    Eigen::Matrix<double, 3, 4> p2;
    p2.block<3, 3>(0, 0) = rel.rotation_matrix();
    p2.col(3) = rel.translation;
    p2 = kmat * p2;

    Eigen::Matrix4d a;
    a.row(0) = x_prev.x() * p1.row(2) - p1.row(0);
    a.row(1) = x_prev.y() * p1.row(2) - p1.row(1);
    a.row(2) = x_cur.x() * p2.row(2) - p2.row(0);
    a.row(3) = x_cur.y() * p2.row(2) - p2.row(1);

    Eigen::JacobiSVD<Eigen::Matrix4d> svd(a, Eigen::ComputeFullV);
    const Eigen::Vector4d xh = svd.matrixV().col(3);
    if (std::abs(xh.w()) < 1e-12)
        throw LowParallaxError("triangulated point at infinity");
    const Vec3 x = xh.head<3>() / xh.w();

    if (x.z() <= 0.0)
        throw BehindCameraError("triangulated point behind previous camera");
    const Vec3 x_in_cur = rel.apply(x);
    if (x_in_cur.z() <= 0.0)
        throw BehindCameraError("triangulated point behind current camera");

    const Vec3 center_cur = rel.inverse().translation;  // current camera center in prev frame
    const Vec3 ray1 = x.normalized();
    const Vec3 ray2 = (x - center_cur).normalized();
    const double cos_angle = std::clamp(ray1.dot(ray2), -1.0, 1.0);
    const double angle_deg = std::acos(cos_angle) * 180.0 / M_PI;
    if (angle_deg < kMinParallaxDeg)
        throw LowParallaxError("parallax " + std::to_string(angle_deg) + " deg below floor");

    return TriangulationResult{x, x.z()};
}

SimilarityTransform umeyama_align(const std::vector<Vec3>& reference,
                                  const std::vector<Vec3>& estimate, bool with_scale) {
    const std::size_t n = reference.size();
    if (n < 3 || estimate.size() != n)
        throw AlignmentDegenerateError("need at least 3 point pairs");

    Vec3 mu_ref = Vec3::Zero(), mu_est = Vec3::Zero();
    for (std::size_t i = 0; i < n; ++i) {
        mu_ref += reference[i];
        mu_est += estimate[i];
    }
    mu_ref /= static_cast<double>(n);
    mu_est /= static_cast<double>(n);

    Mat3 sigma = Mat3::Zero();
    double var_est = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 r = reference[i] - mu_ref;
        const Vec3 e = estimate[i] - mu_est;
        sigma += r * e.transpose();
        var_est += e.squaredNorm();
    }
    sigma /= static_cast<double>(n);
    var_est /= static_cast<double>(n);
    if (var_est < 1e-18)
        throw AlignmentDegenerateError("estimate points are coincident");

    Eigen::JacobiSVD<Mat3> svd(sigma, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Vec3 d = svd.singularValues();
    // collinear sets leave the rotation underdetermined
    if (d(1) < 1e-12 * std::max(d(0), 1e-300))
        throw AlignmentDegenerateError("degenerate (collinear) point configuration");

    Mat3 s = Mat3::Identity();
    if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0) s(2, 2) = -1.0;

    SimilarityTransform result;
    result.rotation = svd.matrixU() * s * svd.matrixV().transpose();
    result.scale = with_scale ? (d(0) * s(0, 0) + d(1) * s(1, 1) + d(2) * s(2, 2)) / var_est
                              : 1.0;
    result.translation = mu_ref - result.scale * (result.rotation * mu_est);
    return result;
}

std::vector<TimedPose> read_trajectory_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trajectory file: " + path);
    std::vector<TimedPose> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        double ts, tx, ty, tz, qx, qy, qz, qw;
        if (!(ss >> ts >> tx >> ty >> tz >> qx >> qy >> qz >> qw))
            throw ParseError(path + ":" + std::to_string(lineno) + ": malformed pose line");
        TimedPose tp;
        tp.timestamp = ts;
        tp.pose.translation = Vec3(tx, ty, tz);
        tp.pose.rotation = Eigen::Quaterniond(qw, qx, qy, qz).normalized();
        out.push_back(tp);
    }
    return out;
}

void write_trajectory_file(const std::string& path, const std::vector<TimedPose>& poses) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write trajectory file: " + path);
    out << std::setprecision(17);
    for (const auto& tp : poses) {
        const auto& q = tp.pose.rotation;
        const auto& t = tp.pose.translation;
        out << tp.timestamp << ' ' << t.x() << ' ' << t.y() << ' ' << t.z() << ' '
            << q.x() << ' ' << q.y() << ' ' << q.z() << ' ' << q.w() << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace vlo
