#include "vlo/lidar_odom.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace vlo {

namespace {

/// Uniform hash grid with cell size >= the query radius, so scanning the 27
/// surrounding cells is an exact radius search.
class PointGrid {
public:
    PointGrid(const std::vector<Vec3>& points, double cell) : points_(points), cell_(cell) {
        for (std::size_t i = 0; i < points.size(); ++i)
            cells_[key(points[i])].push_back(static_cast<int>(i));
    }

    template <typename Fn>
    void for_each_near(const Vec3& p, Fn&& fn) const {
        const auto c = coords(p);
        for (int dz = -1; dz <= 1; ++dz)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    const auto it = cells_.find(pack(c[0] + dx, c[1] + dy, c[2] + dz));
                    if (it == cells_.end()) continue;
                    for (int idx : it->second) fn(idx);
                }
    }

    /// Nearest point within `radius`, or -1.
    int nearest(const Vec3& p, double radius) const {
        int best = -1;
        double best_d2 = radius * radius;
        for_each_near(p, [&](int idx) {
            const double d2 = (points_[idx] - p).squaredNorm();
            if (d2 <= best_d2) {
                if (d2 < best_d2 || best == -1 || idx < best) best = idx;
                best_d2 = d2;
            }
        });
        return best;
    }

private:
    std::array<std::int64_t, 3> coords(const Vec3& p) const {
        return {static_cast<std::int64_t>(std::floor(p.x() / cell_)),
                static_cast<std::int64_t>(std::floor(p.y() / cell_)),
                static_cast<std::int64_t>(std::floor(p.z() / cell_))};
    }
    static std::int64_t pack(std::int64_t x, std::int64_t y, std::int64_t z) {
        // injective for coordinates within +/-2^20 cells, so distinct cells
        // never share a bucket
        constexpr std::int64_t mask = (std::int64_t(1) << 21) - 1;
        return ((x & mask) << 42) | ((y & mask) << 21) | (z & mask);
    }
    std::int64_t key(const Vec3& p) const {
        const auto c = coords(p);
        return pack(c[0], c[1], c[2]);
    }

    const std::vector<Vec3>& points_;
    double cell_;
    std::unordered_map<std::int64_t, std::vector<int>> cells_;
};

}  // namespace

NormalCloud estimate_normals(const PointCloud& cloud, int k, double radius_cap) {
    if (k < 3) throw std::domain_error("normal estimation needs k >= 3");
    const auto& pts = cloud.points;
    NormalCloud out;
    out.points = pts;
    out.normals.assign(pts.size(), Vec3::Zero());
    out.valid.assign(pts.size(), false);

    const PointGrid grid(pts, radius_cap);
    const double cap2 = radius_cap * radius_cap;
    std::vector<std::pair<double, int>> nbrs;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        nbrs.clear();
        grid.for_each_near(pts[i], [&](int idx) {
            if (static_cast<std::size_t>(idx) == i) return;
            const double d2 = (pts[idx] - pts[i]).squaredNorm();
            if (d2 <= cap2) nbrs.emplace_back(d2, idx);
        });
        if (static_cast<int>(nbrs.size()) < k) continue;
        std::nth_element(nbrs.begin(), nbrs.begin() + (k - 1), nbrs.end());
        nbrs.resize(k);
        // deterministic neighbour set under distance ties
        std::sort(nbrs.begin(), nbrs.end());

        Vec3 mean = Vec3::Zero();
        for (const auto& [d2, idx] : nbrs) mean += pts[idx];
        mean /= static_cast<double>(k);
        Mat3 cov = Mat3::Zero();
        for (const auto& [d2, idx] : nbrs) {
            const Vec3 d = pts[idx] - mean;
            cov += d * d.transpose();
        }
        Eigen::SelfAdjointEigenSolver<Mat3> eig(cov);
        // rank-deficient neighbourhood (relative tolerance): curve-like point
        // sets, e.g. a single grazing scan ring, have no stable surface normal;
        // thick neighbourhoods straddle a crease and fit a spurious plane
        if (eig.eigenvalues()(1) < 1e-12 ||
            eig.eigenvalues()(1) < 0.01 * eig.eigenvalues()(2) ||
            eig.eigenvalues()(0) > 0.05 * eig.eigenvalues()(2))
            continue;
        out.normals[i] = eig.eigenvectors().col(0);
        out.valid[i] = true;
    }
    return out;
}

IcpResult point_to_plane_icp(const PointCloud& source, const NormalCloud& target,
                             const Pose& init, const IcpConfig& cfg) {
    if (source.points.empty() || target.points.empty())
        throw RegistrationError("empty cloud");

    const PointGrid grid(target.points, cfg.max_corr_dist);
    IcpResult result;
    result.pose = init;

    // Characteristic length balancing the rotation and translation blocks of
    // the normal equations, so one eigenvalue threshold covers both.
    double sq_len = 0.0;
    for (const Vec3& p : source.points) sq_len += p.squaredNorm();
    const double scale_len = std::max(std::sqrt(sq_len / source.points.size()), 1e-9);

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        Eigen::Matrix<double, 6, 6> h = Eigen::Matrix<double, 6, 6>::Zero();
        Eigen::Matrix<double, 6, 1> b = Eigen::Matrix<double, 6, 1>::Zero();
        double sq_sum = 0.0;
        int count = 0;
        for (const Vec3& p : source.points) {
            const Vec3 q = result.pose.apply(p);
            const int j = grid.nearest(q, cfg.max_corr_dist);
            if (j < 0 || !target.valid[j]) continue;
            const Vec3& n = target.normals[j];
            const double r = n.dot(q - target.points[j]);
            Eigen::Matrix<double, 6, 1> jac;
            jac.head<3>() = q.cross(n) / scale_len;
            jac.tail<3>() = n;
            h += jac * jac.transpose();
            b += jac * r;
            sq_sum += r * r;
            ++count;
        }
        if (count < cfg.min_correspondences)
            throw RegistrationError("only " + std::to_string(count) +
                                    " correspondences, registration failed");
        result.residual = std::sqrt(sq_sum / count);
        result.iterations = iter + 1;

        // Solve the normal equations through an eigendecomposition and drop
        // near-null directions: in degenerate scenes (e.g. a corridor) the
        // unconstrained motion component must stay at the initial guess
        // instead of absorbing numerical noise.
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es(h);
        const double eig_floor = 1e-2 * es.eigenvalues()(5);
        Eigen::Matrix<double, 6, 1> x = Eigen::Matrix<double, 6, 1>::Zero();
        for (int d = 0; d < 6; ++d) {
            if (es.eigenvalues()(d) <= eig_floor) continue;
            const Eigen::Matrix<double, 6, 1> v = es.eigenvectors().col(d);
            x -= v * (v.dot(b) / es.eigenvalues()(d));
        }
        if (!x.allFinite()) throw RegistrationError("singular normal equations");
        const Vec3 theta = x.head<3>() / scale_len;
        Pose delta;
        if (theta.norm() > 1e-15)
            delta.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(theta.norm(), theta.normalized()));
        delta.translation = x.tail<3>();
        result.pose = compose(delta, result.pose);
        if (x.norm() < cfg.update_eps) break;
    }
    return result;
}

OdomStepResult lidar_odometry_step(OdomState& state, const PointCloud& scan,
                                   const std::optional<Pose>& vo_relative, OdomInitMode mode,
                                   const IcpConfig& cfg, int normal_k) {
    OdomStepResult out;
    if (state.frame_index == 0) {
        state.last_pose = Pose::identity();
        state.last_relative = Pose::identity();
        state.last_scan = scan;
        state.last_normals = estimate_normals(scan, normal_k);
        state.frame_index = 1;
        out.pose = Pose::identity();
        return out;
    }

    Pose init;
    if (mode == OdomInitMode::bootstrap && vo_relative) {
        init = *vo_relative;
    } else {
        init = state.last_relative;
        if (mode == OdomInitMode::bootstrap) {
            out.used_fallback = true;
            ++state.fallback_count;
        }
    }

    const IcpResult icp = point_to_plane_icp(scan, state.last_normals, init, cfg);
    state.last_relative = icp.pose;
    state.last_pose = compose(state.last_pose, icp.pose);
    state.last_scan = scan;
    state.last_normals = estimate_normals(scan, normal_k);
    ++state.frame_index;
    out.pose = state.last_pose;
    return out;
}

}  // namespace vlo
