#include "vlo/traj_eval.hpp"

#include <algorithm>
#include <cmath>

namespace vlo {

namespace {

constexpr double kAssocTol = 0.005;  // seconds

Pose interpolate_pose(const TimedPose& a, const TimedPose& b, double t) {
    const double span = b.timestamp - a.timestamp;
    const double u = span > 0.0 ? (t - a.timestamp) / span : 0.0;
    Pose out;
    out.translation = (1.0 - u) * a.pose.translation + u * b.pose.translation;
    out.rotation = a.pose.rotation.slerp(u, b.pose.rotation);
    return out;
}

/// est poses sampled at gt timestamps (exact match within tolerance, else
/// interpolated); gt samples outside est's time range are skipped.
std::vector<std::pair<Pose, Pose>> associate(const Trajectory& gt, const Trajectory& est) {
    std::vector<std::pair<Pose, Pose>> pairs;
    for (const auto& g : gt.samples) {
        // nearest est sample by timestamp
        auto it = std::lower_bound(est.samples.begin(), est.samples.end(), g.timestamp,
                                   [](const TimedPose& tp, double t) { return tp.timestamp < t; });
        const TimedPose* nearest = nullptr;
        if (it != est.samples.end()) nearest = &*it;
        if (it != est.samples.begin()) {
            const TimedPose* prev = &*(it - 1);
            if (!nearest || std::abs(prev->timestamp - g.timestamp) <
                                std::abs(nearest->timestamp - g.timestamp))
                nearest = prev;
        }
        if (!nearest) continue;
        if (std::abs(nearest->timestamp - g.timestamp) <= kAssocTol) {
            pairs.emplace_back(g.pose, nearest->pose);
        } else if (g.timestamp >= est.samples.front().timestamp &&
                   g.timestamp <= est.samples.back().timestamp) {
            const auto hi = std::lower_bound(
                est.samples.begin(), est.samples.end(), g.timestamp,
                [](const TimedPose& tp, double t) { return tp.timestamp < t; });
            const auto lo = hi == est.samples.begin() ? hi : hi - 1;
            pairs.emplace_back(g.pose, interpolate_pose(*lo, *hi, g.timestamp));
        }
    }
    return pairs;
}

double path_length_to(const Trajectory& t, std::vector<double>& cumulative) {
    cumulative.assign(t.samples.size(), 0.0);
    for (std::size_t i = 1; i < t.samples.size(); ++i)
        cumulative[i] = cumulative[i - 1] + (t.samples[i].pose.translation -
                                             t.samples[i - 1].pose.translation)
                                                .norm();
    return cumulative.empty() ? 0.0 : cumulative.back();
}

}  // namespace

double rotation_angle_deg(const Eigen::Quaterniond& a, const Eigen::Quaterniond& b) {
    const Eigen::AngleAxisd aa(a.conjugate() * b);
    double angle = std::abs(aa.angle());
    if (angle > M_PI) angle = 2.0 * M_PI - angle;
    return angle * 180.0 / M_PI;
}

Trajectory interpolate_trajectory(const Trajectory& traj, const std::vector<double>& timestamps) {
    if (traj.samples.empty()) throw InsufficientDataError("empty trajectory");
    Trajectory out;
    for (double t : timestamps) {
        if (t < traj.samples.front().timestamp || t > traj.samples.back().timestamp)
            throw OutOfRangeError("query timestamp outside the trajectory range");
        const auto hi = std::lower_bound(
            traj.samples.begin(), traj.samples.end(), t,
            [](const TimedPose& tp, double q) { return tp.timestamp < q; });
        TimedPose tp;
        tp.timestamp = t;
        if (hi != traj.samples.end() && hi->timestamp == t) {
            tp.pose = hi->pose;
        } else {
            tp.pose = interpolate_pose(*(hi - 1), *hi, t);
        }
        out.samples.push_back(tp);
    }
    return out;
}

EvalReport evaluate_ate_are(const Trajectory& gt, const Trajectory& est, AlignMode align) {
    const auto pairs = associate(gt, est);
    if (pairs.size() < 3)
        throw InsufficientDataError("fewer than 3 associated poses");

    SimilarityTransform xf;
    if (align != AlignMode::none) {
        std::vector<Vec3> ref, pts;
        ref.reserve(pairs.size());
        pts.reserve(pairs.size());
        for (const auto& [g, e] : pairs) {
            ref.push_back(g.translation);
            pts.push_back(e.translation);
        }
        xf = umeyama_align(ref, pts, align == AlignMode::similarity);
    }

    double trans_sq = 0.0, rot_sq = 0.0;
    for (const auto& [g, e] : pairs) {
        trans_sq += (xf.apply(e.translation) - g.translation).squaredNorm();
        const Eigen::Quaterniond e_rot = Eigen::Quaterniond(xf.rotation) * e.rotation;
        const double ang = rotation_angle_deg(g.rotation, e_rot);
        rot_sq += ang * ang;
    }
    EvalReport report;
    report.ate_rmse = std::sqrt(trans_sq / static_cast<double>(pairs.size()));
    report.are_deg = std::sqrt(rot_sq / static_cast<double>(pairs.size()));
    report.alignment = xf;
    return report;
}

KittiSegmentErrors kitti_segment_errors(const Trajectory& gt, const Trajectory& est) {
    if (gt.samples.size() != est.samples.size() || gt.samples.size() < 2)
        throw InsufficientDataError("trajectories must be associated sample-for-sample");

    std::vector<double> dist;
    const double total = path_length_to(gt, dist);
    if (total < 100.0) throw InsufficientDataError("gt path shorter than 100 m");

    static const double kLengths[] = {100, 200, 300, 400, 500, 600, 700, 800};
    double trans_sum = 0.0, rot_sum = 0.0;
    int count = 0;
    for (std::size_t start = 0; start < gt.samples.size(); ++start) {
        for (double len : kLengths) {
            const double target = dist[start] + len;
            if (target > total) break;
            const auto it = std::lower_bound(dist.begin() + start, dist.end(), target);
            if (it == dist.end()) break;
            const std::size_t end = static_cast<std::size_t>(it - dist.begin());

            const Pose gt_rel =
                compose(gt.samples[start].pose.inverse(), gt.samples[end].pose);
            const Pose est_rel =
                compose(est.samples[start].pose.inverse(), est.samples[end].pose);
            const Pose err = compose(gt_rel.inverse(), est_rel);
            trans_sum += err.translation.norm() / len * 100.0;
            rot_sum += rotation_angle_deg(Eigen::Quaterniond::Identity(), err.rotation) / len;
            ++count;
        }
    }
    if (count == 0) throw InsufficientDataError("no valid 100 m segments");
    return KittiSegmentErrors{trans_sum / count, rot_sum / count, count};
}

}  // namespace vlo
