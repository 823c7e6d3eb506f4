#include "vlo/scale_corrector.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace vlo {

std::vector<MatchedPair> cull_matches(const std::vector<TrackedCandidate>& candidates,
                                      const CameraIntrinsics& k, const Pose& rel,
                                      const CullingThresholds& thresholds) {
    std::vector<MatchedPair> kept;
    for (const auto& cand : candidates) {
        const EpipolarLine line = epipolar_line(k, rel, cand.x_prev);
        const double normal_error = std::abs(line.signed_distance(cand.x_cur));
        if (normal_error >= thresholds.max_normal_error) continue;
        const double grad_norm = cand.grad_cur.norm();
        if (grad_norm == 0.0) continue;
        const double abs_cos =
            std::abs(line.direction().dot(cand.grad_cur)) / grad_norm;  // |epi| = 1
        if (abs_cos <= thresholds.min_abs_cos) continue;
        kept.push_back(cand);
    }
    return kept;
}

std::vector<ScaleSample> compute_scale_samples(const std::vector<MatchedPair>& pairs,
                                               const CameraIntrinsics& k, const Pose& rel,
                                               SampleDiagnostics* diag) {
    std::vector<ScaleSample> samples;
    for (const auto& pair : pairs) {
        try {
            const TriangulationResult tri = triangulate_pair(k, rel, pair.x_prev, pair.x_cur);
            samples.push_back(ScaleSample{pair.lidar_depth / tri.depth, pair.lidar_depth,
                                          tri.depth});
        } catch (const BehindCameraError&) {
            if (diag) ++diag->dropped_cheirality;
        } catch (const LowParallaxError&) {
            if (diag) ++diag->dropped_parallax;
        }
    }
    return samples;
}

namespace {

struct Consensus {
    std::vector<int> inliers;
    double spread = 0.0;
};

Consensus evaluate_hypothesis(const std::vector<ScaleSample>& samples, double s0, double tol) {
    Consensus c;
    for (int i = 0; i < static_cast<int>(samples.size()); ++i)
        if (std::abs(samples[i].s - s0) / s0 <= tol) c.inliers.push_back(i);
    if (c.inliers.size() >= 2) {
        double mean = 0.0;
        for (int i : c.inliers) mean += samples[i].s;
        mean /= static_cast<double>(c.inliers.size());
        double var = 0.0;
        for (int i : c.inliers) var += (samples[i].s - mean) * (samples[i].s - mean);
        var /= static_cast<double>(c.inliers.size());
        c.spread = std::sqrt(var) / mean;
    }
    return c;
}

}  // namespace

ScaleEstimate ransac_scale(const std::vector<ScaleSample>& samples, const RansacConfig& cfg) {
    const int n = static_cast<int>(samples.size());
    if (n < cfg.min_samples)
        throw InsufficientSamplesError("got " + std::to_string(n) + " scale samples, need " +
                                       std::to_string(cfg.min_samples));

    std::vector<int> hypotheses;
    if (n <= cfg.iterations) {
        hypotheses.resize(n);
        for (int i = 0; i < n; ++i) hypotheses[i] = i;
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        hypotheses.resize(cfg.iterations);
        for (int& h : hypotheses) h = pick(rng);
    }

    Consensus best;
    for (int h : hypotheses) {
        Consensus c = evaluate_hypothesis(samples, samples[h].s, cfg.inlier_tol);
        if (c.inliers.size() > best.inliers.size() ||
            (c.inliers.size() == best.inliers.size() && !c.inliers.empty() &&
             c.spread < best.spread)) {
            best = std::move(c);
        }
    }

    if (static_cast<int>(best.inliers.size()) < cfg.min_inliers)
        throw NoConsensusError("best consensus has " + std::to_string(best.inliers.size()) +
                               " inliers, need " + std::to_string(cfg.min_inliers));

    double mean = 0.0;
    for (int i : best.inliers) mean += samples[i].s;
    mean /= static_cast<double>(best.inliers.size());

    ScaleEstimate est;
    est.scale = mean;
    est.inlier_count = static_cast<int>(best.inliers.size());
    est.sample_count = n;
    est.inlier_spread = best.spread;
    return est;
}

bool should_correct(const ScaleEstimate& est) { return std::abs(est.scale - 1.0) >= 0.02; }

LocalMap apply_scale_correction(const LocalMap& map, double scale) {
    if (!(scale > 0.0)) throw std::domain_error("scale must be positive");
    if (map.keyframe_poses.empty() || map.reference_index >= map.keyframe_poses.size())
        throw std::domain_error("local map needs a valid reference keyframe");

    const Pose t_ref = map.keyframe_poses[map.reference_index];
    const Pose t_ref_inv = t_ref.inverse();

    LocalMap out = map;
    for (auto& pose : out.keyframe_poses) {
        Pose in_ref = compose(t_ref_inv, pose);
        in_ref.translation *= scale;
        pose = compose(t_ref, in_ref);
    }
    for (auto& point : out.map_points) {
        point = t_ref.apply(scale * t_ref_inv.apply(point));
    }
    return out;
}

}  // namespace vlo
