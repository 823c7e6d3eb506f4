// End-to-end acceptance gate. Each criterion prints one PASS/FAIL line; the
// process exits nonzero if any criterion fails.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>
#include <vector>

#include "vlo/pipeline.hpp"

using namespace vlo;

namespace {

int g_failures = 0;

void report(int criterion, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", criterion, name,
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// criterion 1: scale recovery on a noise-free constant-drift straight run
// ---------------------------------------------------------------------------

RunConfig straight_run_config(double drift_scale, std::uint64_t seed) {
    RunConfig cfg;
    cfg.trajectory.kind = TrajectoryKind::straight;
    cfg.trajectory.length = 199.0;  // 200 frames at 1 m per frame
    cfg.trajectory.speed = 10.0;
    cfg.trajectory.rate = 10.0;
    cfg.drift.scale = drift_scale;
    cfg.lidar_odom = false;
    // precision setup: a small tracker window limits perspective-looming bias,
    // and the relaxed pre-test gives a large sample population that tightens
    // the consensus mean
    cfg.tracker.window = 9;
    cfg.selection.sparse_mode = true;
    cfg.selection.fast_threshold = 12.0;
    cfg.selection.nms_radius = 3.0;
    cfg.seed = seed;
    return cfg;
}

void criterion_1() {
    bool pass = true;
    std::ostringstream detail;
    for (double alpha : {0.8, 0.9, 1.1, 1.25}) {
        const auto t0 = std::chrono::steady_clock::now();
        // a VO that reports translations 1/alpha times too long is corrected
        // by the depth-ratio estimate alpha
        const RunConfig cfg = straight_run_config(1.0 / alpha, 17);
        const RunReport run = run_pipeline(cfg);
        const double elapsed = seconds_since(t0);

        int triggered = 0;
        double worst = 0.0;
        for (const auto& e : run.events) {
            if (!e.triggered) continue;
            ++triggered;
            worst = std::max(worst, std::abs(e.scale - alpha) / alpha);
        }
        const bool ok = triggered >= 1 && worst <= 0.005 && elapsed < 60.0;
        pass = pass && ok;
        detail << "alpha=" << alpha << " triggered=" << triggered
               << " worst_rel_err=" << fmt(worst) << " t=" << fmt(elapsed) << "s; ";
    }
    report(1, "scale recovery", pass, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 2: end-to-end drift reduction under random-walk drift
// ---------------------------------------------------------------------------

void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    RunConfig cfg;
    cfg.trajectory.kind = TrajectoryKind::straight;
    cfg.trajectory.length = 500.0;
    cfg.trajectory.speed = 10.0;
    cfg.trajectory.rate = 5.0;
    cfg.drift.kind = DriftKind::random_walk;
    cfg.drift.random_walk_sigma = 0.005;
    cfg.track_noise_sigma = 0.3;
    cfg.lidar_odom = false;
    // the 2 m frame spacing doubles the keyframe baseline; the smaller window
    // keeps the tracker's perspective-distortion bias inside the 2% band
    cfg.tracker.window = 7;
    cfg.selection.sparse_mode = true;
    cfg.selection.fast_threshold = 12.0;
    cfg.selection.nms_radius = 3.0;
    cfg.seed = 23;
    const RunReport run = run_pipeline(cfg);
    const double elapsed = seconds_since(t0);

    const auto final_err = [&](const std::vector<TimedPose>& traj) {
        return (traj.back().pose.translation - run.gt.back().pose.translation).norm();
    };
    const double uncorrected = final_err(run.vo_input);
    const double corrected = final_err(run.vo_corrected);

    // replay the cumulative factor to recover the scale each event should see
    double factor = 1.0;
    int good = 0;
    const int stride = cfg.keyframe_stride;
    for (const auto& e : run.events) {
        const int i = e.frame;
        const double gt_dist = (run.gt[i].pose.translation -
                                run.gt[i - stride].pose.translation)
                                   .norm();
        const double vo_dist = (run.vo_input[i].pose.translation -
                                run.vo_input[i - stride].pose.translation)
                                   .norm();
        const double expected = gt_dist / (factor * vo_dist);
        if (std::abs(e.scale - expected) / expected <= 0.02) ++good;
        if (e.triggered) factor *= e.scale;
    }
    const double frac = run.events.empty()
                            ? 0.0
                            : static_cast<double>(good) / static_cast<double>(run.events.size());

    const bool pass = corrected * 5.0 <= uncorrected && frac >= 0.9 && elapsed < 180.0;
    report(2, "drift reduction", pass,
           "uncorrected=" + fmt(uncorrected) + "m corrected=" + fmt(corrected) +
               "m events=" + std::to_string(run.events.size()) +
               " within2pct=" + fmt(100.0 * frac) + "% t=" + fmt(elapsed) + "s");
}

// ---------------------------------------------------------------------------
// criterion 3: epipolar culling lifts the inlier fraction under tracking noise
// ---------------------------------------------------------------------------

void criterion_3() {
    const CameraIntrinsics intr{400.0, 400.0, 256.0, 192.0, 512, 384};
    int pre_inliers = 0, pre_total = 0, post_inliers = 0, post_total = 0;

    for (int frame = 0; frame < 20; ++frame) {
        const Scene scene = standard_scene(1000 + frame);
        Pose cam_prev;
        cam_prev.translation = Vec3(0.0, 0.0, 0.7 * frame);
        Pose cam_cur = cam_prev;
        // short baseline: scale samples are noise-dominated before culling
        cam_cur.translation += Vec3(0.0175, 0.0, 0.35);
        const Pose rel = compose(cam_cur.inverse(), cam_prev);

        std::vector<Vec3> probes;
        for (int py = 8; py < intr.height - 8; py += 12)
            for (int px = 8; px < intr.width - 8; px += 12) {
                const Vec3 dir_cam((px - intr.cx) / intr.fx, (py - intr.cy) / intr.fy, 1.0);
                const Vec3 dir = (cam_prev.rotation * dir_cam).normalized();
                if (const auto hit = scene.raycast(cam_prev.translation, dir))
                    probes.push_back(hit->point);
            }
        const auto corr = exact_correspondences(scene, intr, cam_prev, cam_cur, probes);
        const ImageGray img_cur = render_image(scene, intr, cam_cur);

        // aperture-problem tracking noise: large along the local edge, small
        // along the gradient, about 1 px rms in total
        std::mt19937_64 rng(900 + frame);
        std::normal_distribution<double> g(0.0, 1.0);
        std::vector<TrackedCandidate> candidates;
        for (const auto& c : corr) {
            if (c.x_cur.x() < 2 || c.x_cur.y() < 2 || c.x_cur.x() > intr.width - 3 ||
                c.x_cur.y() > intr.height - 3)
                continue;
            const Vec2 grad = gradient_at(img_cur, c.x_cur);
            if (grad.norm() < 1.0) continue;
            const Vec2 g_hat = grad.normalized();
            const Vec2 e_hat(-g_hat.y(), g_hat.x());
            const Vec2 noisy = c.x_cur + 0.98 * g(rng) * e_hat + 0.199 * g(rng) * g_hat;
            if (noisy.x() < 2 || noisy.y() < 2 || noisy.x() > intr.width - 3 ||
                noisy.y() > intr.height - 3)
                continue;
            TrackedCandidate cand;
            cand.x_prev = c.x_prev;
            cand.x_cur = noisy;
            cand.lidar_depth = c.depth_prev;
            cand.grad_cur = gradient_at(img_cur, noisy);
            candidates.push_back(cand);
        }

        const auto count_inliers = [&](const std::vector<ScaleSample>& samples) {
            int n = 0;
            for (const auto& s : samples)
                if (std::abs(s.s - 1.0) <= 0.05) ++n;
            return n;
        };
        const auto pre = compute_scale_samples(candidates, intr, rel);
        pre_inliers += count_inliers(pre);
        pre_total += static_cast<int>(pre.size());
        const auto culled = cull_matches(candidates, intr, rel, {});
        const auto post = compute_scale_samples(culled, intr, rel);
        post_inliers += count_inliers(post);
        post_total += static_cast<int>(post.size());
    }

    const double pre_frac = pre_total ? static_cast<double>(pre_inliers) / pre_total : 0.0;
    const double post_frac = post_total ? static_cast<double>(post_inliers) / post_total : 0.0;
    const bool pass = post_total > 0 && post_frac >= pre_frac + 0.15;
    report(3, "culling efficacy", pass,
           "pre=" + fmt(100.0 * pre_frac) + "% (" + std::to_string(pre_total) + ") post=" +
               fmt(100.0 * post_frac) + "% (" + std::to_string(post_total) + ")");
}

// ---------------------------------------------------------------------------
// criterion 4: trigger threshold grid
// ---------------------------------------------------------------------------

void criterion_4() {
    const double grid[] = {0.95, 0.97, 0.979, 0.98, 0.981, 1.019, 1.02, 1.021, 1.05};
    bool pass = true;
    for (double s : grid) {
        const bool fired = should_correct(ScaleEstimate{s, 10, 20, 0.0});
        if (fired != (std::abs(s - 1.0) >= 0.02)) pass = false;
    }
    report(4, "trigger fidelity", pass, "9-point grid around the 2% threshold");
}

// ---------------------------------------------------------------------------
// criterion 5: sparse-lidar keypoint adaptation
// ---------------------------------------------------------------------------

void criterion_5() {
    const CameraIntrinsics intr{400.0, 400.0, 256.0, 192.0, 512, 384};
    Pose extr;
    extr.translation = Vec3(0.1, 0.0, 0.0);
    const Scene scene = standard_scene(17);
    LidarModel lidar;
    lidar.beam_count = 16;

    bool counts_ok = true;
    std::ostringstream detail;
    for (int frame = 0; frame < 5; ++frame) {
        Pose cam;
        cam.translation = Vec3(0, 0, 3.0 * frame);
        lidar.seed = 100 + frame;
        const PointCloud cloud = simulate_scan(scene, lidar, compose(cam, extr));
        const ImageGray img = render_image(scene, intr, cam);
        const auto projected = project_cloud(intr, extr, cloud);

        SelectionConfig dense, sparse;
        sparse.sparse_mode = true;
        const int n_dense = static_cast<int>(select_keypoints(projected, img, dense).size());
        const int n_sparse = static_cast<int>(select_keypoints(projected, img, sparse).size());
        if (!(n_dense < 15 && n_sparse >= 50)) counts_ok = false;
        detail << n_dense << "/" << n_sparse << " ";
    }

    // scale recovery must still work from the sparse keypoints (1% tolerance)
    bool recovery_ok = true;
    for (double alpha : {0.8, 0.9, 1.1, 1.25}) {
        RunConfig cfg = straight_run_config(1.0 / alpha, 29);
        cfg.lidar.beam_count = 16;
        // a denser sweep compensates the 4x beam reduction: the estimator
        // needs a sample population, not vertical resolution
        cfg.lidar.azimuth_step_deg = 0.2;
        cfg.selection.sparse_mode = true;
        const RunReport run = run_pipeline(cfg);
        int triggered = 0;
        double worst = 0.0;
        for (const auto& e : run.events) {
            if (!e.triggered) continue;
            ++triggered;
            worst = std::max(worst, std::abs(e.scale - alpha) / alpha);
        }
        if (!(triggered >= 1 && worst <= 0.01)) recovery_ok = false;
        detail << "alpha=" << alpha << ":" << fmt(worst) << " ";
    }
    report(5, "sparse-lidar adaptation", counts_ok && recovery_ok,
           "dense/sparse keypoints + worst errors: " + detail.str());
}

// ---------------------------------------------------------------------------
// criterion 6: visual bootstrapping on the degenerate corridor detour
// ---------------------------------------------------------------------------

void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream detail;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        RunConfig cfg;
        cfg.scene = "corridor";
        cfg.trajectory.kind = TrajectoryKind::corridor_detour;
        cfg.trajectory.length = 36.0;
        cfg.trajectory.speed = 2.0;
        cfg.trajectory.rate = 4.0;
        cfg.trajectory.speed_step_fraction = 0.3;
        cfg.trajectory.speed_step_factor = 2.0;
        // azimuth dense relative to the beam count, so wall neighbourhoods
        // span several scan columns and fit stable normals
        cfg.lidar.beam_count = 16;
        cfg.lidar.azimuth_step_deg = 0.75;
        cfg.drift.trans_noise_sigma = 0.005;
        cfg.keyframe_stride = 1 << 20;  // no scale-correction keyframes
        cfg.seed = seed;

        cfg.odom_mode = OdomInitMode::bootstrap;
        const RunReport boot = run_pipeline(cfg);
        cfg.odom_mode = OdomInitMode::constant_velocity;
        const RunReport cvel = run_pipeline(cfg);

        if (!boot.lidar_eval || !cvel.lidar_eval) {
            pass = false;
            detail << "seed=" << seed << ": missing eval; ";
            continue;
        }
        const double ratio = cvel.lidar_eval->ate_rmse / boot.lidar_eval->ate_rmse;
        if (!(ratio >= 2.0)) pass = false;
        detail << "seed=" << seed << " boot=" << fmt(boot.lidar_eval->ate_rmse)
               << " cvel=" << fmt(cvel.lidar_eval->ate_rmse) << " ratio=" << fmt(ratio) << "; ";
    }
    const double elapsed = seconds_since(t0);
    pass = pass && elapsed < 120.0;
    report(6, "visual bootstrapping", pass, detail.str() + "t=" + fmt(elapsed) + "s");
}

// ---------------------------------------------------------------------------
// criterion 7: oracle equivalences
// ---------------------------------------------------------------------------

bool fast9_arc_oracle(const ImageGray& img, int px, int py, double threshold) {
    static const int ring[16][2] = {{0, -3}, {1, -3}, {2, -2}, {3, -1}, {3, 0},   {3, 1},
                                    {2, 2},  {1, 3},  {0, 3},  {-1, 3}, {-2, 2},  {-3, 1},
                                    {-3, 0}, {-3, -1}, {-2, -2}, {-1, -3}};
    const double c = img.at(px, py);
    for (int start = 0; start < 16; ++start) {
        bool bright = true, dark = true;
        for (int k = 0; k < 9; ++k) {
            const double v = img.at(px + ring[(start + k) % 16][0],
                                    py + ring[(start + k) % 16][1]);
            if (!(v > c + threshold)) bright = false;
            if (!(v < c - threshold)) dark = false;
        }
        if (bright || dark) return true;
    }
    return false;
}

void criterion_7() {
    bool fast_ok = true;
    {
        std::mt19937_64 rng(7001);
        std::uniform_int_distribution<int> intensity(0, 255);
        for (int trial = 0; trial < 1000 && fast_ok; ++trial) {
            ImageGray img = ImageGray::constant(16, 16, 0);
            for (auto& v : img.intensities) v = static_cast<std::uint8_t>(intensity(rng));
            for (int y = 3; y < img.height - 3 && fast_ok; ++y)
                for (int x = 3; x < img.width - 3; ++x)
                    if (is_fast9_corner(img, x, y, 20).is_corner !=
                        fast9_arc_oracle(img, x, y, 20)) {
                        fast_ok = false;
                        break;
                    }
        }
    }

    bool ransac_ok = true;
    {
        std::mt19937_64 rng(7002);
        std::uniform_real_distribution<double> u(0.5, 3.0);
        RansacConfig cfg;
        cfg.min_inliers = 1;
        for (int trial = 0; trial < 300 && ransac_ok; ++trial) {
            const int n = 10 + static_cast<int>(rng() % 3);  // sets of at most 12
            std::vector<ScaleSample> samples;
            for (int i = 0; i < n; ++i) {
                const double v = u(rng);
                samples.push_back(ScaleSample{v, v, 1.0});
            }
            int oracle = 0;
            for (const auto& h : samples) {
                int count = 0;
                for (const auto& s : samples)
                    if (std::abs(s.s - h.s) / h.s <= cfg.inlier_tol) ++count;
                oracle = std::max(oracle, count);
            }
            if (ransac_scale(samples, cfg).inlier_count != oracle) ransac_ok = false;
        }
    }

    bool normals_ok = true;
    {
        std::mt19937_64 rng(7003);
        std::uniform_real_distribution<double> u(-4.0, 4.0);
        for (int trial = 0; trial < 100 && normals_ok; ++trial) {
            PointCloud cloud;
            const int n = 50 + static_cast<int>(rng() % 50);
            for (int i = 0; i < n; ++i) cloud.points.emplace_back(u(rng), u(rng), u(rng));
            const NormalCloud fast = estimate_normals(cloud, 6, 2.0);

            for (std::size_t i = 0; i < cloud.points.size() && normals_ok; ++i) {
                std::vector<std::pair<double, int>> nbrs;
                for (std::size_t j = 0; j < cloud.points.size(); ++j) {
                    if (j == i) continue;
                    const double d2 = (cloud.points[j] - cloud.points[i]).squaredNorm();
                    if (d2 <= 4.0) nbrs.emplace_back(d2, static_cast<int>(j));
                }
                if (static_cast<int>(nbrs.size()) < 6) {
                    if (fast.valid[i]) normals_ok = false;
                    continue;
                }
                std::sort(nbrs.begin(), nbrs.end());
                nbrs.resize(6);
                Vec3 mean = Vec3::Zero();
                for (const auto& [d2, idx] : nbrs) mean += cloud.points[idx];
                mean /= 6.0;
                Mat3 cov = Mat3::Zero();
                for (const auto& [d2, idx] : nbrs) {
                    const Vec3 d = cloud.points[idx] - mean;
                    cov += d * d.transpose();
                }
                Eigen::SelfAdjointEigenSolver<Mat3> eig(cov);
                if (eig.eigenvalues()(1) < 1e-12 ||
                    eig.eigenvalues()(1) < 0.01 * eig.eigenvalues()(2) ||
                    eig.eigenvalues()(0) > 0.05 * eig.eigenvalues()(2)) {
                    if (fast.valid[i]) normals_ok = false;
                    continue;
                }
                if (!fast.valid[i]) {
                    normals_ok = false;
                    continue;
                }
                const Vec3 oracle = eig.eigenvectors().col(0);
                const double diff =
                    std::min((fast.normals[i] - oracle).norm(), (fast.normals[i] + oracle).norm());
                if (diff > 1e-9) normals_ok = false;
            }
        }
    }

    bool umeyama_ok = true;
    {
        std::mt19937_64 rng(7004);
        std::normal_distribution<double> g(0.0, 1.0);
        std::uniform_real_distribution<double> us(0.5, 2.0);
        for (int trial = 0; trial < 1000 && umeyama_ok; ++trial) {
            std::vector<Vec3> ref;
            for (int i = 0; i < 10; ++i) ref.emplace_back(g(rng), g(rng), g(rng));
            Vec3 axis(g(rng), g(rng), g(rng));
            while (axis.norm() < 1e-6) axis = Vec3(g(rng), g(rng), g(rng));
            const Eigen::AngleAxisd rot(g(rng), axis.normalized());
            const double s = us(rng);
            const Vec3 t(g(rng), g(rng), g(rng));
            std::vector<Vec3> est;
            for (const Vec3& p : ref) est.push_back(s * (rot * p) + t);
            const SimilarityTransform xf = umeyama_align(ref, est, true);
            for (std::size_t i = 0; i < ref.size(); ++i)
                if ((xf.apply(est[i]) - ref[i]).norm() > 1e-9) umeyama_ok = false;
        }
    }

    const bool pass = fast_ok && ransac_ok && normals_ok && umeyama_ok;
    report(7, "oracle equivalences", pass,
           std::string("fast9=") + (fast_ok ? "ok" : "BAD") + " ransac=" +
               (ransac_ok ? "ok" : "BAD") + " normals=" + (normals_ok ? "ok" : "BAD") +
               " umeyama=" + (umeyama_ok ? "ok" : "BAD"));
}

// ---------------------------------------------------------------------------
// criterion 8: evaluation metric sanity
// ---------------------------------------------------------------------------

void criterion_8() {
    Trajectory gt;
    gt.samples = generate_trajectory(TrajectoryKind::straight, 900.0, 10.0, 10.0);

    Trajectory shrunk = gt;
    for (auto& tp : shrunk.samples) tp.pose.translation *= 0.98;
    const KittiSegmentErrors seg = kitti_segment_errors(gt, shrunk);
    const bool kitti_ok = std::abs(seg.trans_pct - 2.0) <= 0.05;

    const EvalReport same = evaluate_ate_are(gt, gt, AlignMode::none);
    Trajectory shifted = gt;
    for (auto& tp : shifted.samples) tp.pose.translation += Vec3(1, 0, 0);
    const EvalReport shift = evaluate_ate_are(gt, shifted, AlignMode::none);
    Trajectory tilted = gt;
    const Eigen::Quaterniond five(Eigen::AngleAxisd(5.0 * M_PI / 180.0, Vec3::UnitY()));
    for (auto& tp : tilted.samples) tp.pose.rotation = (tp.pose.rotation * five).normalized();
    const EvalReport tilt = evaluate_ate_are(gt, tilted, AlignMode::none);

    const bool ate_ok = same.ate_rmse == 0.0 && *same.are_deg == 0.0 &&
                        std::abs(shift.ate_rmse - 1.0) < 1e-12 &&
                        std::abs(*tilt.are_deg - 5.0) < 1e-9;
    report(8, "metric sanity", kitti_ok && ate_ok,
           "kitti_2pct=" + fmt(seg.trans_pct) + "% shift_ate=" + fmt(shift.ate_rmse) +
               " tilt_are=" + fmt(*tilt.are_deg));
}

// ---------------------------------------------------------------------------
// criterion 9: kitti-layout export / import round trip
// ---------------------------------------------------------------------------

void criterion_9() {
    namespace fs = std::filesystem;
    const std::string dir = (fs::temp_directory_path() / "vlo_acceptance_seq").string();
    fs::remove_all(dir);

    RunConfig cfg;
    cfg.trajectory.length = 4.0;
    cfg.trajectory.speed = 2.0;
    cfg.trajectory.rate = 10.0;
    cfg.intrinsics = CameraIntrinsics{120.0, 120.0, 64.0, 48.0, 128, 96};
    cfg.lidar.beam_count = 8;
    cfg.lidar.azimuth_step_deg = 5.0;
    cfg.seed = 3;
    const int frames = 3;
    export_synthetic_sequence(cfg, dir, frames);

    const Scene scene = standard_scene(cfg.seed);
    const auto gt = generate_trajectory(cfg.trajectory);
    const KittiCalib calib = load_kitti_calib(dir);
    const auto times = load_kitti_times(dir);

    bool pass = calib.intrinsics.fx == cfg.intrinsics.fx &&
                calib.intrinsics.fy == cfg.intrinsics.fy &&
                calib.intrinsics.cx == cfg.intrinsics.cx &&
                calib.intrinsics.cy == cfg.intrinsics.cy &&
                (calib.t_lidar_cam.translation - cfg.t_lidar_cam.translation).norm() == 0.0 &&
                times.size() == frames;
    for (int i = 0; i < frames && pass; ++i) {
        if (times[i] != gt[i].timestamp) pass = false;
        const FrameBundle frame = load_kitti_frame(dir, i);
        if (frame.timestamp != gt[i].timestamp) pass = false;
        const ImageGray img = render_image(scene, cfg.intrinsics, gt[i].pose);
        if (frame.image.intensities != img.intensities) pass = false;
        if (frame.cloud.points.empty()) pass = false;
    }

    // bit-exact float32 cloud round trip on a scan with known provenance
    LidarModel lidar = cfg.lidar;
    lidar.range_noise_sigma = 0.01;
    lidar.seed = 42;
    const PointCloud scan = simulate_scan(scene, lidar, gt[0].pose);
    export_kitti_frame(dir, frames, ImageGray::constant(4, 4, 0), scan);
    const PointCloud back = load_kitti_velodyne(dir + "/velodyne/000003.bin");
    if (back.points.size() != scan.points.size()) pass = false;
    for (std::size_t p = 0; p < back.points.size() && pass; ++p)
        for (int axis = 0; axis < 3; ++axis)
            if (static_cast<double>(static_cast<float>(scan.points[p](axis))) !=
                back.points[p](axis))
                pass = false;
    report(9, "kitti ingestion round trip", pass,
           "calib + times + images compared, cloud floats bit-exact");
}

}  // namespace

int main() {
    criterion_4();
    criterion_8();
    criterion_7();
    criterion_9();
    criterion_3();
    criterion_5();
    criterion_1();
    criterion_6();
    criterion_2();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
