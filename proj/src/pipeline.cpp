#include "vlo/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace vlo {

namespace {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct KeyframeData {
    int frame = -1;
    ImageGray image;
    Pyramid pyramid;
    PointCloud cloud;
};

Pose conjugate_by_extrinsics(const Pose& rel_cam, const Pose& t_lidar_cam) {
    // camera-frame relative motion expressed in the lidar frame
    return compose(compose(t_lidar_cam.inverse(), rel_cam), t_lidar_cam);
}

}  // namespace

RunReport run_pipeline(const RunConfig& cfg) {
    RunReport report;

    // ---- frame sources -----------------------------------------------------
    Scene scene;
    std::vector<TimedPose> gt;
    std::vector<TimedPose> vo_input;
    KittiCalib kitti_calib;
    std::vector<double> kitti_times;
    CameraIntrinsics intr = cfg.intrinsics;
    Pose extr = cfg.t_lidar_cam;
    int frame_count = 0;

    if (cfg.mode == RunMode::synthetic) {
        if (cfg.scene == "standard")
            scene = standard_scene(cfg.seed);
        else if (cfg.scene == "corridor")
            scene = corridor_scene(cfg.seed);
        else
            throw ConfigError("unknown scene: " + cfg.scene);
        gt = generate_trajectory(cfg.trajectory);
        DriftModel drift = cfg.drift;
        drift.seed = mix_seed(cfg.seed, drift.seed + 1);
        vo_input = inject_vo_drift(gt, drift);
        frame_count = static_cast<int>(gt.size());
    } else {
        kitti_calib = load_kitti_calib(cfg.sequence_dir);
        kitti_times = load_kitti_times(cfg.sequence_dir);
        intr = kitti_calib.intrinsics;
        extr = kitti_calib.t_lidar_cam;
        frame_count = static_cast<int>(kitti_times.size());
        if (cfg.vo_trajectory_file.empty())
            throw ConfigError("kitti mode needs vo_trajectory");
        for (const auto& tp : read_trajectory_file(cfg.vo_trajectory_file))
            vo_input.push_back(tp);
        if (static_cast<int>(vo_input.size()) < frame_count)
            frame_count = static_cast<int>(vo_input.size());
        if (!cfg.gt_trajectory_file.empty())
            gt = read_trajectory_file(cfg.gt_trajectory_file);
    }
    if (cfg.max_frames > 0) frame_count = std::min(frame_count, cfg.max_frames);
    if (frame_count < 2) throw std::domain_error("pipeline needs at least 2 frames");

    auto frame_timestamp = [&](int i) {
        return cfg.mode == RunMode::synthetic ? gt[i].timestamp : kitti_times[i];
    };
    auto load_image = [&](int i) -> ImageGray {
        if (cfg.mode == RunMode::synthetic) return render_image(scene, intr, gt[i].pose);
        char name[16];
        std::snprintf(name, sizeof(name), "%06d", i);
        ImageGray img = read_pgm(cfg.sequence_dir + "/image_0/" + std::string(name) + ".pgm");
        return img;
    };
    auto load_cloud = [&](int i) -> PointCloud {
        if (cfg.mode == RunMode::synthetic) {
            LidarModel model = cfg.lidar;
            model.seed = mix_seed(cfg.seed, 0xC10D + static_cast<std::uint64_t>(i));
            return simulate_scan(scene, model, compose(gt[i].pose, extr));
        }
        char name[16];
        std::snprintf(name, sizeof(name), "%06d", i);
        return load_kitti_velodyne(cfg.sequence_dir + "/velodyne/" + std::string(name) + ".bin");
    };
    if (cfg.mode == RunMode::kitti) {
        const ImageGray first = load_image(0);
        intr.width = first.width;
        intr.height = first.height;
    }

    // ---- main loop ----------------------------------------------------------
    report.vo_input.assign(vo_input.begin(), vo_input.begin() + frame_count);
    if (cfg.mode == RunMode::synthetic) report.gt = gt;
    else if (!gt.empty()) report.gt = gt;
    report.vo_corrected.resize(frame_count);
    report.vo_corrected[0] = vo_input[0];

    double factor = 1.0;  // cumulative scale correction on VO translations
    std::optional<KeyframeData> prev_kf;
    LocalMap local_map;
    std::vector<int> window_frames;  // frame index of each local-map keyframe

    OdomState odom;
    std::mt19937_64 track_noise_rng(mix_seed(cfg.seed, 0x7EAC));
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (int i = 0; i < frame_count; ++i) {
        if (i > 0) {
            Pose rel = compose(vo_input[i - 1].pose.inverse(), vo_input[i].pose);
            rel.translation *= factor;
            report.vo_corrected[i].timestamp = frame_timestamp(i);
            report.vo_corrected[i].pose = compose(report.vo_corrected[i - 1].pose, rel);
        }

        const bool is_keyframe = (i % cfg.keyframe_stride) == 0;
        PointCloud cloud;
        bool cloud_loaded = false;
        if (is_keyframe || cfg.lidar_odom) {
            cloud = load_cloud(i);
            cloud_loaded = true;
        }

        if (is_keyframe) {
            KeyframeData kf;
            kf.frame = i;
            kf.image = load_image(i);
            kf.pyramid = build_pyramid(kf.image, cfg.pyramid_levels);
            kf.cloud = cloud;

            if (prev_kf) {
                CorrectionEvent event;
                event.timestamp = frame_timestamp(i);
                event.frame = i;

                const auto projected = project_cloud(intr, extr, prev_kf->cloud);
                const auto selected = select_keypoints(projected, prev_kf->image, cfg.selection);
                event.keypoint_count = static_cast<int>(selected.size());

                std::vector<Vec2> points;
                points.reserve(selected.size());
                for (const auto& kp : selected) points.push_back(kp.pixel);
                const auto tracked = lk_track(prev_kf->pyramid, kf.pyramid, points, cfg.tracker);

                const Pose rel_kf = compose(report.vo_corrected[i].pose.inverse(),
                                            report.vo_corrected[prev_kf->frame].pose);

                std::vector<TrackedCandidate> candidates;
                for (std::size_t j = 0; j < tracked.size(); ++j) {
                    if (tracked[j].status != TrackStatus::tracked) continue;
                    Vec2 cur = tracked[j].cur_pixel;
                    if (cfg.track_noise_sigma > 0.0)
                        cur += cfg.track_noise_sigma *
                               Vec2(gauss(track_noise_rng), gauss(track_noise_rng));
                    if (cur.x() < 1.0 || cur.y() < 1.0 || cur.x() > intr.width - 2 ||
                        cur.y() > intr.height - 2)
                        continue;
                    TrackedCandidate cand;
                    cand.x_prev = tracked[j].prev_pixel;
                    cand.x_cur = cur;
                    cand.lidar_depth = selected[j].depth;
                    cand.grad_cur = gradient_at(kf.image, cur);
                    candidates.push_back(cand);
                }
                event.tracked_count = static_cast<int>(candidates.size());

                if (rel_kf.translation.norm() > 1e-6) {
                    try {
                        const auto matched = cull_matches(candidates, intr, rel_kf, cfg.culling);
                        event.culled_count = static_cast<int>(matched.size());
                        const auto samples = compute_scale_samples(matched, intr, rel_kf);
                        RansacConfig rcfg = cfg.ransac;
                        rcfg.seed = mix_seed(cfg.seed, 0x5CA1E + static_cast<std::uint64_t>(i));
                        const ScaleEstimate est = ransac_scale(samples, rcfg);
                        event.sample_count = est.sample_count;
                        event.inlier_count = est.inlier_count;
                        event.scale = est.scale;
                        event.triggered = should_correct(est);
                        if (event.triggered) {
                            local_map = apply_scale_correction(local_map, est.scale);
                            for (std::size_t w = 0; w < window_frames.size(); ++w)
                                report.vo_corrected[window_frames[w]].pose =
                                    local_map.keyframe_poses[w];
                            factor *= est.scale;
                        }
                        report.events.push_back(event);
                    } catch (const InsufficientSamplesError&) {
                        ++report.estimation_failures;
                    } catch (const NoConsensusError&) {
                        ++report.estimation_failures;
                    } catch (const DegenerateEpipolarError&) {
                        ++report.estimation_failures;
                    }
                } else {
                    ++report.estimation_failures;
                }
            }

            local_map.keyframe_poses.push_back(report.vo_corrected[i].pose);
            window_frames.push_back(i);
            if (static_cast<int>(local_map.keyframe_poses.size()) > cfg.local_map_size) {
                local_map.keyframe_poses.erase(local_map.keyframe_poses.begin());
                window_frames.erase(window_frames.begin());
            }
            prev_kf = std::move(kf);
            ++report.keyframe_count;
        }

        if (cfg.lidar_odom) {
            if (!cloud_loaded) cloud = load_cloud(i);
            std::optional<Pose> vo_rel;
            if (i > 0) {
                const Pose rel_cam = compose(report.vo_corrected[i - 1].pose.inverse(),
                                             report.vo_corrected[i].pose);
                vo_rel = conjugate_by_extrinsics(rel_cam, extr);
            }
            TimedPose lp;
            lp.timestamp = frame_timestamp(i);
            try {
                const auto step = lidar_odometry_step(odom, cloud, vo_rel, cfg.odom_mode,
                                                      cfg.icp, cfg.normal_k);
                lp.pose = compose(extr, compose(step.pose, extr.inverse()));
            } catch (const RegistrationError&) {
                // dead-reckon on the initial guess and keep going
                const Pose init = (cfg.odom_mode == OdomInitMode::bootstrap && vo_rel)
                                      ? *vo_rel
                                      : odom.last_relative;
                odom.last_pose = compose(odom.last_pose, init);
                odom.last_relative = init;
                odom.last_scan = cloud;
                odom.last_normals = estimate_normals(cloud, cfg.normal_k);
                ++odom.frame_index;
                ++report.estimation_failures;
                lp.pose = compose(extr, compose(odom.last_pose, extr.inverse()));
            }
            report.lidar_poses.push_back(lp);
        }
    }
    report.fallback_count = odom.fallback_count;

    // ---- evaluation ----------------------------------------------------------
    if (report.gt.size() >= 3) {
        Trajectory gt_traj{report.gt};
        try {
            report.vo_eval = evaluate_ate_are(gt_traj, Trajectory{report.vo_corrected},
                                              AlignMode::none);
        } catch (const InsufficientDataError&) {
        }
        if (!report.lidar_poses.empty()) {
            try {
                report.lidar_eval = evaluate_ate_are(gt_traj, Trajectory{report.lidar_poses},
                                                     AlignMode::rigid);
            } catch (const AlignmentDegenerateError&) {
                // unalignable (e.g. collinear) estimate: report unaligned errors
                report.lidar_eval = evaluate_ate_are(gt_traj, Trajectory{report.lidar_poses},
                                                     AlignMode::none);
            } catch (const InsufficientDataError&) {
            }
        }
    }
    return report;
}

namespace {

nlohmann::ordered_json eval_to_json(const EvalReport& eval) {
    nlohmann::ordered_json j;
    j["ate_rmse"] = eval.ate_rmse;
    if (eval.are_deg) j["are_deg"] = *eval.are_deg;
    if (eval.kitti_trans_pct) j["kitti_trans_pct"] = *eval.kitti_trans_pct;
    if (eval.kitti_rot_deg_per_m) j["kitti_rot_deg_per_m"] = *eval.kitti_rot_deg_per_m;
    j["alignment"]["scale"] = eval.alignment.scale;
    return j;
}

}  // namespace

void emit_report(const RunReport& report, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    write_trajectory_file(out_dir + "/trajectory_vo.txt", report.vo_corrected);
    write_trajectory_file(out_dir + "/trajectory_lidar.txt", report.lidar_poses);

    {
        std::ofstream csv(out_dir + "/events.csv");
        if (!csv) throw IoError("cannot write events.csv in " + out_dir);
        csv << "timestamp,frame,keypoints,tracked,culled,samples,inliers,scale,triggered\n";
        csv << std::setprecision(17);
        for (const auto& e : report.events)
            csv << e.timestamp << ',' << e.frame << ',' << e.keypoint_count << ','
                << e.tracked_count << ',' << e.culled_count << ',' << e.sample_count << ','
                << e.inlier_count << ',' << e.scale << ',' << (e.triggered ? 1 : 0) << '\n';
    }

    nlohmann::ordered_json j;
    j["frame_count"] = report.vo_corrected.size();
    j["keyframe_count"] = report.keyframe_count;
    j["estimation_failures"] = report.estimation_failures;
    j["fallback_count"] = report.fallback_count;
    j["correction_events"] = nlohmann::ordered_json::array();
    for (const auto& e : report.events) {
        nlohmann::ordered_json je;
        je["timestamp"] = e.timestamp;
        je["frame"] = e.frame;
        je["sample_count"] = e.sample_count;
        je["inlier_count"] = e.inlier_count;
        je["scale"] = e.scale;
        je["triggered"] = e.triggered;
        j["correction_events"].push_back(je);
    }
    if (report.vo_eval) j["vo_eval"] = eval_to_json(*report.vo_eval);
    if (report.lidar_eval) j["lidar_eval"] = eval_to_json(*report.lidar_eval);

    std::ofstream out(out_dir + "/report.json");
    if (!out) throw IoError("cannot write report.json in " + out_dir);
    out << j.dump(2) << '\n';
}

namespace {

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "on") return true;
    if (v == "false" || v == "0" || v == "off") return false;
    throw ConfigError("invalid boolean for " + key + ": " + v);
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

RunConfig parse_run_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    using Setter = std::function<void(const std::string&)>;
    const std::unordered_map<std::string, Setter> setters = {
        {"mode",
         [&](const std::string& v) {
             if (v == "synthetic") cfg.mode = RunMode::synthetic;
             else if (v == "kitti") cfg.mode = RunMode::kitti;
             else throw ConfigError("unknown mode: " + v);
         }},
        {"scene", [&](const std::string& v) { cfg.scene = v; }},
        {"traj.kind",
         [&](const std::string& v) {
             if (v == "straight") cfg.trajectory.kind = TrajectoryKind::straight;
             else if (v == "arc") cfg.trajectory.kind = TrajectoryKind::arc;
             else if (v == "corridor-detour")
                 cfg.trajectory.kind = TrajectoryKind::corridor_detour;
             else throw ConfigError("unknown traj.kind: " + v);
         }},
        {"traj.length", [&](const std::string& v) { cfg.trajectory.length = std::stod(v); }},
        {"traj.speed", [&](const std::string& v) { cfg.trajectory.speed = std::stod(v); }},
        {"traj.rate", [&](const std::string& v) { cfg.trajectory.rate = std::stod(v); }},
        {"traj.arc_radius",
         [&](const std::string& v) { cfg.trajectory.arc_radius = std::stod(v); }},
        {"traj.speed_step_fraction",
         [&](const std::string& v) { cfg.trajectory.speed_step_fraction = std::stod(v); }},
        {"traj.speed_step_factor",
         [&](const std::string& v) { cfg.trajectory.speed_step_factor = std::stod(v); }},
        {"lidar.beams", [&](const std::string& v) { cfg.lidar.beam_count = std::stoi(v); }},
        {"lidar.fov_min_deg",
         [&](const std::string& v) { cfg.lidar.vertical_fov_min_deg = std::stod(v); }},
        {"lidar.fov_max_deg",
         [&](const std::string& v) { cfg.lidar.vertical_fov_max_deg = std::stod(v); }},
        {"lidar.azimuth_step_deg",
         [&](const std::string& v) { cfg.lidar.azimuth_step_deg = std::stod(v); }},
        {"lidar.range_noise_sigma",
         [&](const std::string& v) { cfg.lidar.range_noise_sigma = std::stod(v); }},
        {"lidar.max_range", [&](const std::string& v) { cfg.lidar.max_range = std::stod(v); }},
        {"drift.kind",
         [&](const std::string& v) {
             if (v == "constant") cfg.drift.kind = DriftKind::constant;
             else if (v == "linear") cfg.drift.kind = DriftKind::linear_in_distance;
             else if (v == "random-walk") cfg.drift.kind = DriftKind::random_walk;
             else throw ConfigError("unknown drift.kind: " + v);
         }},
        {"drift.scale", [&](const std::string& v) { cfg.drift.scale = std::stod(v); }},
        {"drift.slope_per_meter",
         [&](const std::string& v) { cfg.drift.slope_per_meter = std::stod(v); }},
        {"drift.random_walk_sigma",
         [&](const std::string& v) { cfg.drift.random_walk_sigma = std::stod(v); }},
        {"drift.rot_noise_sigma_deg",
         [&](const std::string& v) { cfg.drift.rot_noise_sigma_deg = std::stod(v); }},
        {"drift.trans_noise_sigma",
         [&](const std::string& v) { cfg.drift.trans_noise_sigma = std::stod(v); }},
        {"cam.fx", [&](const std::string& v) { cfg.intrinsics.fx = std::stod(v); }},
        {"cam.fy", [&](const std::string& v) { cfg.intrinsics.fy = std::stod(v); }},
        {"cam.cx", [&](const std::string& v) { cfg.intrinsics.cx = std::stod(v); }},
        {"cam.cy", [&](const std::string& v) { cfg.intrinsics.cy = std::stod(v); }},
        {"cam.width", [&](const std::string& v) { cfg.intrinsics.width = std::stoi(v); }},
        {"cam.height", [&](const std::string& v) { cfg.intrinsics.height = std::stoi(v); }},
        {"extrinsic.tx", [&](const std::string& v) { cfg.t_lidar_cam.translation.x() = std::stod(v); }},
        {"extrinsic.ty", [&](const std::string& v) { cfg.t_lidar_cam.translation.y() = std::stod(v); }},
        {"extrinsic.tz", [&](const std::string& v) { cfg.t_lidar_cam.translation.z() = std::stod(v); }},
        {"sequence_dir", [&](const std::string& v) { cfg.sequence_dir = v; }},
        {"vo_trajectory", [&](const std::string& v) { cfg.vo_trajectory_file = v; }},
        {"gt_trajectory", [&](const std::string& v) { cfg.gt_trajectory_file = v; }},
        {"max_frames", [&](const std::string& v) { cfg.max_frames = std::stoi(v); }},
        {"keyframe_stride", [&](const std::string& v) { cfg.keyframe_stride = std::stoi(v); }},
        {"pyramid_levels", [&](const std::string& v) { cfg.pyramid_levels = std::stoi(v); }},
        {"cull.max_normal_error",
         [&](const std::string& v) { cfg.culling.max_normal_error = std::stod(v); }},
        {"cull.min_abs_cos",
         [&](const std::string& v) { cfg.culling.min_abs_cos = std::stod(v); }},
        {"ransac.iterations", [&](const std::string& v) { cfg.ransac.iterations = std::stoi(v); }},
        {"ransac.inlier_tol", [&](const std::string& v) { cfg.ransac.inlier_tol = std::stod(v); }},
        {"ransac.min_samples", [&](const std::string& v) { cfg.ransac.min_samples = std::stoi(v); }},
        {"ransac.min_inliers", [&](const std::string& v) { cfg.ransac.min_inliers = std::stoi(v); }},
        {"select.sparse", [&](const std::string& v) { cfg.selection.sparse_mode = parse_bool(v, "select.sparse"); }},
        {"select.fast_threshold",
         [&](const std::string& v) { cfg.selection.fast_threshold = std::stod(v); }},
        {"select.grad_min", [&](const std::string& v) { cfg.selection.grad_min = std::stod(v); }},
        {"select.nms_radius", [&](const std::string& v) { cfg.selection.nms_radius = std::stod(v); }},
        {"tracker.window", [&](const std::string& v) { cfg.tracker.window = std::stoi(v); }},
        {"tracker.eps", [&](const std::string& v) { cfg.tracker.eps = std::stod(v); }},
        {"tracker.max_iters", [&](const std::string& v) { cfg.tracker.max_iters = std::stoi(v); }},
        {"tracker.min_eig", [&](const std::string& v) { cfg.tracker.min_eig = std::stod(v); }},
        {"local_map_size", [&](const std::string& v) { cfg.local_map_size = std::stoi(v); }},
        {"track_noise_sigma",
         [&](const std::string& v) { cfg.track_noise_sigma = std::stod(v); }},
        {"lidar_odom", [&](const std::string& v) { cfg.lidar_odom = parse_bool(v, "lidar_odom"); }},
        {"odom_mode",
         [&](const std::string& v) {
             if (v == "bootstrap") cfg.odom_mode = OdomInitMode::bootstrap;
             else if (v == "constvel") cfg.odom_mode = OdomInitMode::constant_velocity;
             else throw ConfigError("unknown odom_mode: " + v);
         }},
        {"icp.max_corr_dist", [&](const std::string& v) { cfg.icp.max_corr_dist = std::stod(v); }},
        {"icp.max_iters", [&](const std::string& v) { cfg.icp.max_iters = std::stoi(v); }},
        {"icp.update_eps", [&](const std::string& v) { cfg.icp.update_eps = std::stod(v); }},
        {"icp.min_correspondences",
         [&](const std::string& v) { cfg.icp.min_correspondences = std::stoi(v); }},
        {"normal_k", [&](const std::string& v) { cfg.normal_k = std::stoi(v); }},
        {"seed", [&](const std::string& v) { cfg.seed = std::stoull(v); }},
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown key '" + key +
                              "'");
        try {
            it->second(value);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": invalid value for '" +
                              key + "': " + value);
        }
    }
    return cfg;
}

RunConfig parse_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config_text(ss.str(), path);
}

void export_synthetic_sequence(const RunConfig& cfg, const std::string& out_dir,
                               int frame_count) {
    if (cfg.mode != RunMode::synthetic)
        throw ConfigError("sequence export needs a synthetic config");
    const Scene scene = cfg.scene == "corridor" ? corridor_scene(cfg.seed)
                                                : standard_scene(cfg.seed);
    const auto gt = generate_trajectory(cfg.trajectory);
    const int n = frame_count > 0 ? std::min<int>(frame_count, static_cast<int>(gt.size()))
                                  : static_cast<int>(gt.size());

    std::vector<double> times;
    for (int i = 0; i < n; ++i) {
        const ImageGray img = render_image(scene, cfg.intrinsics, gt[i].pose);
        LidarModel model = cfg.lidar;
        model.seed = mix_seed(cfg.seed, 0xC10D + static_cast<std::uint64_t>(i));
        const PointCloud cloud = simulate_scan(scene, model, compose(gt[i].pose, cfg.t_lidar_cam));
        export_kitti_frame(out_dir, i, img, cloud);
        times.push_back(gt[i].timestamp);
    }
    export_kitti_calib(out_dir, cfg.intrinsics, cfg.t_lidar_cam);
    export_kitti_times(out_dir, times);
    write_trajectory_file(out_dir + "/gt_trajectory.txt",
                          std::vector<TimedPose>(gt.begin(), gt.begin() + n));
}

}  // namespace vlo
