#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vlo/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitEstimation = 3;

struct CommonOpts {
    std::string config_file;
    std::optional<std::uint64_t> seed;
    std::string out_dir = "out";
    std::optional<std::string> odom_mode;
    bool sparse_lidar = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool config_required) {
    auto* c = cmd->add_option("--config", opts.config_file, "run configuration file");
    if (config_required) c->required();
    cmd->add_option("--seed", opts.seed, "override the configured RNG seed");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--mode", opts.odom_mode, "odometry init mode")
        ->check(CLI::IsMember({"bootstrap", "constvel"}));
    cmd->add_flag("--sparse-lidar", opts.sparse_lidar,
                  "sparse-scan keypoint selection (relaxed corner test)");
}

vlo::RunConfig load_config(const CommonOpts& opts) {
    vlo::RunConfig cfg =
        opts.config_file.empty() ? vlo::RunConfig{} : vlo::parse_run_config(opts.config_file);
    if (opts.seed) cfg.seed = *opts.seed;
    if (opts.odom_mode)
        cfg.odom_mode = *opts.odom_mode == "constvel" ? vlo::OdomInitMode::constant_velocity
                                                      : vlo::OdomInitMode::bootstrap;
    if (opts.sparse_lidar) cfg.selection.sparse_mode = true;
    return cfg;
}

void print_eval(const char* label, const vlo::EvalReport& eval) {
    std::cout << label << ": ate_rmse = " << eval.ate_rmse << " m";
    if (eval.are_deg) std::cout << ", are = " << *eval.are_deg << " deg";
    if (eval.kitti_trans_pct) std::cout << ", kitti_trans = " << *eval.kitti_trans_pct << " %";
    if (eval.kitti_rot_deg_per_m)
        std::cout << ", kitti_rot = " << *eval.kitti_rot_deg_per_m << " deg/m";
    std::cout << '\n';
}

int run_command(const CommonOpts& opts) {
    const vlo::RunConfig cfg = load_config(opts);
    const vlo::RunReport report = vlo::run_pipeline(cfg);
    vlo::emit_report(report, opts.out_dir);
    std::cout << "frames: " << report.vo_corrected.size()
              << ", keyframes: " << report.keyframe_count
              << ", correction events: " << report.events.size()
              << ", estimation failures: " << report.estimation_failures << '\n';
    if (report.vo_eval) print_eval("vo", *report.vo_eval);
    if (report.lidar_eval) print_eval("lidar", *report.lidar_eval);
    // a run where every keyframe failed to estimate scale is an estimation failure
    if (report.keyframe_count > 1 && report.events.empty() && report.estimation_failures > 0)
        return kExitEstimation;
    return kExitOk;
}

int simulate_command(const CommonOpts& opts, int frames) {
    vlo::RunConfig cfg = load_config(opts);
    cfg.mode = vlo::RunMode::synthetic;
    vlo::export_synthetic_sequence(cfg, opts.out_dir, frames);
    std::cout << "sequence written to " << opts.out_dir << '\n';
    return kExitOk;
}

int eval_command(const std::string& gt_file, const std::string& est_file, bool similarity,
                 bool kitti) {
    vlo::Trajectory gt{vlo::read_trajectory_file(gt_file)};
    vlo::Trajectory est{vlo::read_trajectory_file(est_file)};
    const auto mode = similarity ? vlo::AlignMode::similarity : vlo::AlignMode::rigid;
    vlo::EvalReport report;
    try {
        report = vlo::evaluate_ate_are(gt, est, mode);
    } catch (const vlo::AlignmentDegenerateError&) {
        // unalignable geometry (e.g. a straight path): report unaligned errors
        std::cout << "note: trajectories cannot be aligned, reporting raw errors\n";
        report = vlo::evaluate_ate_are(gt, est, vlo::AlignMode::none);
    }
    if (kitti) {
        const vlo::Trajectory est_assoc = vlo::interpolate_trajectory(est, [&] {
            std::vector<double> ts;
            for (const auto& tp : gt.samples) ts.push_back(tp.timestamp);
            return ts;
        }());
        const vlo::KittiSegmentErrors seg = vlo::kitti_segment_errors(gt, est_assoc);
        report.kitti_trans_pct = seg.trans_pct;
        report.kitti_rot_deg_per_m = seg.rot_deg_per_m;
    }
    print_eval("eval", report);
    return kExitOk;
}

int import_command(const CommonOpts& opts, const std::string& sequence_dir) {
    const vlo::KittiCalib calib = vlo::load_kitti_calib(sequence_dir);
    const auto times = vlo::load_kitti_times(sequence_dir);
    if (times.empty()) throw vlo::ParseError(sequence_dir + "/times.txt is empty");
    // touch the first frame to validate the layout end to end
    const vlo::FrameBundle first = vlo::load_kitti_frame(sequence_dir, 0);
    std::cout << "sequence: " << sequence_dir << '\n'
              << "frames: " << times.size() << '\n'
              << "image: " << first.image.width << 'x' << first.image.height << '\n'
              << "first scan points: " << first.cloud.points.size() << '\n'
              << "fx fy cx cy: " << calib.intrinsics.fx << ' ' << calib.intrinsics.fy << ' '
              << calib.intrinsics.cx << ' ' << calib.intrinsics.cy << '\n';
    (void)opts;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monocular scale correction and visual-bootstrapped lidar odometry"};
    app.require_subcommand(1);

    CommonOpts run_opts, sim_opts, import_opts;
    int sim_frames = -1;
    std::string gt_file, est_file, sequence_dir;
    bool eval_similarity = false, eval_kitti = false;

    auto* run = app.add_subcommand("run", "run the estimation pipeline");
    add_common(run, run_opts, false);

    auto* sim = app.add_subcommand("simulate", "render a synthetic sequence in KITTI layout");
    add_common(sim, sim_opts, false);
    sim->add_option("--frames", sim_frames, "number of frames (default: whole trajectory)");

    auto* ev = app.add_subcommand("eval", "compare two trajectory files");
    ev->add_option("--gt", gt_file, "ground-truth trajectory")->required();
    ev->add_option("--est", est_file, "estimated trajectory")->required();
    ev->add_flag("--similarity", eval_similarity, "align with scale (default: rigid)");
    ev->add_flag("--kitti", eval_kitti, "also report KITTI segment errors");

    auto* imp = app.add_subcommand("kitti-import", "validate a KITTI-layout sequence");
    add_common(imp, import_opts, false);
    imp->add_option("--sequence", sequence_dir, "sequence directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) return run_command(run_opts);
        if (sim->parsed()) return simulate_command(sim_opts, sim_frames);
        if (ev->parsed()) return eval_command(gt_file, est_file, eval_similarity, eval_kitti);
        if (imp->parsed()) return import_command(import_opts, sequence_dir);
    } catch (const vlo::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const vlo::IoError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const vlo::ParseError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const vlo::InsufficientDataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const vlo::OutOfRangeError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "estimation failure: " << e.what() << '\n';
        return kExitEstimation;
    }
    return kExitUsage;
}
