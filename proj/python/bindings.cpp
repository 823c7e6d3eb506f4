#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vlo/pipeline.hpp"

namespace py = pybind11;
using namespace vlo;

namespace {

RunReport run_from_text(const std::string& config_text, std::uint64_t seed) {
    RunConfig cfg = parse_run_config_text(config_text);
    cfg.seed = seed;
    return run_pipeline(cfg);
}

}  // namespace

PYBIND11_MODULE(_vlo, m) {
    m.doc() = "monocular scale correction and visual-bootstrapped lidar odometry";

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<InsufficientSamplesError>(m, "InsufficientSamplesError");
    py::register_exception<NoConsensusError>(m, "NoConsensusError");

    py::class_<Pose>(m, "Pose")
        .def(py::init<>())
        .def_property(
            "quaternion_xyzw",
            [](const Pose& p) {
                return Eigen::Vector4d(p.rotation.x(), p.rotation.y(), p.rotation.z(),
                                       p.rotation.w());
            },
            [](Pose& p, const Eigen::Vector4d& q) {
                p.rotation = Eigen::Quaterniond(q(3), q(0), q(1), q(2)).normalized();
            })
        .def_readwrite("translation", &Pose::translation)
        .def("apply", &Pose::apply)
        .def("inverse", &Pose::inverse)
        .def_static("identity", &Pose::identity);
    m.def("compose", [](const Pose& a, const Pose& b) { return compose(a, b); });

    py::class_<TimedPose>(m, "TimedPose")
        .def(py::init<>())
        .def_readwrite("timestamp", &TimedPose::timestamp)
        .def_readwrite("pose", &TimedPose::pose);

    py::class_<CameraIntrinsics>(m, "CameraIntrinsics")
        .def(py::init<>())
        .def_readwrite("fx", &CameraIntrinsics::fx)
        .def_readwrite("fy", &CameraIntrinsics::fy)
        .def_readwrite("cx", &CameraIntrinsics::cx)
        .def_readwrite("cy", &CameraIntrinsics::cy)
        .def_readwrite("width", &CameraIntrinsics::width)
        .def_readwrite("height", &CameraIntrinsics::height);

    py::class_<ScaleSample>(m, "ScaleSample")
        .def(py::init<>())
        .def_readwrite("s", &ScaleSample::s)
        .def_readwrite("d", &ScaleSample::d)
        .def_readwrite("v", &ScaleSample::v);

    py::class_<ScaleEstimate>(m, "ScaleEstimate")
        .def_readonly("scale", &ScaleEstimate::scale)
        .def_readonly("inlier_count", &ScaleEstimate::inlier_count)
        .def_readonly("sample_count", &ScaleEstimate::sample_count);

    py::class_<RansacConfig>(m, "RansacConfig")
        .def(py::init<>())
        .def_readwrite("iterations", &RansacConfig::iterations)
        .def_readwrite("inlier_tol", &RansacConfig::inlier_tol)
        .def_readwrite("min_samples", &RansacConfig::min_samples)
        .def_readwrite("min_inliers", &RansacConfig::min_inliers)
        .def_readwrite("seed", &RansacConfig::seed);

    m.def("ransac_scale", &ransac_scale, py::arg("samples"),
          py::arg("cfg") = RansacConfig{});
    m.def("should_correct", &should_correct);

    m.def(
        "project_point",
        [](const CameraIntrinsics& k, const Pose& t_lidar_cam, const Vec3& p) {
            return project_point(k, t_lidar_cam, p);
        },
        py::arg("intrinsics"), py::arg("t_lidar_cam"), py::arg("point"));
    m.def(
        "triangulate_depth",
        [](const CameraIntrinsics& k, const Pose& rel, const Vec2& x_prev, const Vec2& x_cur) {
            return triangulate_pair(k, rel, x_prev, x_cur).depth;
        },
        py::arg("intrinsics"), py::arg("rel"), py::arg("x_prev"), py::arg("x_cur"));

    py::class_<CorrectionEvent>(m, "CorrectionEvent")
        .def_readonly("timestamp", &CorrectionEvent::timestamp)
        .def_readonly("frame", &CorrectionEvent::frame)
        .def_readonly("sample_count", &CorrectionEvent::sample_count)
        .def_readonly("inlier_count", &CorrectionEvent::inlier_count)
        .def_readonly("scale", &CorrectionEvent::scale)
        .def_readonly("triggered", &CorrectionEvent::triggered);

    py::class_<EvalReport>(m, "EvalReport")
        .def_readonly("ate_rmse", &EvalReport::ate_rmse)
        .def_readonly("are_deg", &EvalReport::are_deg)
        .def_readonly("kitti_trans_pct", &EvalReport::kitti_trans_pct)
        .def_readonly("kitti_rot_deg_per_m", &EvalReport::kitti_rot_deg_per_m);

    py::class_<RunReport>(m, "RunReport")
        .def_readonly("gt", &RunReport::gt)
        .def_readonly("vo_input", &RunReport::vo_input)
        .def_readonly("vo_corrected", &RunReport::vo_corrected)
        .def_readonly("lidar_poses", &RunReport::lidar_poses)
        .def_readonly("events", &RunReport::events)
        .def_readonly("keyframe_count", &RunReport::keyframe_count)
        .def_readonly("estimation_failures", &RunReport::estimation_failures)
        .def_readonly("fallback_count", &RunReport::fallback_count)
        .def_readonly("vo_eval", &RunReport::vo_eval)
        .def_readonly("lidar_eval", &RunReport::lidar_eval);

    m.def("run", &run_from_text, py::arg("config_text"), py::arg("seed") = 0,
          "Parse a key = value configuration and run the full pipeline.");
    m.def("emit_report", &emit_report, py::arg("report"), py::arg("out_dir"));

    m.def(
        "evaluate",
        [](const std::vector<TimedPose>& gt, const std::vector<TimedPose>& est,
           const std::string& align) {
            AlignMode mode = AlignMode::none;
            if (align == "rigid") mode = AlignMode::rigid;
            else if (align == "similarity") mode = AlignMode::similarity;
            else if (align != "none") throw ConfigError("unknown align mode: " + align);
            return evaluate_ate_are(Trajectory{gt}, Trajectory{est}, mode);
        },
        py::arg("gt"), py::arg("est"), py::arg("align") = "none");

    m.def("read_trajectory", &read_trajectory_file);
    m.def("write_trajectory", &write_trajectory_file);
}
