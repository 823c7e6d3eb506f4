#include <doctest.h>

#include <cmath>
#include <numeric>

#include "vlo/synth_world.hpp"

using namespace vlo;

namespace {

CameraIntrinsics test_k() { return CameraIntrinsics{200, 200, 128, 96, 256, 192}; }

double image_stddev(const ImageGray& img) {
    double mean = 0;
    for (auto v : img.intensities) mean += v;
    mean /= static_cast<double>(img.intensities.size());
    double var = 0;
    for (auto v : img.intensities) var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(img.intensities.size()));
}

}  // namespace

TEST_CASE("generate_trajectory straight line") {
    TrajectoryConfig cfg;
    cfg.kind = TrajectoryKind::straight;
    cfg.length = 100.0;
    cfg.speed = 10.0;
    cfg.rate = 10.0;
    const auto traj = generate_trajectory(cfg);
    REQUIRE(traj.size() == 101);
    CHECK(traj.front().timestamp == doctest::Approx(0.0));
    CHECK(traj.back().timestamp == doctest::Approx(10.0));
    CHECK(traj.front().pose.translation.norm() < 1e-12);
    CHECK((traj.back().pose.translation - Vec3(0, 0, 100)).norm() < 1e-9);
    // constant spacing of speed / rate along +z
    for (std::size_t i = 1; i < traj.size(); ++i) {
        const Vec3 step = traj[i].pose.translation - traj[i - 1].pose.translation;
        CHECK((step - Vec3(0, 0, 1.0)).norm() < 1e-9);
        CHECK(std::abs(traj[i].pose.rotation.angularDistance(Eigen::Quaterniond::Identity())) <
              1e-12);
    }
}

TEST_CASE("generate_trajectory arc sweeps the expected angle") {
    TrajectoryConfig cfg;
    cfg.kind = TrajectoryKind::arc;
    cfg.arc_radius = 50.0;
    cfg.length = 50.0 * M_PI / 2.0;  // quarter circle
    cfg.speed = 5.0;
    cfg.rate = 10.0;
    const auto traj = generate_trajectory(cfg);
    REQUIRE(traj.size() >= 3);
    // heading turns by 90 degrees over a quarter circle
    const Vec3 final_fwd = traj.back().pose.rotation * Vec3::UnitZ();
    CHECK(std::abs(final_fwd.dot(Vec3::UnitZ()))
          == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(std::abs(std::abs(final_fwd.dot(Vec3::UnitX())) - 1.0) < 1e-6);
    // chord length from the start never exceeds the arc length
    for (const auto& tp : traj) CHECK(tp.pose.translation.norm() <= cfg.length + 1e-9);
    // endpoint of a quarter circle sits radius*(1, 0, 1) from the start (up to
    // the turn direction)
    const Vec3 end = traj.back().pose.translation;
    CHECK(std::abs(end.z()) == doctest::Approx(cfg.arc_radius).epsilon(1e-6));
    CHECK(std::abs(end.x()) == doctest::Approx(cfg.arc_radius).epsilon(1e-6));
}

TEST_CASE("generate_trajectory rejects bad parameters") {
    TrajectoryConfig cfg;
    cfg.length = -1.0;
    CHECK_THROWS_AS(generate_trajectory(cfg), std::domain_error);
    cfg.length = 10.0;
    cfg.speed = 0.0;
    CHECK_THROWS_AS(generate_trajectory(cfg), std::domain_error);
    cfg.speed = 10.0;
    cfg.rate = 0.0;
    CHECK_THROWS_AS(generate_trajectory(cfg), std::domain_error);
}

TEST_CASE("render_image is deterministic and textured") {
    const Scene scene = standard_scene(7);
    const auto k = test_k();
    Pose cam;
    cam.translation = Vec3(0.1, 0.0, 2.0);
    const ImageGray a = render_image(scene, k, cam);
    const ImageGray b = render_image(scene, k, cam);
    REQUIRE(a.width == k.width);
    REQUIRE(a.height == k.height);
    CHECK(a.intensities == b.intensities);
    CHECK(image_stddev(a) > 10.0);
}

TEST_CASE("rays that miss every plane see the background") {
    Scene scene;
    Plane ground;
    ground.anchor = Vec3(0, 1.6, 0);
    ground.normal = Vec3(0, -1, 0);
    scene.planes.push_back(ground);
    scene.background_intensity = 30;
    const auto k = test_k();
    // camera pitched up: top rows look at empty sky
    Pose cam;
    cam.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(0.5, Vec3::UnitX()));
    const ImageGray img = render_image(scene, k, cam);
    CHECK(static_cast<int>(img.at(k.width / 2, 0)) == 30);
}

TEST_CASE("simulate_scan matches the analytic ray-plane intersection") {
    Scene scene;
    Plane ground;
    ground.anchor = Vec3(0, 1.6, 0);
    ground.normal = Vec3(0, -1, 0);
    scene.planes.push_back(ground);

    LidarModel model;
    model.beam_count = 4;
    model.vertical_fov_min_deg = -20.0;
    model.vertical_fov_max_deg = -5.0;
    model.azimuth_step_deg = 90.0;
    model.range_noise_sigma = 0.0;

    const PointCloud scan = simulate_scan(scene, model, Pose::identity());
    REQUIRE(!scan.points.empty());
    REQUIRE(scan.points.size() == scan.beam_index.size());
    for (std::size_t i = 0; i < scan.points.size(); ++i) {
        const Vec3& p = scan.points[i];
        // every hit lies on the plane y = 1.6 (sensor frame = world frame here)
        CHECK(p.y() == doctest::Approx(1.6).epsilon(1e-9));
        // the range matches 1.6 / sin(elevation below horizon)
        const double el = std::asin(p.y() / p.norm());
        const double expected_range = 1.6 / std::sin(el);
        CHECK(p.norm() == doctest::Approx(expected_range).epsilon(1e-9));
        CHECK(scan.beam_index[i] >= 0);
        CHECK(scan.beam_index[i] < model.beam_count);
    }
}

TEST_CASE("simulate_scan beam indices cover the configured beams") {
    const Scene scene = standard_scene(3);
    LidarModel model;
    model.beam_count = 16;
    model.azimuth_step_deg = 2.0;
    Pose lidar;
    lidar.translation = Vec3(0, 0, 1);
    const PointCloud scan = simulate_scan(scene, model, lidar);
    REQUIRE(!scan.points.empty());
    std::vector<int> seen(16, 0);
    for (int b : scan.beam_index) {
        REQUIRE(b >= 0);
        REQUIRE(b < 16);
        seen[b]++;
    }
    CHECK(std::count(seen.begin(), seen.end(), 0) == 0);
}

TEST_CASE("simulate_scan of an empty scene is empty") {
    Scene scene;  // no planes
    LidarModel model;
    model.beam_count = 8;
    model.azimuth_step_deg = 10.0;
    const PointCloud scan = simulate_scan(scene, model, Pose::identity());
    CHECK(scan.points.empty());
    CHECK(scan.beam_index.empty());
}

TEST_CASE("simulate_scan noise is seeded and deterministic") {
    const Scene scene = standard_scene(3);
    LidarModel model;
    model.beam_count = 8;
    model.azimuth_step_deg = 5.0;
    model.range_noise_sigma = 0.02;
    model.seed = 99;
    const PointCloud a = simulate_scan(scene, model, Pose::identity());
    const PointCloud b = simulate_scan(scene, model, Pose::identity());
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i)
        CHECK((a.points[i] - b.points[i]).norm() == 0.0);
    model.seed = 100;
    const PointCloud c = simulate_scan(scene, model, Pose::identity());
    REQUIRE(c.points.size() == a.points.size());
    double max_diff = 0;
    for (std::size_t i = 0; i < a.points.size(); ++i)
        max_diff = std::max(max_diff, (a.points[i] - c.points[i]).norm());
    CHECK(max_diff > 0.0);
}

TEST_CASE("inject_vo_drift") {
    TrajectoryConfig tcfg;
    tcfg.length = 20.0;
    const auto gt = generate_trajectory(tcfg);

    SUBCASE("identity drift reproduces the input") {
        DriftModel model;  // scale 1, no noise
        const auto out = inject_vo_drift(gt, model);
        REQUIRE(out.size() == gt.size());
        for (std::size_t i = 0; i < gt.size(); ++i) {
            CHECK((out[i].pose.translation - gt[i].pose.translation).norm() < 1e-12);
            CHECK(out[i].timestamp == gt[i].timestamp);
        }
    }

    SUBCASE("constant 1.1x scales every relative step") {
        DriftModel model;
        model.scale = 1.1;
        const auto out = inject_vo_drift(gt, model);
        CHECK(out.front().pose.translation.norm() < 1e-12);
        for (std::size_t i = 1; i < gt.size(); ++i) {
            const double gt_step =
                (gt[i].pose.translation - gt[i - 1].pose.translation).norm();
            const double out_step =
                (out[i].pose.translation - out[i - 1].pose.translation).norm();
            CHECK(out_step == doctest::Approx(1.1 * gt_step).epsilon(1e-9));
        }
    }

    SUBCASE("linear-in-distance drift grows with traveled distance") {
        DriftModel model;
        model.kind = DriftKind::linear_in_distance;
        model.scale = 1.0;
        model.slope_per_meter = 0.01;
        const auto out = inject_vo_drift(gt, model);
        const double first = (out[1].pose.translation - out[0].pose.translation).norm();
        const double last =
            (out.back().pose.translation - out[out.size() - 2].pose.translation).norm();
        CHECK(last > first);
    }

    SUBCASE("random walk is seed-deterministic") {
        DriftModel model;
        model.kind = DriftKind::random_walk;
        model.random_walk_sigma = 0.02;
        model.trans_noise_sigma = 0.01;
        model.seed = 5;
        const auto a = inject_vo_drift(gt, model);
        const auto b = inject_vo_drift(gt, model);
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK((a[i].pose.translation - b[i].pose.translation).norm() == 0.0);
        model.seed = 6;
        const auto c = inject_vo_drift(gt, model);
        double diff = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            diff += (a[i].pose.translation - c[i].pose.translation).norm();
        CHECK(diff > 0.0);
    }
}

TEST_CASE("render and exact correspondences agree to sub-pixel") {
    // exact correspondences projected back into the rendered image should sit
    // on pixels whose intensity equals the scene intensity at the world point
    const Scene scene = standard_scene(11);
    const auto k = test_k();
    Pose cam_prev = Pose::identity();
    Pose cam_cur;
    cam_cur.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(0.01, Vec3::UnitY()));
    cam_cur.translation = Vec3(0.2, 0.0, 1.0);

    std::vector<Vec3> probes;
    for (int i = -5; i <= 5; ++i)
        for (int j = 2; j <= 8; ++j) {
            const Vec3 dir = Vec3(0.08 * i, 0.08 * j, 1.0).normalized();
            if (const auto hit = scene.raycast(cam_prev.translation, dir))
                probes.push_back(hit->point);
        }
    const auto corr = exact_correspondences(scene, k, cam_prev, cam_cur, probes);
    REQUIRE(corr.size() > 10);

    for (const auto& c : corr) {
        // reproject the world point through both cameras: must land exactly
        const auto [px_prev, d_prev] = project_point(k, cam_prev.inverse(), c.world_point);
        const auto [px_cur, d_cur] = project_point(k, cam_cur.inverse(), c.world_point);
        CHECK((px_prev - c.x_prev).norm() < 0.5);
        CHECK((px_cur - c.x_cur).norm() < 0.5);
        CHECK(d_prev == doctest::Approx(c.depth_prev).epsilon(1e-9));
    }
}
