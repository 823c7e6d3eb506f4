#include "vlo/synth_world.hpp"

#include <cmath>
#include <random>

namespace vlo {

namespace {

constexpr double kDegToRad = M_PI / 180.0;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform [0,1) lattice value for integer cell (ix, iy) of one texture layer.
double lattice_value(std::uint64_t seed, std::int64_t ix, std::int64_t iy, int layer) {
    std::uint64_t h = splitmix64(seed ^ (0x100000001b3ULL * static_cast<std::uint64_t>(layer)));
    h = splitmix64(h ^ static_cast<std::uint64_t>(ix));
    h = splitmix64(h ^ static_cast<std::uint64_t>(iy));
    return static_cast<double>(h >> 11) * (1.0 / 9007199254740992.0);
}

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

double value_noise(std::uint64_t seed, double u, double v, int layer) {
    const double fu = std::floor(u), fv = std::floor(v);
    const auto iu = static_cast<std::int64_t>(fu);
    const auto iv = static_cast<std::int64_t>(fv);
    const double tu = smoothstep(u - fu), tv = smoothstep(v - fv);
    const double v00 = lattice_value(seed, iu, iv, layer);
    const double v10 = lattice_value(seed, iu + 1, iv, layer);
    const double v01 = lattice_value(seed, iu, iv + 1, layer);
    const double v11 = lattice_value(seed, iu + 1, iv + 1, layer);
    const double a = v00 + (v10 - v00) * tu;
    const double b = v01 + (v11 - v01) * tu;
    return a + (b - a) * tv;
}

double texture_intensity(const PlaneTexture& tex, double u, double v) {
    double smooth = 0.0;
    double amp = 1.0, freq = tex.frequency, norm = 0.0;
    for (int o = 0; o < tex.octaves; ++o) {
        smooth += amp * (value_noise(tex.seed, u * freq, v * freq, o) - 0.5) * 2.0;
        norm += amp;
        amp *= 0.5;
        freq *= 2.0;
    }
    if (norm > 0.0) smooth /= norm;
    // sharp-edged component: nearest-neighbour lattice
    const double bu = u * tex.block_frequency, bv = v * tex.block_frequency;
    const double block = (lattice_value(tex.seed, static_cast<std::int64_t>(std::floor(bu)),
                                        static_cast<std::int64_t>(std::floor(bv)), 100) -
                          0.5) *
                         2.0;
    // diagonal binary stripes: strong straight edges with no corners of their
    // own (an ideal straight edge covers at most 8 contiguous pixels of a
    // FAST ring)
    double stripe = 0.0;
    if (tex.amp_stripe > 0.0 && tex.stripe_frequency > 0.0) {
        const double s = (u + v) * tex.stripe_frequency;
        stripe = lattice_value(tex.seed, static_cast<std::int64_t>(std::floor(s)), 0, 200) < 0.5
                     ? -1.0
                     : 1.0;
    }
    const double value =
        tex.base + tex.amp_smooth * smooth + tex.amp_block * block + tex.amp_stripe * stripe;
    return std::clamp(value, 0.0, 255.0);
}

}  // namespace

Vec3 Plane::axis_u() const {
    const Vec3 ref = std::abs(normal.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX();
    return normal.cross(ref).normalized();
}

Vec3 Plane::axis_v() const { return normal.cross(axis_u()).normalized(); }

std::optional<RayHit> Scene::raycast(const Vec3& origin, const Vec3& dir) const {
    std::optional<RayHit> best;
    for (int i = 0; i < static_cast<int>(planes.size()); ++i) {
        const Plane& pl = planes[i];
        const double denom = dir.dot(pl.normal);
        if (std::abs(denom) < 1e-12) continue;
        const double t = (pl.anchor - origin).dot(pl.normal) / denom;
        if (t <= 1e-6) continue;
        const Vec3 p = origin + t * dir;
        const Vec3 rel = p - pl.anchor;
        if (std::abs(rel.dot(pl.axis_u())) > pl.extent_u ||
            std::abs(rel.dot(pl.axis_v())) > pl.extent_v)
            continue;
        if (!best || t < best->range) best = RayHit{p, t, i};
    }
    return best;
}

double Scene::intensity_at(const RayHit& hit) const {
    const Plane& pl = planes[hit.plane_index];
    const Vec3 rel = hit.point - pl.anchor;
    return texture_intensity(pl.texture, rel.dot(pl.axis_u()), rel.dot(pl.axis_v()));
}

Scene standard_scene(std::uint64_t seed) {
    Scene scene;
    scene.background_intensity = 25;

    Plane ground;
    ground.anchor = Vec3(0, 1.6, 0);
    ground.normal = Vec3(0, -1, 0);
    ground.texture.seed = splitmix64(seed ^ 11);
    ground.texture.base = 110;
    ground.texture.amp_smooth = 35;
    ground.texture.amp_block = 8;
    ground.texture.frequency = 0.5;
    ground.texture.block_frequency = 0.42;
    ground.texture.amp_stripe = 25;
    ground.texture.stripe_frequency = 8;
    scene.planes.push_back(ground);

    Plane left;
    left.anchor = Vec3(-7, 0, 0);
    left.normal = Vec3(1, 0, 0);
    left.texture.seed = splitmix64(seed ^ 22);
    left.texture.base = 130;
    left.texture.amp_smooth = 40;
    left.texture.amp_block = 9;
    left.texture.frequency = 0.6;
    left.texture.block_frequency = 0.52;
    left.texture.amp_stripe = 25;
    left.texture.stripe_frequency = 8;
    scene.planes.push_back(left);

    Plane right = left;
    right.anchor = Vec3(7, 0, 0);
    right.normal = Vec3(-1, 0, 0);
    right.texture.seed = splitmix64(seed ^ 33);
    scene.planes.push_back(right);

    return scene;
}

Scene corridor_scene(std::uint64_t seed) {
    Scene scene;
    scene.background_intensity = 20;

    Plane floor;
    floor.anchor = Vec3(0, 1.6, 0);
    floor.normal = Vec3(0, -1, 0);
    floor.texture.seed = splitmix64(seed ^ 44);
    floor.texture.base = 90;
    floor.texture.amp_smooth = 3;
    floor.texture.amp_block = 2;
    scene.planes.push_back(floor);

    Plane left;
    left.anchor = Vec3(-3, 0, 0);
    left.normal = Vec3(1, 0, 0);
    left.texture.seed = splitmix64(seed ^ 55);
    left.texture.base = 100;
    left.texture.amp_smooth = 3;
    left.texture.amp_block = 2;
    scene.planes.push_back(left);

    Plane right = left;
    right.anchor = Vec3(3, 0, 0);
    right.normal = Vec3(-1, 0, 0);
    right.texture.seed = splitmix64(seed ^ 66);
    scene.planes.push_back(right);

    return scene;
}

std::vector<TimedPose> generate_trajectory(const TrajectoryConfig& cfg) {
    if (cfg.length <= 0 || cfg.speed <= 0 || cfg.rate <= 0)
        throw std::domain_error("trajectory length, speed and rate must be positive");

    const double dt = 1.0 / cfg.rate;
    const double step_at = cfg.speed_step_fraction * cfg.length;

    std::vector<TimedPose> out;
    double s = 0.0;  // arc length travelled
    double t = 0.0;
    while (true) {
        TimedPose tp;
        tp.timestamp = t;
        switch (cfg.kind) {
            case TrajectoryKind::straight:
                tp.pose.translation = Vec3(0, 0, s);
                break;
            case TrajectoryKind::arc: {
                const double phi = s / cfg.arc_radius;
                tp.pose.translation =
                    Vec3(cfg.arc_radius * (1.0 - std::cos(phi)), 0, cfg.arc_radius * std::sin(phi));
                tp.pose.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(phi, Vec3::UnitY()));
                break;
            }
            case TrajectoryKind::corridor_detour: {
                // swerve around an obstacle: a smooth lane change out and back
                // that stays inside the corridor walls
                const double s0 = 0.45 * cfg.length, s1 = 0.75 * cfg.length;
                const double amp = 1.5;
                tp.pose.translation = Vec3(0, 0, s);
                if (s > s0 && s < s1) {
                    const double u = (s - s0) / (s1 - s0);
                    const double sp = std::sin(M_PI * u);
                    tp.pose.translation.x() = -amp * sp * sp;
                    const double dxds = -amp * M_PI / (s1 - s0) * std::sin(2.0 * M_PI * u);
                    tp.pose.rotation = Eigen::Quaterniond(
                        Eigen::AngleAxisd(std::atan2(dxds, 1.0), Vec3::UnitY()));
                }
                break;
            }
        }
        out.push_back(tp);
        if (s >= cfg.length - 1e-9) break;
        const double v = s >= step_at ? cfg.speed * cfg.speed_step_factor : cfg.speed;
        s = std::min(s + v * dt, cfg.length);
        t += dt;
    }
    return out;
}

std::vector<TimedPose> generate_trajectory(TrajectoryKind kind, double length, double speed,
                                           double rate) {
    TrajectoryConfig cfg;
    cfg.kind = kind;
    cfg.length = length;
    cfg.speed = speed;
    cfg.rate = rate;
    return generate_trajectory(cfg);
}

ImageGray render_image(const Scene& scene, const CameraIntrinsics& k, const Pose& cam_pose) {
    if (k.fx <= 0 || k.fy <= 0 || k.width <= 0 || k.height <= 0)
        throw std::domain_error("invalid camera intrinsics");
    ImageGray img = ImageGray::constant(k.width, k.height, scene.background_intensity);
    const Vec3 origin = cam_pose.translation;
    const Mat3 r = cam_pose.rotation_matrix();
    // 3x3 subpixel rays per pixel: anti-aliasing keeps the hard texture edges
    // from quantizing to pixel boundaries, which would bias sub-pixel tracking
    constexpr int ss = 3;
    constexpr double sub_step = 1.0 / ss;
    constexpr double sub_org = 0.5 * (sub_step - 1.0);
    for (int y = 0; y < k.height; ++y) {
        for (int x = 0; x < k.width; ++x) {
            double sum = 0.0;
            for (int sy = 0; sy < ss; ++sy) {
                for (int sx = 0; sx < ss; ++sx) {
                    const double u = x + sub_org + sx * sub_step;
                    const double v = y + sub_org + sy * sub_step;
                    const Vec3 dir_cam((u - k.cx) / k.fx, (v - k.cy) / k.fy, 1.0);
                    const Vec3 dir = (r * dir_cam).normalized();
                    const auto hit = scene.raycast(origin, dir);
                    sum += hit ? scene.intensity_at(*hit)
                               : static_cast<double>(scene.background_intensity);
                }
            }
            img.at(x, y) = static_cast<std::uint8_t>(std::lround(sum / (ss * ss)));
        }
    }
    return img;
}

PointCloud simulate_scan(const Scene& scene, const LidarModel& model, const Pose& lidar_pose) {
    if (model.beam_count < 1 || model.azimuth_step_deg <= 0 || model.max_range <= 0)
        throw std::domain_error("invalid lidar model");
    std::mt19937_64 rng(model.seed);
    std::normal_distribution<double> noise(0.0, 1.0);

    PointCloud cloud;
    const Mat3 r = lidar_pose.rotation_matrix();
    const Vec3 origin = lidar_pose.translation;
    for (int beam = 0; beam < model.beam_count; ++beam) {
        const double frac = model.beam_count == 1 ? 0.5
                                                  : static_cast<double>(beam) /
                                                        (model.beam_count - 1);
        const double elev = (model.vertical_fov_min_deg +
                             frac * (model.vertical_fov_max_deg - model.vertical_fov_min_deg)) *
                            kDegToRad;
        for (double az_deg = 0.0; az_deg < 360.0 - 1e-9; az_deg += model.azimuth_step_deg) {
            const double az = az_deg * kDegToRad;
            // sensor frame matches the camera convention: z forward, y down
            const Vec3 dir_sensor(std::cos(elev) * std::sin(az), -std::sin(elev),
                                  std::cos(elev) * std::cos(az));
            const auto hit = scene.raycast(origin, r * dir_sensor);
            // noise is drawn per ray so the stream is independent of the hit pattern
            const double eps = model.range_noise_sigma > 0.0
                                   ? noise(rng) * model.range_noise_sigma
                                   : 0.0;
            if (!hit || hit->range > model.max_range) continue;
            cloud.points.push_back((hit->range + eps) * dir_sensor);
            cloud.beam_index.push_back(beam);
        }
    }
    return cloud;
}

std::vector<TimedPose> inject_vo_drift(const std::vector<TimedPose>& gt,
                                       const DriftModel& model) {
    if (gt.size() < 2) throw std::domain_error("need at least 2 poses to inject drift");
    std::mt19937_64 rng(model.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<TimedPose> out;
    out.reserve(gt.size());
    out.push_back(gt.front());
    double distance = 0.0;
    double walk = model.scale;
    for (std::size_t k = 1; k < gt.size(); ++k) {
        Pose rel = compose(gt[k - 1].pose.inverse(), gt[k].pose);
        distance += rel.translation.norm();

        double scale = model.scale;
        switch (model.kind) {
            case DriftKind::constant:
                break;
            case DriftKind::linear_in_distance:
                scale = model.scale + model.slope_per_meter * distance;
                break;
            case DriftKind::random_walk:
                walk *= std::exp(gauss(rng) * model.random_walk_sigma);
                scale = walk;
                break;
        }
        if (!(scale > 0.0)) throw std::domain_error("drift scale must stay positive");

        rel.translation *= scale;
        if (model.trans_noise_sigma > 0.0)
            rel.translation += model.trans_noise_sigma * Vec3(gauss(rng), gauss(rng), gauss(rng));
        if (model.rot_noise_sigma_deg > 0.0) {
            Vec3 axis(gauss(rng), gauss(rng), gauss(rng));
            if (axis.norm() > 1e-12) {
                const double angle = gauss(rng) * model.rot_noise_sigma_deg * kDegToRad;
                rel.rotation = (rel.rotation *
                                Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis.normalized())))
                                   .normalized();
            }
        }

        TimedPose tp;
        tp.timestamp = gt[k].timestamp;
        tp.pose = compose(out.back().pose, rel);
        out.push_back(tp);
    }
    return out;
}

std::vector<Correspondence> exact_correspondences(const Scene& scene,
                                                  const CameraIntrinsics& k,
                                                  const Pose& cam_prev, const Pose& cam_cur,
                                                  const std::vector<Vec3>& world_points) {
    const Pose prev_inv = cam_prev.inverse();
    const Pose cur_inv = cam_cur.inverse();

    auto visible = [&](const Pose& cam, const Vec3& p_cam, Vec2& px_out) {
        if (p_cam.z() <= 1e-6) return false;
        const Vec2 px(k.fx * p_cam.x() / p_cam.z() + k.cx, k.fy * p_cam.y() / p_cam.z() + k.cy);
        if (px.x() < 0 || px.y() < 0 || px.x() >= k.width || px.y() >= k.height) return false;
        // occlusion: the camera ray must reach the point itself
        const Vec3 origin = cam.translation;
        const Vec3 target = cam.apply(p_cam);
        const double dist = (target - origin).norm();
        const auto hit = scene.raycast(origin, (target - origin) / dist);
        if (!hit || std::abs(hit->range - dist) > 1e-6 * std::max(dist, 1.0)) return false;
        px_out = px;
        return true;
    };

    std::vector<Correspondence> out;
    for (const Vec3& pw : world_points) {
        const Vec3 p_prev = prev_inv.apply(pw);
        const Vec3 p_cur = cur_inv.apply(pw);
        Vec2 px_prev, px_cur;
        if (!visible(cam_prev, p_prev, px_prev) || !visible(cam_cur, p_cur, px_cur)) continue;
        out.push_back(Correspondence{px_prev, px_cur, p_prev.z(), pw});
    }
    return out;
}

}  // namespace vlo
