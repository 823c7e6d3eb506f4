#include "vlo/image_ops.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace vlo {

namespace {

// FAST ring, radius 3, clockwise from 12 o'clock.
constexpr int kRing[16][2] = {
    {0, -3}, {1, -3}, {2, -2}, {3, -1}, {3, 0},  {3, 1},  {2, 2},  {1, 3},
    {0, 3},  {-1, 3}, {-2, 2}, {-3, 1}, {-3, 0}, {-3, -1}, {-2, -2}, {-1, -3}};

constexpr int kPretest[4][2] = {{3, 0}, {-3, 0}, {0, 3}, {0, -3}};

void require_ring_inside(const ImageGray& img, int px, int py) {
    if (px < 3 || py < 3 || px >= img.width - 3 || py >= img.height - 3)
        throw OutOfBoundsError("pixel too close to the border for the radius-3 ring");
}

}  // namespace

double ImageGray::sample(double x, double y) const {
    int x0 = static_cast<int>(std::floor(x));
    int y0 = static_cast<int>(std::floor(y));
    x0 = std::clamp(x0, 0, width - 2);
    y0 = std::clamp(y0, 0, height - 2);
    const double fx = x - x0;
    const double fy = y - y0;
    const double i00 = at(x0, y0), i10 = at(x0 + 1, y0);
    const double i01 = at(x0, y0 + 1), i11 = at(x0 + 1, y0 + 1);
    return (1 - fx) * (1 - fy) * i00 + fx * (1 - fy) * i10 + (1 - fx) * fy * i01 +
           fx * fy * i11;
}

Pyramid build_pyramid(const ImageGray& img, int num_levels) {
    Pyramid pyr;
    pyr.levels.push_back(img);
    for (int l = 1; l < num_levels; ++l) {
        const ImageGray& prev = pyr.levels.back();
        const int w = prev.width / 2;
        const int h = prev.height / 2;
        if (w < 2 || h < 2) break;
        ImageGray next = ImageGray::constant(w, h, 0);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const int sum = prev.at(2 * x, 2 * y) + prev.at(2 * x + 1, 2 * y) +
                                prev.at(2 * x, 2 * y + 1) + prev.at(2 * x + 1, 2 * y + 1);
                next.at(x, y) = static_cast<std::uint8_t>((sum + 2) / 4);
            }
        }
        pyr.levels.push_back(std::move(next));
    }
    return pyr;
}

Vec2 gradient_at(const ImageGray& img, const Vec2& pixel) {
    const double x = pixel.x(), y = pixel.y();
    if (x < 1.0 || y < 1.0 || x > img.width - 2 || y > img.height - 2)
        throw OutOfBoundsError("gradient needs a 1 px margin around the pixel");
    const double gx = (img.sample(x + 1, y) - img.sample(x - 1, y)) / 2.0;
    const double gy = (img.sample(x, y + 1) - img.sample(x, y - 1)) / 2.0;
    return Vec2(gx, gy);
}

CornerResult is_fast9_corner(const ImageGray& img, int px, int py, double threshold) {
    require_ring_inside(img, px, py);
    const double c = img.at(px, py);
    // +1 brighter, -1 darker, 0 similar
    int cls[16];
    double diff[16];
    for (int i = 0; i < 16; ++i) {
        const double v = img.at(px + kRing[i][0], py + kRing[i][1]);
        diff[i] = std::abs(v - c);
        cls[i] = v > c + threshold ? 1 : (v < c - threshold ? -1 : 0);
    }
    CornerResult result;
    for (int sign : {1, -1}) {
        int run = 0;
        double run_sum = 0.0;
        // doubled scan handles wrap-around arcs
        for (int i = 0; i < 32; ++i) {
            const int j = i % 16;
            if (cls[j] == sign) {
                ++run;
                run_sum += diff[j];
                if (run >= 9) {
                    result.is_corner = true;
                    result.score = std::max(result.score, run_sum);
                }
                if (run >= 16) break;  // full circle, stop accumulating duplicates
            } else {
                run = 0;
                run_sum = 0.0;
            }
        }
    }
    return result;
}

bool fast12_pretest(const ImageGray& img, int px, int py, double threshold) {
    require_ring_inside(img, px, py);
    const double c = img.at(px, py);
    int hits = 0;
    for (const auto& off : kPretest)
        if (std::abs(img.at(px + off[0], py + off[1]) - c) > threshold) ++hits;
    return hits >= 3;
}

std::vector<ProjectedKeypoint> select_keypoints(const std::vector<ProjectedKeypoint>& projected,
                                                const ImageGray& img,
                                                const SelectionConfig& cfg) {
    struct Candidate {
        ProjectedKeypoint kp;
        double score;
    };
    std::vector<Candidate> candidates;
    for (const auto& kp : projected) {
        const int px = static_cast<int>(std::lround(kp.pixel.x()));
        const int py = static_cast<int>(std::lround(kp.pixel.y()));
        if (px < 3 || py < 3 || px >= img.width - 3 || py >= img.height - 3) continue;
        const Vec2 g = gradient_at(img, Vec2(px, py));
        if (g.norm() < cfg.grad_min) continue;
        double score;
        if (cfg.sparse_mode) {
            if (!fast12_pretest(img, px, py, cfg.fast_threshold)) continue;
            score = g.norm();
        } else {
            const CornerResult corner = is_fast9_corner(img, px, py, cfg.fast_threshold);
            if (!corner.is_corner) continue;
            score = corner.score;
        }
        candidates.push_back({kp, score});
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.kp.pixel.x() != b.kp.pixel.x()) return a.kp.pixel.x() < b.kp.pixel.x();
        return a.kp.pixel.y() < b.kp.pixel.y();
    });
    std::vector<ProjectedKeypoint> kept;
    const double r2 = cfg.nms_radius * cfg.nms_radius;
    for (const auto& cand : candidates) {
        bool suppressed = false;
        for (const auto& k : kept) {
            if ((k.pixel - cand.kp.pixel).squaredNorm() < r2) {
                suppressed = true;
                break;
            }
        }
        if (!suppressed) kept.push_back(cand.kp);
    }
    return kept;
}

namespace {

// Tracks one point at one pyramid level. Returns false when the window leaves
// the image or the normal equations are too ill-conditioned.
bool lk_refine_level(const ImageGray& prev, const ImageGray& cur, const Vec2& p_prev,
                     Vec2& p_cur, const TrackerConfig& cfg) {
    const int half = cfg.window / 2;
    const double margin = half + 2.0;
    if (p_prev.x() < margin || p_prev.y() < margin || p_prev.x() > prev.width - 1 - margin ||
        p_prev.y() > prev.height - 1 - margin)
        return false;

    const int n = cfg.window * cfg.window;
    std::vector<double> tmpl(n), gx(n), gy(n);
    double gxx = 0, gxy = 0, gyy = 0;
    int idx = 0;
    for (int dy = -half; dy <= half; ++dy) {
        for (int dx = -half; dx <= half; ++dx, ++idx) {
            const double x = p_prev.x() + dx, y = p_prev.y() + dy;
            tmpl[idx] = prev.sample(x, y);
            gx[idx] = (prev.sample(x + 1, y) - prev.sample(x - 1, y)) / 2.0;
            gy[idx] = (prev.sample(x, y + 1) - prev.sample(x, y - 1)) / 2.0;
            gxx += gx[idx] * gx[idx];
            gxy += gx[idx] * gy[idx];
            gyy += gy[idx] * gy[idx];
        }
    }
    const double trace = gxx + gyy;
    const double det = gxx * gyy - gxy * gxy;
    const double min_eig = (trace - std::sqrt(std::max(trace * trace - 4 * det, 0.0))) / 2.0;
    if (min_eig / n < cfg.min_eig) return false;

    for (int it = 0; it < cfg.max_iters; ++it) {
        if (p_cur.x() < margin || p_cur.y() < margin || p_cur.x() > cur.width - 1 - margin ||
            p_cur.y() > cur.height - 1 - margin)
            return false;
        double bx = 0, by = 0;
        idx = 0;
        for (int dy = -half; dy <= half; ++dy) {
            for (int dx = -half; dx <= half; ++dx, ++idx) {
                const double di = cur.sample(p_cur.x() + dx, p_cur.y() + dy) - tmpl[idx];
                bx -= di * gx[idx];
                by -= di * gy[idx];
            }
        }
        const double ux = (gyy * bx - gxy * by) / det;
        const double uy = (gxx * by - gxy * bx) / det;
        if (!std::isfinite(ux) || !std::isfinite(uy)) return false;
        p_cur += Vec2(ux, uy);
        if (std::hypot(ux, uy) < cfg.eps) break;
    }
    return true;
}

}  // namespace

std::vector<TrackedPoint> lk_track(const Pyramid& prev, const Pyramid& cur,
                                   const std::vector<Vec2>& points,
                                   const TrackerConfig& cfg) {
    if (prev.levels.empty() || cur.levels.empty() ||
        prev.levels[0].width != cur.levels[0].width ||
        prev.levels[0].height != cur.levels[0].height)
        throw ConfigError("pyramids must be built from same-size images");
    const int num_levels = static_cast<int>(std::min(prev.levels.size(), cur.levels.size()));

    std::vector<TrackedPoint> out;
    out.reserve(points.size());
    for (const Vec2& p : points) {
        TrackedPoint tp;
        tp.prev_pixel = p;
        tp.cur_pixel = p;
        const double top_scale = std::pow(2.0, num_levels - 1);
        Vec2 guess = p / top_scale;
        bool ok = true;
        for (int l = num_levels - 1; l >= 0; --l) {
            const double scale = std::pow(2.0, l);
            const Vec2 p_level = p / scale;
            Vec2 cur_level = guess;
            const bool level_ok = lk_refine_level(prev.levels[l], cur.levels[l], p_level,
                                                  cur_level, cfg);
            if (level_ok) {
                guess = cur_level;
            } else if (l == 0) {
                ok = false;  // coarser levels may legitimately lack the margin
            }
            if (l > 0) guess *= 2.0;
        }
        if (ok && cur.levels[0].in_bounds(guess.x(), guess.y()) && guess.allFinite()) {
            tp.cur_pixel = guess;
            tp.status = TrackStatus::tracked;
        } else {
            tp.status = TrackStatus::lost;
        }
        out.push_back(tp);
    }
    return out;
}

ImageGray read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open image: " + path);
    std::string magic;
    in >> magic;
    if (magic != "P5") throw ParseError(path + ": not a binary PGM (P5) file");
    auto next_int = [&in, &path]() {
        // skip whitespace and '#' comments between header tokens
        while (true) {
            const int c = in.peek();
            if (c == '#') {
                std::string comment;
                std::getline(in, comment);
            } else if (std::isspace(c)) {
                in.get();
            } else {
                break;
            }
        }
        int v;
        if (!(in >> v)) throw ParseError(path + ": malformed PGM header");
        return v;
    };
    const int w = next_int();
    const int h = next_int();
    const int maxval = next_int();
    if (maxval != 255) throw ParseError(path + ": only 8-bit PGM is supported");
    in.get();  // single whitespace after maxval
    ImageGray img = ImageGray::constant(w, h, 0);
    in.read(reinterpret_cast<char*>(img.intensities.data()),
            static_cast<std::streamsize>(img.intensities.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.intensities.size()))
        throw ParseError(path + ": truncated PGM payload");
    return img;
}

void write_pgm(const std::string& path, const ImageGray& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write image: " + path);
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.intensities.data()),
              static_cast<std::streamsize>(img.intensities.size()));
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace vlo
