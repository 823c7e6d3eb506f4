#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlo/geometry.hpp"

namespace vlo {

struct ImageGray {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> intensities;  // row-major

    std::uint8_t at(int x, int y) const { return intensities[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return intensities[static_cast<std::size_t>(y) * width + x]; }

    /// Bilinear intensity sample; valid for 0 <= x <= width-1, 0 <= y <= height-1.
    double sample(double x, double y) const;

    bool in_bounds(double x, double y) const {
        return x >= 0.0 && x <= width - 1 && y >= 0.0 && y <= height - 1;
    }

    static ImageGray constant(int w, int h, std::uint8_t value) {
        return ImageGray{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h, value)};
    }
};

/// Level 0 is the full-resolution image; each level halves the previous
/// (floored) by 2x2 box averaging.
struct Pyramid {
    std::vector<ImageGray> levels;
};

Pyramid build_pyramid(const ImageGray& img, int num_levels);

enum class TrackStatus { tracked, lost };

struct TrackedPoint {
    Vec2 prev_pixel;
    Vec2 cur_pixel;
    TrackStatus status = TrackStatus::lost;
};

/// Central-difference gradient on bilinearly interpolated intensities.
Vec2 gradient_at(const ImageGray& img, const Vec2& pixel);

struct CornerResult {
    bool is_corner = false;
    double score = 0.0;  // arc contrast, used for non-maximum suppression
};

/// Segment test: >= 9 contiguous ring pixels all brighter than center+threshold
/// or all darker than center-threshold, on the 16-pixel radius-3 circle.
CornerResult is_fast9_corner(const ImageGray& img, int px, int py, double threshold);

/// Relaxed 4-point pre-test for sparse projections: passes when at least 3 of
/// the axis-aligned ring pixels at offset 3 differ from the center by more
/// than the threshold.
bool fast12_pretest(const ImageGray& img, int px, int py, double threshold);

struct SelectionConfig {
    bool sparse_mode = false;   // replace FAST-9 by the 4-point pre-test
    double fast_threshold = 20.0;
    double grad_min = 8.0;
    double nms_radius = 5.0;
};

/// Filters projected LiDAR keypoints by cornerness and gradient strength, then
/// applies non-maximum suppression for spatial uniformity.
std::vector<ProjectedKeypoint> select_keypoints(const std::vector<ProjectedKeypoint>& projected,
                                                const ImageGray& img,
                                                const SelectionConfig& cfg);

struct TrackerConfig {
    int window = 21;       // square window side, odd
    double eps = 0.01;     // stop when the update norm falls below this (px)
    int max_iters = 30;
    double min_eig = 1e-3; // per-pixel-normalized minimum eigenvalue floor
};

/// Pyramidal Lucas-Kanade tracking of `points` from prev into cur.
std::vector<TrackedPoint> lk_track(const Pyramid& prev, const Pyramid& cur,
                                   const std::vector<Vec2>& points,
                                   const TrackerConfig& cfg);

ImageGray read_pgm(const std::string& path);
void write_pgm(const std::string& path, const ImageGray& img);

}  // namespace vlo
