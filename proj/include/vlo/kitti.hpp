#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vlo/geometry.hpp"
#include "vlo/image_ops.hpp"

namespace vlo {

struct FrameBundle {
    int index = 0;
    double timestamp = 0.0;
    ImageGray image;
    PointCloud cloud;
    std::optional<Pose> vo_pose;  // drifting VO input, T_w^C
    std::optional<Pose> gt_pose;
};

struct KittiCalib {
    CameraIntrinsics intrinsics;  // from the P0 projection row
    Pose t_lidar_cam;             // from the Tr row (velodyne -> cam0)
};

/// Parses calib.txt: "P0: <12 floats>" for intrinsics, "Tr: <12 floats>" for
/// the camera-LiDAR extrinsics.
KittiCalib load_kitti_calib(const std::string& sequence_dir);

std::vector<double> load_kitti_times(const std::string& sequence_dir);

/// Little-endian float32 (x, y, z, reflectance) quadruples.
PointCloud load_kitti_velodyne(const std::string& path);

/// Loads image (image_0/<6-digit index>.pgm), scan, calib and timestamp for
/// one frame of a KITTI-layout sequence.
FrameBundle load_kitti_frame(const std::string& sequence_dir, int index);

/// Writes one frame in KITTI layout (velodyne .bin + image_0 .pgm); calib.txt
/// and times.txt are written once by export_kitti_calib / export_kitti_times.
void export_kitti_frame(const std::string& sequence_dir, int index, const ImageGray& image,
                        const PointCloud& cloud);
void export_kitti_calib(const std::string& sequence_dir, const CameraIntrinsics& k,
                        const Pose& t_lidar_cam);
void export_kitti_times(const std::string& sequence_dir, const std::vector<double>& times);

}  // namespace vlo
