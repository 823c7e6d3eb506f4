#include "vlo/kitti.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace vlo {

namespace {

std::string frame_name(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%06d", index);
    return buf;
}

std::vector<double> parse_calib_row(const std::string& line, const std::string& path) {
    std::istringstream ss(line);
    std::string label;
    ss >> label;
    std::vector<double> vals;
    double v;
    while (ss >> v) vals.push_back(v);
    if (vals.size() != 12)
        throw ParseError(path + ": calib row '" + label + "' has " +
                         std::to_string(vals.size()) + " values, expected 12");
    return vals;
}

}  // namespace

KittiCalib load_kitti_calib(const std::string& sequence_dir) {
    const std::string path = sequence_dir + "/calib.txt";
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    KittiCalib calib;
    bool have_p0 = false, have_tr = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("P0:", 0) == 0) {
            const auto v = parse_calib_row(line, path);
            calib.intrinsics.fx = v[0];
            calib.intrinsics.cx = v[2];
            calib.intrinsics.fy = v[5];
            calib.intrinsics.cy = v[6];
            have_p0 = true;
        } else if (line.rfind("Tr:", 0) == 0) {
            const auto v = parse_calib_row(line, path);
            Mat3 r;
            r << v[0], v[1], v[2], v[4], v[5], v[6], v[8], v[9], v[10];
            calib.t_lidar_cam = Pose::from_matrix(r, Vec3(v[3], v[7], v[11]));
            have_tr = true;
        }
    }
    if (!have_p0) throw ParseError(path + ": missing P0 row");
    if (!have_tr) throw ParseError(path + ": missing Tr row");
    return calib;
}

std::vector<double> load_kitti_times(const std::string& sequence_dir) {
    const std::string path = sequence_dir + "/times.txt";
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<double> times;
    double t;
    while (in >> t) times.push_back(t);
    return times;
}

PointCloud load_kitti_velodyne(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw IoError("cannot open " + path);
    const auto bytes = static_cast<std::size_t>(in.tellg());
    if (bytes % 16 != 0)
        throw ParseError(path + ": byte length " + std::to_string(bytes) +
                         " is not a multiple of 16");
    in.seekg(0);
    std::vector<float> raw(bytes / 4);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(bytes));
    if (!in) throw IoError("short read on " + path);
    PointCloud cloud;
    cloud.points.reserve(raw.size() / 4);
    for (std::size_t i = 0; i + 3 < raw.size(); i += 4)
        cloud.points.emplace_back(raw[i], raw[i + 1], raw[i + 2]);
    return cloud;
}

FrameBundle load_kitti_frame(const std::string& sequence_dir, int index) {
    const KittiCalib calib = load_kitti_calib(sequence_dir);
    const auto times = load_kitti_times(sequence_dir);
    if (index < 0 || index >= static_cast<int>(times.size()))
        throw IoError("frame index " + std::to_string(index) + " outside times.txt (" +
                      std::to_string(times.size()) + " entries)");
    FrameBundle frame;
    frame.index = index;
    frame.timestamp = times[static_cast<std::size_t>(index)];
    frame.image = read_pgm(sequence_dir + "/image_0/" + frame_name(index) + ".pgm");
    frame.cloud = load_kitti_velodyne(sequence_dir + "/velodyne/" + frame_name(index) + ".bin");
    frame.cloud.timestamp = frame.timestamp;
    return frame;
}

void export_kitti_frame(const std::string& sequence_dir, int index, const ImageGray& image,
                        const PointCloud& cloud) {
    namespace fs = std::filesystem;
    fs::create_directories(sequence_dir + "/image_0");
    fs::create_directories(sequence_dir + "/velodyne");
    write_pgm(sequence_dir + "/image_0/" + frame_name(index) + ".pgm", image);

    const std::string bin_path = sequence_dir + "/velodyne/" + frame_name(index) + ".bin";
    std::ofstream out(bin_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + bin_path);
    for (const Vec3& p : cloud.points) {
        const float rec[4] = {static_cast<float>(p.x()), static_cast<float>(p.y()),
                              static_cast<float>(p.z()), 0.0f};
        out.write(reinterpret_cast<const char*>(rec), sizeof(rec));
    }
    if (!out) throw IoError("write failed: " + bin_path);
}

void export_kitti_calib(const std::string& sequence_dir, const CameraIntrinsics& k,
                        const Pose& t_lidar_cam) {
    std::filesystem::create_directories(sequence_dir);
    const std::string path = sequence_dir + "/calib.txt";
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << std::setprecision(17);
    out << "P0: " << k.fx << " 0 " << k.cx << " 0 0 " << k.fy << ' ' << k.cy
        << " 0 0 0 1 0\n";
    const Mat3 r = t_lidar_cam.rotation_matrix();
    const Vec3& t = t_lidar_cam.translation;
    out << "Tr:";
    for (int row = 0; row < 3; ++row) {
        for (int col = 0; col < 3; ++col) out << ' ' << r(row, col);
        out << ' ' << t(row);
    }
    out << '\n';
}

void export_kitti_times(const std::string& sequence_dir, const std::vector<double>& times) {
    std::filesystem::create_directories(sequence_dir);
    const std::string path = sequence_dir + "/times.txt";
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << std::setprecision(17);
    for (double t : times) out << t << '\n';
}

}  // namespace vlo
