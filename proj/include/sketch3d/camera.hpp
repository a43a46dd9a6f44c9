#pragma once

#include <cmath>
#include <stdexcept>

#include "sketch3d/geometry.hpp"
#include "sketch3d/rng.hpp"

namespace sketch3d {

inline constexpr double kDefaultNearZ = 1e-3;

inline double deg_to_rad(double d) { return d * (kPi / 180.0); }

// Pinhole camera.
//
// Conventions (fixed here, used everywhere):
//   * world up axis is +y;
//   * camera space is right-handed with +x right, +y down, +z forward into
//     the scene, so visible points have camera z > 0;
//   * pixel origin is the top-left corner, y grows downward, pixel centers
//     sit at half-integer coordinates; the principal point is the image
//     center (width/2, height/2).
struct Camera {
    Mat3 rotation;        // world -> camera
    Vec3 translation{};   // p_cam = rotation * p_world + translation
    double focal_px = 256.0;
    int image_width = 512;
    int image_height = 512;
    double near_z = kDefaultNearZ;

    Vec2 principal_point() const {
        return {image_width * 0.5, image_height * 0.5};
    }

    void validate() const {
        if (!(focal_px > 0)) throw std::invalid_argument("focal length must be positive");
        if (!(near_z > 0)) throw std::invalid_argument("near_z must be positive");
        if (image_width <= 0 || image_height <= 0)
            throw std::invalid_argument("image dimensions must be positive");
        Mat3 should_be_identity = rotation * rotation.transposed();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double want = i == j ? 1.0 : 0.0;
                if (std::abs(should_be_identity.m[i][j] - want) > 1e-10)
                    throw std::invalid_argument("camera rotation must be orthonormal");
            }
    }
};

inline double fov_to_focal(double fov_deg, int image_height) {
    if (!(fov_deg > 0.0) || !(fov_deg < 180.0))
        throw std::invalid_argument("fov must be in (0, 180) degrees");
    return (image_height * 0.5) / std::tan(deg_to_rad(fov_deg) * 0.5);
}

inline Vec3 world_to_camera(const Camera& cam, const Vec3& p) {
    return cam.rotation * p + cam.translation;
}

// Camera at `position` looking at `target`.
inline Camera look_at(const Vec3& position, const Vec3& target, double focal_px,
                      int image_width, int image_height, Vec3 up = {0, 1, 0},
                      double near_z = kDefaultNearZ) {
    Vec3 forward = (target - position).normalized();
    Vec3 right = forward.cross(up);
    if (right.norm2() < 1e-16) {
        // looking straight along the up axis; any horizontal right works
        right = forward.cross({1, 0, 0});
        if (right.norm2() < 1e-16) right = forward.cross({0, 0, 1});
    }
    right = right.normalized();
    Vec3 down = forward.cross(right);  // unit by construction

    Camera cam;
    cam.rotation = Mat3::from_rows(right, down, forward);
    cam.translation = (cam.rotation * position) * -1.0;
    cam.focal_px = focal_px;
    cam.image_width = image_width;
    cam.image_height = image_height;
    cam.near_z = near_z;
    return cam;
}

struct CameraSamplerConfig {
    double radius_min = 1.8;
    double radius_max = 2.0;
    double azimuth_min_deg = -180.0;
    double azimuth_max_deg = 180.0;
    double elevation_min_deg = 0.0;
    double elevation_max_deg = 30.0;
    double fov_deg = 60.0;
    int image_width = 512;
    int image_height = 512;

    void validate() const {
        if (radius_max < radius_min || azimuth_max_deg < azimuth_min_deg ||
            elevation_max_deg < elevation_min_deg)
            throw std::invalid_argument("camera sampler ranges must be non-empty");
        if (!(fov_deg > 0.0) || !(fov_deg < 180.0))
            throw std::invalid_argument("fov must be in (0, 180) degrees");
    }

    static CameraSamplerConfig fixed_radius(double radius) {
        CameraSamplerConfig cfg;
        cfg.radius_min = cfg.radius_max = radius;
        return cfg;
    }
};

// Position on the sphere around the origin. Azimuth 0 puts the camera on the
// +z axis, elevation lifts it toward +y.
inline Vec3 orbit_position(double radius, double azimuth_deg, double elevation_deg) {
    double az = deg_to_rad(azimuth_deg);
    double el = deg_to_rad(elevation_deg);
    return {radius * std::cos(el) * std::sin(az), radius * std::sin(el),
            radius * std::cos(el) * std::cos(az)};
}

inline Camera camera_at(double radius, double azimuth_deg, double elevation_deg,
                        const CameraSamplerConfig& cfg) {
    return look_at(orbit_position(radius, azimuth_deg, elevation_deg), {0, 0, 0},
                   fov_to_focal(cfg.fov_deg, cfg.image_height), cfg.image_width,
                   cfg.image_height);
}

inline Camera sample_camera(Pcg32& rng, const CameraSamplerConfig& cfg) {
    cfg.validate();
    double radius = rng.uniform(cfg.radius_min, cfg.radius_max);
    double azimuth = rng.uniform(cfg.azimuth_min_deg, cfg.azimuth_max_deg);
    double elevation = rng.uniform(cfg.elevation_min_deg, cfg.elevation_max_deg);
    return camera_at(radius, azimuth, elevation, cfg);
}

}  // namespace sketch3d
