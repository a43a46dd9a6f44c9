#pragma once

#include <optional>
#include <stdexcept>

#include "sketch3d/camera.hpp"
#include "sketch3d/curves.hpp"

namespace sketch3d {

struct BehindCameraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pinhole projection of a camera-space point to pixel coordinates.
inline Vec2 project_point(const Vec3& p_cam, double focal_px, const Vec2& principal_point,
                          double near_z = kDefaultNearZ) {
    if (!(p_cam.z > near_z)) throw BehindCameraError("point at or behind the near plane");
    return {focal_px * p_cam.x / p_cam.z + principal_point.x,
            focal_px * p_cam.y / p_cam.z + principal_point.y};
}

inline Vec2 project_point(const Camera& cam, const Vec3& p_world) {
    return project_point(world_to_camera(cam, p_world), cam.focal_px, cam.principal_point(),
                         cam.near_z);
}

// Perspective projection of a 3D rational Bezier: projected control points
// plus adjusted weights w_i = w~_i * depth_i make the projected curve an
// exact 2D rational Bezier of the same degree. Returns nullopt if any
// control point is at or behind the near plane.
inline std::optional<RationalBezier2> try_project_curve(const RationalBezier3& c,
                                                        const Camera& cam) {
    RationalBezier2 out;
    out.degree = c.degree;
    out.width = c.width;
    out.color = c.color;
    out.user_order = c.user_order;
    out.id = c.id;
    Vec2 pp = cam.principal_point();
    for (int i = 0; i <= c.degree; ++i) {
        Vec3 p_cam = world_to_camera(cam, c.points[i]);
        if (!(p_cam.z > cam.near_z)) return std::nullopt;
        out.points[i] = {cam.focal_px * p_cam.x / p_cam.z + pp.x,
                         cam.focal_px * p_cam.y / p_cam.z + pp.y};
        out.src_weights[i] = c.weights[i];
        out.src_depths[i] = p_cam.z;
        out.weights[i] = c.weights[i] * p_cam.z;
    }
    return out;
}

inline RationalBezier2 project_curve(const RationalBezier3& c, const Camera& cam) {
    auto out = try_project_curve(c, cam);
    if (!out) throw BehindCameraError("curve has a control point at or behind the near plane");
    return *out;
}

// Depth along the projected curve: z~(t) = sum B w / sum B w~, which equals
// the camera-space z of the source 3D curve at the same t.
inline double depth_at(const RationalBezier2& c, double t) {
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i <= c.degree; ++i) {
        double b = bernstein(i, c.degree, t);
        num += b * c.weights[i];
        den += b * c.src_weights[i];
    }
    return num / den;
}

}  // namespace sketch3d
