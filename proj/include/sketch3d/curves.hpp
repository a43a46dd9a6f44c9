#pragma once

#include <array>
#include <cassert>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "sketch3d/geometry.hpp"

namespace sketch3d {

inline constexpr int kMaxDegree = 3;
inline constexpr double kDefaultStrokeWidth = 1.5;

// Bernstein basis B_{i,n}(t) = C(n,i) t^i (1-t)^(n-i), n <= 3.
inline double bernstein(int i, int n, double t) {
    assert(i >= 0 && i <= n && n >= 0 && n <= kMaxDegree);
    double s = 1.0 - t;
    switch (n) {
        case 0: return 1.0;
        case 1: return i == 0 ? s : t;
        case 2:
            if (i == 0) return s * s;
            if (i == 1) return 2.0 * s * t;
            return t * t;
        default:
            if (i == 0) return s * s * s;
            if (i == 1) return 3.0 * s * s * t;
            if (i == 2) return 3.0 * s * t * t;
            return t * t * t;
    }
}

namespace detail {

inline void validate_common(int degree, const std::array<double, 4>& weights, double width,
                            const Rgba& color) {
    if (degree < 1 || degree > kMaxDegree)
        throw std::invalid_argument("curve degree must be 1, 2 or 3");
    bool any_positive = false;
    for (int i = 0; i <= degree; ++i) {
        if (weights[i] < 0.0) throw std::invalid_argument("curve weights must be non-negative");
        if (weights[i] > 0.0) any_positive = true;
    }
    if (!any_positive) throw std::invalid_argument("at least one curve weight must be positive");
    if (!(width > 0.0)) throw std::invalid_argument("stroke width must be positive");
    for (double c : {color.r, color.g, color.b, color.a})
        if (c < 0.0 || c > 1.0) throw std::invalid_argument("color channels must be in [0,1]");
}

}  // namespace detail

// A 3D stroke: rational Bezier of degree 1..3 plus stroke attributes.
// Immutable by convention once built; validate() is called by the factory
// and by deserializers.
struct RationalBezier3 {
    int degree = 3;
    std::array<Vec3, 4> points{};
    std::array<double, 4> weights{1.0, 1.0, 1.0, 1.0};
    double width = kDefaultStrokeWidth;   // screen-space pixels
    Rgba color{0.0, 0.0, 0.0, 1.0};       // opaque black
    int user_order = 0;                   // secondary sort key for depth ties
    int id = 0;

    int n_points() const { return degree + 1; }

    void validate() const { detail::validate_common(degree, weights, width, color); }
};

inline RationalBezier3 make_curve3(int degree, const std::array<Vec3, 4>& points,
                                   const std::array<double, 4>& weights = {1, 1, 1, 1},
                                   double width = kDefaultStrokeWidth,
                                   Rgba color = {0, 0, 0, 1}, int user_order = 0, int id = 0) {
    RationalBezier3 c{degree, points, weights, width, color, user_order, id};
    c.validate();
    return c;
}

// The 2D projection of a RationalBezier3. Carries the adjusted weights
// w_i = src_weights_i * src_depths_i plus the original weights and the
// camera-space control-point depths so depths along the curve can be
// recovered without the 3D curve.
struct RationalBezier2 {
    int degree = 3;
    std::array<Vec2, 4> points{};          // pixel coordinates
    std::array<double, 4> weights{1, 1, 1, 1};      // adjusted
    std::array<double, 4> src_weights{1, 1, 1, 1};  // original 3D weights
    std::array<double, 4> src_depths{1, 1, 1, 1};   // camera-space z, all > 0
    double width = kDefaultStrokeWidth;
    Rgba color{0, 0, 0, 1};
    int user_order = 0;
    int id = 0;

    int n_points() const { return degree + 1; }

    void validate() const {
        detail::validate_common(degree, weights, width, color);
        for (int i = 0; i <= degree; ++i) {
            if (!(src_depths[i] > 0.0))
                throw std::invalid_argument("projected curve control depth must be positive");
        }
    }
};

// Convenience for tests and 2D-only rendering: a curve drawn directly in
// pixel space at uniform depth 1 (adjusted weights equal the given ones).
inline RationalBezier2 make_curve2(int degree, const std::array<Vec2, 4>& points,
                                   const std::array<double, 4>& weights = {1, 1, 1, 1},
                                   double width = kDefaultStrokeWidth,
                                   Rgba color = {0, 0, 0, 1}, int user_order = 0, int id = 0) {
    RationalBezier2 c;
    c.degree = degree;
    c.points = points;
    c.weights = weights;
    c.src_weights = weights;
    c.src_depths = {1, 1, 1, 1};
    c.width = width;
    c.color = color;
    c.user_order = user_order;
    c.id = id;
    c.validate();
    return c;
}

struct Sketch {
    std::vector<RationalBezier3> curves;
    Rgba background{1.0, 1.0, 1.0, 1.0};

    void validate() const {
        for (size_t i = 0; i < curves.size(); ++i) {
            curves[i].validate();
            for (size_t j = i + 1; j < curves.size(); ++j)
                if (curves[i].id == curves[j].id)
                    throw std::invalid_argument("sketch curve ids must be unique");
        }
    }
};

inline Vec3 eval3(const RationalBezier3& c, double t) {
    Vec3 num{};
    double den = 0.0;
    for (int i = 0; i <= c.degree; ++i) {
        double bw = bernstein(i, c.degree, t) * c.weights[i];
        num += bw * c.points[i];
        den += bw;
    }
    return num / den;
}

inline Vec2 eval2(const RationalBezier2& c, double t) {
    Vec2 num{};
    double den = 0.0;
    for (int i = 0; i <= c.degree; ++i) {
        double bw = bernstein(i, c.degree, t) * c.weights[i];
        num += bw * c.points[i];
        den += bw;
    }
    return num / den;
}

// Value and first derivative of the rational form (quotient rule).
inline void eval2_with_derivative(const RationalBezier2& c, double t, Vec2& p, Vec2& dp) {
    Vec2 num{};
    Vec2 dnum{};
    double den = 0.0;
    double dden = 0.0;
    int n = c.degree;
    for (int i = 0; i <= n; ++i) {
        double b = bernstein(i, n, t);
        // dB_{i,n}/dt = n (B_{i-1,n-1} - B_{i,n-1})
        double db = n * ((i > 0 ? bernstein(i - 1, n - 1, t) : 0.0) -
                         (i < n ? bernstein(i, n - 1, t) : 0.0));
        num += (b * c.weights[i]) * c.points[i];
        dnum += (db * c.weights[i]) * c.points[i];
        den += b * c.weights[i];
        dden += db * c.weights[i];
    }
    p = num / den;
    dp = (dnum * den - num * dden) / (den * den);
}

template <typename Curve>
double polyline_length(const Curve& c, int n_seg) {
    if (n_seg < 1) throw std::invalid_argument("polyline_length needs n_seg >= 1");
    double total = 0.0;
    auto prev = [&] {
        if constexpr (std::is_same_v<Curve, RationalBezier3>) return eval3(c, 0.0);
        else return eval2(c, 0.0);
    }();
    for (int k = 1; k <= n_seg; ++k) {
        double t = static_cast<double>(k) / n_seg;
        auto p = [&] {
            if constexpr (std::is_same_v<Curve, RationalBezier3>) return eval3(c, t);
            else return eval2(c, t);
        }();
        total += (p - prev).norm();
        prev = p;
    }
    return total;
}

}  // namespace sketch3d
