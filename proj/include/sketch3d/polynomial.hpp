#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "sketch3d/geometry.hpp"

namespace sketch3d {

// Dense real polynomial, ascending coefficients, degree <= 9 (enough for the
// degree-9 products that appear while building cubic isolators).
struct Polynomial {
    std::array<double, 10> c{};
    int degree = 0;

    static Polynomial zero() { return {}; }

    static Polynomial from_coeffs(std::initializer_list<double> coeffs) {
        Polynomial p;
        int i = 0;
        for (double v : coeffs) {
            assert(i < 10);
            p.c[i++] = v;
        }
        p.degree = i > 0 ? i - 1 : 0;
        p.trim();
        return p;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (int i = 0; i <= degree; ++i) m = std::max(m, std::abs(c[i]));
        return m;
    }

    // Drop leading coefficients that are negligible relative to the largest
    // one (relative tolerance 1e-12).
    void trim(double rel_tol = 1e-12) {
        double scale = max_abs_coeff();
        double tol = scale * rel_tol;
        while (degree > 0 && std::abs(c[degree]) <= tol) {
            c[degree] = 0.0;
            --degree;
        }
    }

    bool is_zero(double rel_tol = 1e-12) const {
        (void)rel_tol;
        return degree == 0 && c[0] == 0.0;
    }

    double eval(double t) const {
        double acc = c[degree];
        for (int i = degree - 1; i >= 0; --i) acc = acc * t + c[i];
        return acc;
    }

    // Horner for value and first derivative in one pass.
    void eval_with_derivative(double t, double& value, double& derivative) const {
        double v = c[degree];
        double d = 0.0;
        for (int i = degree - 1; i >= 0; --i) {
            d = d * t + v;
            v = v * t + c[i];
        }
        value = v;
        derivative = d;
    }

    Polynomial derivative() const {
        Polynomial d;
        if (degree == 0) return d;
        d.degree = degree - 1;
        for (int i = 1; i <= degree; ++i) d.c[i - 1] = i * c[i];
        return d;
    }

    Polynomial operator*(const Polynomial& o) const {
        assert(degree + o.degree <= 9);
        Polynomial r;
        r.degree = degree + o.degree;
        for (int i = 0; i <= degree; ++i)
            for (int j = 0; j <= o.degree; ++j) r.c[i + j] += c[i] * o.c[j];
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial r;
        r.degree = std::max(degree, o.degree);
        for (int i = 0; i <= r.degree; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r;
        r.degree = std::max(degree, o.degree);
        for (int i = 0; i <= r.degree; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }

    Polynomial operator*(double s) const {
        Polynomial r = *this;
        for (int i = 0; i <= degree; ++i) r.c[i] *= s;
        return r;
    }
};

// Fixed-capacity root container; everything here is allocation-free because
// it runs per (pixel sample, curve).
struct RootList {
    std::array<double, 20> values{};
    int count = 0;

    void push(double v) {
        assert(count < 20);
        values[count++] = v;
    }
    void sort() { std::sort(values.begin(), values.begin() + count); }
    const double* begin() const { return values.data(); }
    const double* end() const { return values.data() + count; }
};

// Real roots of c1 t + c0.
inline void solve_linear(double c1, double c0, RootList& out) {
    if (c1 != 0.0) out.push(-c0 / c1);
}

// Real roots of c2 t^2 + c1 t + c0, numerically stable form.
inline void solve_quadratic(double c2, double c1, double c0, RootList& out) {
    if (c2 == 0.0) {
        solve_linear(c1, c0, out);
        return;
    }
    double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) return;
    double sq = std::sqrt(disc);
    double q = -0.5 * (c1 + (c1 >= 0.0 ? sq : -sq));
    if (q != 0.0) {
        out.push(q / c2);
        out.push(c0 / q);
    } else {
        out.push(0.0);
        out.push(0.0);
    }
}

// Real roots of c3 t^3 + c2 t^2 + c1 t + c0 (trigonometric / Cardano split).
inline void solve_cubic(double c3, double c2, double c1, double c0, RootList& out) {
    if (c3 == 0.0) {
        solve_quadratic(c2, c1, c0, out);
        return;
    }
    double a = c2 / c3;
    double b = c1 / c3;
    double c = c0 / c3;
    double q = (a * a - 3.0 * b) / 9.0;
    double r = (2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / 54.0;
    double r2 = r * r;
    double q3 = q * q * q;
    if (r2 < q3) {
        double theta = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
        double m = -2.0 * std::sqrt(q);
        out.push(m * std::cos(theta / 3.0) - a / 3.0);
        out.push(m * std::cos((theta + 2.0 * kPi) / 3.0) - a / 3.0);
        out.push(m * std::cos((theta - 2.0 * kPi) / 3.0) - a / 3.0);
    } else {
        double big = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(r2 - q3)), r);
        double small = big != 0.0 ? q / big : 0.0;
        out.push(big + small - a / 3.0);
        // One Newton polish; the closed form loses digits when q3 ~ r2.
        double t = out.values[out.count - 1];
        double f = ((c3 * t + c2) * t + c1) * t + c0;
        double df = (3.0 * c3 * t + 2.0 * c2) * t + c1;
        if (df != 0.0) out.values[out.count - 1] = t - f / df;
    }
}

// Real roots of a polynomial of degree <= 3.
inline void solve_low_degree(const Polynomial& p, RootList& out) {
    switch (p.degree) {
        case 0: return;
        case 1: solve_linear(p.c[1], p.c[0], out); return;
        case 2: solve_quadratic(p.c[2], p.c[1], p.c[0], out); return;
        default: solve_cubic(p.c[3], p.c[2], p.c[1], p.c[0], out); return;
    }
}

}  // namespace sketch3d
