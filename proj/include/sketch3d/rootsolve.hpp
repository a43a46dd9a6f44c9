#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "sketch3d/curves.hpp"
#include "sketch3d/polynomial.hpp"

namespace sketch3d {

struct SingularIsolatorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ClosestPointResult {
    double t_star = 0.0;
    double distance = 0.0;
};

struct IntervalList {
    std::array<double, 12> split{};  // ascending, includes 0 and 1
    int count = 0;                   // number of split points, intervals = count-1
};

namespace detail {

// Power-basis coefficients of sum_i B_{i,n}(t) v_i for n <= 3.
inline Polynomial bernstein_to_power(const double* v, int n) {
    Polynomial p;
    p.degree = n;
    switch (n) {
        case 1:
            p.c[0] = v[0];
            p.c[1] = v[1] - v[0];
            break;
        case 2:
            p.c[0] = v[0];
            p.c[1] = 2.0 * (v[1] - v[0]);
            p.c[2] = v[0] - 2.0 * v[1] + v[2];
            break;
        default:
            p.c[0] = v[0];
            p.c[1] = 3.0 * (v[1] - v[0]);
            p.c[2] = 3.0 * (v[0] - 2.0 * v[1] + v[2]);
            p.c[3] = -v[0] + 3.0 * v[1] - 3.0 * v[2] + v[3];
            break;
    }
    return p;
}

// Gaussian elimination with partial pivoting for the 5x5 isolator system.
// Returns false when the system is numerically singular.
inline bool solve5x5(double a[5][6]) {
    double norm = 0.0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) norm = std::max(norm, std::abs(a[i][j]));
    if (norm == 0.0) return false;
    for (int col = 0; col < 5; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 5; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) <= norm * 1e-13) return false;
        if (pivot != col)
            for (int j = col; j < 6; ++j) std::swap(a[pivot][j], a[col][j]);
        for (int r = col + 1; r < 5; ++r) {
            double f = a[r][col] / a[col][col];
            for (int j = col; j < 6; ++j) a[r][j] -= f * a[col][j];
        }
    }
    for (int col = 4; col >= 0; --col) {
        double v = a[col][5];
        for (int j = col + 1; j < 5; ++j) v -= a[col][j] * a[j][5];
        a[col][5] = v / a[col][col];
    }
    return true;
}

}  // namespace detail

// Numerator polynomial of (p(t)-q) . p'(t) for a 2D rational Bezier; the
// strictly positive denominator is dropped. Degree <= 3n-2. The curve is
// translated so q sits at the origin before any products are formed, which
// keeps the coefficients well conditioned.
inline Polynomial stationarity_polynomial(const RationalBezier2& curve, const Vec2& q) {
    int n = curve.degree;
    double mx[4], my[4], w[4];
    for (int i = 0; i <= n; ++i) {
        w[i] = curve.weights[i];
        mx[i] = (curve.points[i].x - q.x) * w[i];
        my[i] = (curve.points[i].y - q.y) * w[i];
    }
    Polynomial Mx = detail::bernstein_to_power(mx, n);
    Polynomial My = detail::bernstein_to_power(my, n);
    Polynomial D = detail::bernstein_to_power(w, n);
    Polynomial Dd = D.derivative();

    // E = M' D - M D'; the top coefficient cancels exactly, so the true
    // degree is 2n-2.
    Polynomial Ex = Mx.derivative() * D - Mx * Dd;
    Polynomial Ey = My.derivative() * D - My * Dd;
    if (n >= 1) {
        Ex.c[2 * n - 1] = 0.0;
        Ey.c[2 * n - 1] = 0.0;
        Ex.degree = std::max(0, 2 * n - 2);
        Ey.degree = std::max(0, 2 * n - 2);
    }

    Polynomial rho = Mx * Ex + My * Ey;
    rho.trim();
    return rho;
}

// Split points of [0,1] whose sub-intervals isolate the real roots of a
// monic quartic or septic, from the auxiliary polynomials a(t), b(t) with
// a = c*rho - b*rho'. Throws SingularIsolatorError when the septic's 5x5
// coefficient system has no usable pivot.
inline IntervalList isolator_intervals(const Polynomial& rho_in) {
    Polynomial rho = rho_in;
    rho.trim();
    if (rho.degree != 4 && rho.degree != 7)
        throw std::invalid_argument("isolator_intervals expects degree 4 or 7");
    double lead = rho.c[rho.degree];
    for (int i = 0; i <= rho.degree; ++i) rho.c[i] /= lead;

    RootList cuts;
    if (rho.degree == 4) {
        // rho = t^4 + B t^3 + C t^2 + D t + E; long division by rho' gives
        // quotient b(t) = t/4 + B/16 and quadratic remainder a(t).
        double B = rho.c[3], C = rho.c[2], D = rho.c[1], E = rho.c[0];
        Polynomial a = Polynomial::from_coeffs(
            {E - D * B / 16.0, 0.75 * D - C * B / 8.0, 0.5 * C - 3.0 * B * B / 16.0});
        solve_low_degree(a, cuts);
        cuts.push(-B / 4.0);
    } else {
        // Monic septic: find cubic b and quadratic c = 7t^2 + At + B such
        // that a = c*rho - b*rho' is cubic, i.e. the t^8..t^4 coefficients
        // of a vanish. Unknowns x = (A, B, C, D, E) with
        // b = t^3 + C t^2 + D t + E.
        const auto r_at = [&](int j) { return (j >= 0 && j <= 7) ? rho.c[j] : 0.0; };
        const auto rp_at = [&](int j) { return (j >= 0 && j <= 6) ? (j + 1) * rho.c[j + 1] : 0.0; };
        double sys[5][6];
        for (int row = 0; row < 5; ++row) {
            int k = 8 - row;
            sys[row][0] = r_at(k - 1);
            sys[row][1] = r_at(k);
            sys[row][2] = -rp_at(k - 2);
            sys[row][3] = -rp_at(k - 1);
            sys[row][4] = -rp_at(k);
            sys[row][5] = -7.0 * r_at(k - 2) + rp_at(k - 3);
        }
        if (!detail::solve5x5(sys))
            throw SingularIsolatorError("isolator coefficient system is singular");
        double A = sys[0][5], B = sys[1][5], C = sys[2][5], D = sys[3][5], E = sys[4][5];

        Polynomial b = Polynomial::from_coeffs({E, D, C, 1.0});
        Polynomial c = Polynomial::from_coeffs({B, A, 7.0});
        Polynomial a_full = c * rho - b * rho.derivative();
        Polynomial a;
        a.degree = 3;
        for (int i = 0; i <= 3; ++i) a.c[i] = a_full.c[i];
        a.trim();

        solve_low_degree(a, cuts);
        solve_low_degree(b, cuts);
    }

    IntervalList out;
    out.split[out.count++] = 0.0;
    cuts.sort();
    for (int i = 0; i < cuts.count; ++i) {
        double t = cuts.values[i];
        if (t > 0.0 && t < 1.0 && (out.count == 0 || t > out.split[out.count - 1] + 1e-14))
            out.split[out.count++] = t;
    }
    out.split[out.count++] = 1.0;
    return out;
}

// Hybrid bisection / Newton-Raphson refinement of a bracketed root.
// Returns nullopt when rho does not change sign on the interval.
inline std::optional<double> refine_root(const Polynomial& rho, double lo, double hi,
                                         double eps_value = 0.0) {
    double f_lo = rho.eval(lo);
    double f_hi = rho.eval(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0)) return std::nullopt;

    double a = lo, b = hi, fa = f_lo;
    double t = 0.5 * (a + b);
    for (int iter = 0; iter < 64; ++iter) {
        double f, df;
        rho.eval_with_derivative(t, f, df);
        if (std::abs(f) <= eps_value || b - a < 1e-10) return t;
        if ((f > 0.0) == (fa > 0.0)) {
            a = t;
            fa = f;
        } else {
            b = t;
        }
        bool stepped = false;
        if (df != 0.0) {
            double t_newton = t - f / df;
            if (t_newton > a && t_newton < b && std::abs(rho.eval(t_newton)) < std::abs(f)) {
                t = t_newton;
                stepped = true;
            }
        }
        if (!stepped) t = 0.5 * (a + b);
    }
    return t;
}

namespace detail {

// Multiple-root fallback: rho touches zero without a sign change. Find the
// stationary point of rho inside (lo,hi) via a sign change of rho' and
// accept it if |rho| is tiny there.
inline void probe_touching_root(const Polynomial& rho, const Polynomial& drho, double lo,
                                double hi, double eps_touch, RootList& out) {
    auto t_c = refine_root(drho, lo, hi, 0.0);
    if (!t_c) return;
    if (std::abs(rho.eval(*t_c)) <= eps_touch && *t_c > 0.0 && *t_c < 1.0) out.push(*t_c);
}

inline void dedupe_sorted(RootList& roots, double tol = 1e-9) {
    if (roots.count == 0) return;
    roots.sort();
    int w = 1;
    for (int i = 1; i < roots.count; ++i)
        if (roots.values[i] - roots.values[w - 1] > tol) roots.values[w++] = roots.values[i];
    roots.count = w;
}

}  // namespace detail

// All real roots of rho inside (0,1). Degrees <= 3 use closed forms;
// quartics and septics go through isolator polynomials; anything else (and
// a singular isolator system) falls back to a uniform 64-interval
// sign-change scan.
inline RootList find_roots_in_unit(const Polynomial& rho_in) {
    RootList out;
    Polynomial rho = rho_in;
    rho.trim();
    if (rho.is_zero()) return out;

    double scale = 0.0;
    for (int i = 0; i <= rho.degree; ++i) scale += std::abs(rho.c[i]);
    double eps_value = 1e-12 * scale;
    double eps_touch = 1e-10 * scale;

    if (rho.degree <= 3) {
        RootList all;
        solve_low_degree(rho, all);
        for (int i = 0; i < all.count; ++i) {
            double t = all.values[i];
            if (t > 0.0 && t < 1.0) {
                // polish; closed forms can be a few ulps off
                double f, df;
                rho.eval_with_derivative(t, f, df);
                if (df != 0.0) {
                    double t2 = t - f / df;
                    if (t2 > 0.0 && t2 < 1.0 && std::abs(rho.eval(t2)) <= std::abs(f)) t = t2;
                }
                out.push(t);
            }
        }
        detail::dedupe_sorted(out);
        return out;
    }

    IntervalList intervals;
    bool have_isolators = false;
    if (rho.degree == 4 || rho.degree == 7) {
        try {
            intervals = isolator_intervals(rho);
            have_isolators = true;
        } catch (const SingularIsolatorError&) {
        }
    }

    Polynomial drho = rho.derivative();
    auto process_interval = [&](double lo, double hi) {
        if (out.count >= 16) return;
        if (auto r = refine_root(rho, lo, hi, eps_value)) {
            if (*r > 0.0 && *r < 1.0) out.push(*r);
        } else {
            detail::probe_touching_root(rho, drho, lo, hi, eps_touch, out);
        }
    };

    if (have_isolators) {
        for (int i = 0; i + 1 < intervals.count; ++i)
            process_interval(intervals.split[i], intervals.split[i + 1]);
        // isolator split points can themselves be roots (e.g. exact double
        // roots shared with rho')
        for (int i = 1; i + 1 < intervals.count && out.count < 16; ++i)
            if (std::abs(rho.eval(intervals.split[i])) <= eps_value) out.push(intervals.split[i]);
    } else {
        constexpr int kSubdiv = 64;
        for (int i = 0; i < kSubdiv; ++i)
            process_interval(static_cast<double>(i) / kSubdiv,
                             static_cast<double>(i + 1) / kSubdiv);
    }

    detail::dedupe_sorted(out);
    return out;
}

// Global closest point between q and the curve over t in [0,1]: interior
// distance-stationarity roots plus both endpoints.
inline ClosestPointResult closest_point(const RationalBezier2& curve, const Vec2& q) {
    Polynomial rho = stationarity_polynomial(curve, q);
    RootList candidates = find_roots_in_unit(rho);
    candidates.push(0.0);
    candidates.push(1.0);

    ClosestPointResult best;
    double best_d2 = 1e300;
    for (int i = 0; i < candidates.count; ++i) {
        double t = candidates.values[i];
        double d2 = (eval2(curve, t) - q).norm2();
        if (d2 < best_d2) {
            best_d2 = d2;
            best.t_star = t;
        }
    }
    best.distance = std::sqrt(best_d2);
    return best;
}

}  // namespace sketch3d
