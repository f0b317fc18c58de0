#pragma once

#include <Eigen/Dense>

#include "porism/conic.hpp"

namespace porism {

// Flag of the Poncelet correspondence: a point on C together with a line
// through it tangent to D. Stored unit-normalized with a sign convention.
struct PonceletFlag {
    Eigen::Vector3d point;
    Eigen::Vector3d line;
};

struct ClosureReport {
    bool closed = false;
    size_t steps = 0;   // first return when closed, else the closest step
    double gap = 0.0;   // flag distance at `steps`
};

namespace detail {

inline Eigen::Vector3d normalize_sign(Eigen::Vector3d v) {
    v.normalize();
    int i;
    v.cwiseAbs().maxCoeff(&i);
    if (v(i) < 0) v = -v;
    return v;
}

inline double projective_dist(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    return std::min((a - b).norm(), (a + b).norm());
}

inline double quad_form(const Eigen::Matrix3d& m, const Eigen::Vector3d& x) {
    return x.dot(m * x);
}

// Second intersection of `line` with the conic, the first being `point`.
// Parametrize X(s) = point + s * dir with dir spanning the line with point;
// the known root s = 0 is factored out by Vieta.
inline Eigen::Vector3d second_point(const Eigen::Matrix3d& c, const Eigen::Vector3d& line,
                                    const Eigen::Vector3d& point) {
    // l x p is on the line and never projectively equal to p
    const Eigen::Vector3d dir = line.cross(point).normalized();
    const double a = quad_form(c, dir);
    const double b = 2.0 * point.dot(c * dir);
    if (std::abs(a) < 1e-14 * (1.0 + std::abs(b))) return normalize_sign(dir);
    return normalize_sign(point + (-b / a) * dir);
}

// Second tangent line to D through `point`, the first being `line`. Works in
// the dual: tangents are the intersections of the dual conic with the pencil
// of lines through the point.
inline Eigen::Vector3d second_tangent(const Eigen::Matrix3d& dual_d, const Eigen::Vector3d& point,
                                      const Eigen::Vector3d& line) {
    // p x l is another line through the point, never projectively equal to l
    const Eigen::Vector3d m = point.cross(line).normalized();
    const double a = quad_form(dual_d, m);
    const double b = 2.0 * line.dot(dual_d * m);
    if (std::abs(a) < 1e-14 * (1.0 + std::abs(b))) return normalize_sign(m);
    return normalize_sign(line + (-b / a) * m);
}

} // namespace detail

template <Scalar K>
void validate_flag(const Conic<K>& c, const Conic<K>& d, const PonceletFlag& f,
                   double tol = 1e-7) {
    const Eigen::Matrix3d cm = conic_matrix_d(c);
    const Eigen::Matrix3d dd = conic_matrix_d(dual_conic(d));
    const double sc = 1.0 + cm.cwiseAbs().maxCoeff();
    const double sd = 1.0 + dd.cwiseAbs().maxCoeff();
    if (std::abs(detail::quad_form(cm, f.point)) > tol * sc)
        fail("FlagError", "point is not on C");
    if (std::abs(detail::quad_form(dd, f.line)) > tol * sd)
        fail("FlagError", "line is not tangent to D");
    if (std::abs(f.line.dot(f.point)) > tol)
        fail("FlagError", "point is not on the line");
}

// Flag from a point on C: takes one of the two tangents from the point to D,
// chosen deterministically.
template <Scalar K>
PonceletFlag initial_flag(const Conic<K>& c, const Conic<K>& d, const Eigen::Vector3d& point_on_c,
                          int which = 0) {
    const Eigen::Matrix3d dd = conic_matrix_d(dual_conic(d));
    const Eigen::Vector3d p = detail::normalize_sign(point_on_c);
    // pencil of lines through p: l(s) = l0 + s l1 with l0, l1 spanning p-perp
    int i;
    p.cwiseAbs().maxCoeff(&i);
    Eigen::Vector3d e0 = Eigen::Vector3d::Zero(), e1 = Eigen::Vector3d::Zero();
    e0((i + 1) % 3) = 1;
    e1((i + 2) % 3) = 1;
    const Eigen::Vector3d l0 = p.cross(e0).normalized();
    const Eigen::Vector3d l1 = p.cross(e1).normalized();
    const double a = detail::quad_form(dd, l1);
    const double b = 2.0 * l0.dot(dd * l1);
    const double c0 = detail::quad_form(dd, l0);
    Eigen::Vector3d tangent;
    if (std::abs(a) < 1e-13 * (1.0 + std::abs(b) + std::abs(c0))) {
        // l1 itself is tangent; the quadratic degenerates to one finite root
        tangent = (which == 0) ? Eigen::Vector3d(l0 + (-c0 / b) * l1) : l1;
    } else {
        const double disc = b * b - 4 * a * c0;
        if (disc < 0) fail("FlagError", "no real tangent from the point (inside D?)");
        const double sq = std::sqrt(disc);
        const double s = (which == 0) ? (-b + sq) / (2 * a) : (-b - sq) / (2 * a);
        tangent = l0 + s * l1;
    }
    PonceletFlag f{p, detail::normalize_sign(tangent)};
    validate_flag(c, d, f);
    return f;
}

// Half-step involutions: swap the point along the line, or the line around
// the point. Each is an involution; their composition is the Poncelet step.
template <Scalar K>
PonceletFlag involution_point(const Conic<K>& c, const PonceletFlag& f) {
    return {detail::second_point(conic_matrix_d(c), f.line, f.point), f.line};
}

template <Scalar K>
PonceletFlag involution_line(const Conic<K>& d, const PonceletFlag& f) {
    return {f.point, detail::second_tangent(conic_matrix_d(dual_conic(d)), f.point, f.line)};
}

inline double flag_gap(const PonceletFlag& a, const PonceletFlag& b) {
    return std::max(detail::projective_dist(a.point, b.point),
                    detail::projective_dist(a.line, b.line));
}

// Iterate the Poncelet step (advance point along the line, then swap the
// tangent at the new point); report the first return to the start flag.
// Comparing the full flag avoids false closure at half-period.
template <Scalar K>
ClosureReport poncelet_iterate(const Conic<K>& c, const Conic<K>& d, const PonceletFlag& start,
                               size_t max_steps, double eps = 1e-8) {
    validate_flag(c, d, start);
    const Eigen::Matrix3d cm = conic_matrix_d(c);
    const Eigen::Matrix3d dd = conic_matrix_d(dual_conic(d));
    PonceletFlag f = start;
    ClosureReport best{false, 0, 1e300};
    for (size_t k = 1; k <= max_steps; ++k) {
        const Eigen::Vector3d p = detail::second_point(cm, f.line, f.point);
        const Eigen::Vector3d l = detail::second_tangent(dd, p, f.line);
        f = {p, l};
        const double gap = flag_gap(f, start);
        if (gap < eps) return {true, k, gap};
        if (gap < best.gap) best = {false, k, gap};
    }
    return best;
}

} // namespace porism
