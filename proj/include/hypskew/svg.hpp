#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hypskew/chain.hpp"
#include "hypskew/point.hpp"
#include "hypskew/triangle.hpp"

namespace hypskew {

// Circular-arc description of the geodesic through z1, z2: the circle through
// both points orthogonal to the unit circle (center c with |c|^2 = R^2 + 1),
// or a straight chord when the geodesic is a diameter. Coordinates are disk
// coordinates; sweep is the SVG sweep flag after the y-axis flip to screen
// space.
struct GeodesicArc {
    bool chord = false;
    double cx = 0.0, cy = 0.0, radius = 0.0;
    int sweep = 0;
};

inline GeodesicArc geodesic_arc(Cx z1, Cx z2) {
    double cross = z1.real() * z2.imag() - z1.imag() * z2.real();
    if (std::abs(cross) < 1e-9) return {true, 0.0, 0.0, 0.0, 0};
    // 2 <c, z_i> = |z_i|^2 + 1 for both endpoints
    double b1 = std::norm(z1) + 1.0, b2 = std::norm(z2) + 1.0;
    double det = 4.0 * cross;
    double cx = (2.0 * z2.imag() * b1 - 2.0 * z1.imag() * b2) / det;
    double cy = (2.0 * z1.real() * b2 - 2.0 * z2.real() * b1) / det;
    double R = std::sqrt(cx * cx + cy * cy - 1.0);
    // The geodesic is always the minor arc; pick the sweep that keeps the
    // screen-space arc on our center's side (screen y points down).
    double c2 = (z1.real() - cx) * (z2.imag() - cy) - (z1.imag() - cy) * (z2.real() - cx);
    return {false, cx, cy, R, c2 < 0.0 ? 1 : 0};
}

// Deterministic SVG emitter: unit disk in a 1000x1000 viewBox, geodesic sides
// as arcs, fixed 6-decimal formatting, elements in insertion order.
class SvgScene {
public:
    void add_geodesic(DiskPoint p, DiskPoint q, const std::string& stroke,
                      double width = 2.0) {
        body_ += "  <path d=\"" + geodesic_path(p.value(), q.value()) + "\" fill=\"none\" stroke=\"" +
                 stroke + "\" stroke-width=\"" + num(width) + "\"/>\n";
    }

    void add_triangle(const Triangle& t, const std::string& stroke, double width = 2.0) {
        add_geodesic(t.v1, t.v2, stroke, width);
        add_geodesic(t.v2, t.v3, stroke, width);
        add_geodesic(t.v3, t.v1, stroke, width);
    }

    void add_eq_triangle(const EqTriangle& t, const std::string& stroke, double width = 2.0) {
        add_triangle(t.as_triangle(), stroke, width);
    }

    void add_point(DiskPoint p, const std::string& fill, double px_radius = 5.0) {
        body_ += "  <circle cx=\"" + num(sx(p.x())) + "\" cy=\"" + num(sy(p.y())) + "\" r=\"" +
                 num(px_radius) + "\" fill=\"" + fill + "\"/>\n";
    }

    // Chain members colored by index from blue to red, target marked last.
    void add_chain(const TriangleChain& c) {
        size_t n = c.triangles.size();
        for (size_t i = 0; i < n; ++i)
            add_eq_triangle(c.triangles[i], ramp(n < 2 ? 0.0 : static_cast<double>(i) / (n - 1)));
        add_point(c.target, "#000000");
    }

    std::string render() const {
        std::string out =
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n"
            "  <circle cx=\"500.000000\" cy=\"500.000000\" r=\"500.000000\" fill=\"none\" "
            "stroke=\"#222222\" stroke-width=\"1.5\"/>\n";
        out += body_;
        out += "</svg>\n";
        return out;
    }

private:
    static double sx(double x) { return 500.0 * (1.0 + x); }
    static double sy(double y) { return 500.0 * (1.0 - y); }

    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return buf;
    }

    static std::string ramp(double s) {
        auto channel = [s](double a, double b) {
            return static_cast<int>(std::lround(a + (b - a) * s));
        };
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", channel(31, 214), channel(119, 39),
                      channel(180, 40));
        return buf;
    }

    static std::string geodesic_path(Cx z1, Cx z2) {
        GeodesicArc arc = geodesic_arc(z1, z2);
        std::string d = "M " + num(sx(z1.real())) + " " + num(sy(z1.imag()));
        if (arc.chord) {
            d += " L " + num(sx(z2.real())) + " " + num(sy(z2.imag()));
        } else {
            double R = 500.0 * arc.radius;
            d += " A " + num(R) + " " + num(R) + " 0 0 " + std::to_string(arc.sweep) + " " +
                 num(sx(z2.real())) + " " + num(sy(z2.imag()));
        }
        return d;
    }

    std::string body_;
};

}  // namespace hypskew
