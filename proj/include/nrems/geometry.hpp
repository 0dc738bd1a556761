#pragma once

#include <cmath>

namespace nrems {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

/// 2D position in the global frame. The skin lies on y = 0 centered at the
/// origin; radar and targets occupy the y > 0 half-plane.
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

/// Uniform motion along +x at constant height, sampled every
/// snapshot_interval seconds of slow time.
struct SourceTrajectory {
    Point2 start;                    // position at tau = 0, start.y > 0
    double speed = 0.0;              // m/s, along +x
    double duration = 0.0;           // s
    double snapshot_interval = 0.0;  // s

    Point2 position(double tau) const { return {start.x + speed * tau, start.y}; }
    int snapshot_count() const {
        return static_cast<int>(std::floor(duration / snapshot_interval + 1e-9)) + 1;
    }
    void validate() const;
};

/// Mirror-law reflection point on y = 0 for a source/target pair, both at
/// y > 0. Constructed by intersecting the line from the mirrored source
/// (s_x, -s_y) to the target with the plane.
Point2 specular_point(Point2 source, Point2 target);

struct BoresightHit {
    Point2 point;      // intersection of the boresight ray with y = 0
    double range = 0;  // distance from the source to that point (D_i)
};

/// Intersection of the radar boresight with the skin plane. `pointing` is
/// the depression angle of the boresight measured from the +x axis, in
/// (0, pi/2]; D_i = s_y / sin(pointing).
BoresightHit boresight_center(Point2 source, double pointing);

/// Angle between the plane normal and the direction plane_point -> target,
/// in [0, pi/2). plane_point must lie on y = 0.
double reflection_angle(Point2 plane_point, Point2 target);

/// x component of the unit vector pointing from `from` to `to`.
double x_projection(Point2 from, Point2 to);

/// Wraps an angle to [0, 2*pi).
double wrap_two_pi(double angle);

}  // namespace nrems
