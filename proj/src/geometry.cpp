#include "nrems/geometry.hpp"

#include <stdexcept>

namespace nrems {

void SourceTrajectory::validate() const {
    if (!(start.y > 0.0)) {
        throw std::invalid_argument("trajectory start must lie at y > 0");
    }
    if (!(speed > 0.0)) {
        throw std::invalid_argument("trajectory speed must be positive");
    }
    if (!(duration > 0.0)) {
        throw std::invalid_argument("trajectory duration must be positive");
    }
    if (!(snapshot_interval > 0.0)) {
        throw std::invalid_argument("trajectory snapshot interval must be positive");
    }
}

Point2 specular_point(Point2 source, Point2 target) {
    if (!(source.y > 0.0) || !(target.y > 0.0)) {
        throw std::invalid_argument("specular_point requires both points at y > 0");
    }
    // Line from the mirror image (s_x, -s_y) to the target crosses y = 0 at
    // the fraction s_y / (s_y + r_y) of the way.
    const double t = source.y / (source.y + target.y);
    return {source.x + t * (target.x - source.x), 0.0};
}

BoresightHit boresight_center(Point2 source, double pointing) {
    if (!(pointing > 0.0) || pointing > kPi / 2.0) {
        throw std::invalid_argument("pointing angle must lie in (0, pi/2]");
    }
    if (!(source.y > 0.0)) {
        throw std::invalid_argument("boresight_center requires a source at y > 0");
    }
    const double range = source.y / std::sin(pointing);
    return {{source.x + range * std::cos(pointing), 0.0}, range};
}

double reflection_angle(Point2 plane_point, Point2 target) {
    if (plane_point.y != 0.0) {
        throw std::invalid_argument("reflection_angle requires a point on y = 0");
    }
    const double d = distance(plane_point, target);
    if (!(target.y > 0.0) || d == 0.0) {
        throw std::invalid_argument("reflection_angle requires a target off the plane");
    }
    return std::acos(target.y / d);
}

double x_projection(Point2 from, Point2 to) {
    const double d = distance(from, to);
    if (d == 0.0) {
        throw std::invalid_argument("x_projection requires distinct points");
    }
    return (to.x - from.x) / d;
}

double wrap_two_pi(double angle) {
    double a = std::fmod(angle, 2.0 * kPi);
    if (a < 0.0) {
        a += 2.0 * kPi;
    }
    return a;
}

}  // namespace nrems
