#include "nrems/ems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nrems {

int EmsLayout::nearest_element(double x) const {
    if (element_x.empty()) {
        return -1;
    }
    if (x < element_x.front() - 0.5 * pitch || x > element_x.back() + 0.5 * pitch) {
        return -1;
    }
    const auto it = std::lower_bound(element_x.begin(), element_x.end(), x);
    if (it == element_x.begin()) {
        return 0;
    }
    if (it == element_x.end()) {
        return size() - 1;
    }
    const int hi = static_cast<int>(it - element_x.begin());
    return (x - element_x[hi - 1] <= element_x[hi] - x) ? hi - 1 : hi;
}

void EmsLayout::validate() const {
    if (!(pitch > 0.0)) {
        throw std::invalid_argument("element pitch must be positive");
    }
    const int n = size();
    if (n == 0 || static_cast<int>(phases.size()) != n) {
        throw std::invalid_argument("layout element/phase arrays are inconsistent");
    }
    if (elements_per_module <= 0 || modules_per_cluster <= 0 || cluster_count <= 0 ||
        n != cluster_count * modules_per_cluster * elements_per_module) {
        throw std::invalid_argument("element count must equal K * L * N'");
    }
    // Affine-in-n phase within each module: zero second difference mod 2*pi.
    for (int m = 0; m < cluster_count * modules_per_cluster; ++m) {
        const int begin = m * elements_per_module;
        for (int i = begin + 2; i < begin + elements_per_module; ++i) {
            double dd = phases[i] - 2.0 * phases[i - 1] + phases[i - 2];
            dd = std::remainder(dd, 2.0 * kPi);
            if (std::abs(dd) > 1e-9) {
                throw std::invalid_argument("module phase profile is not affine in n");
            }
        }
    }
}

int elements_per_module_for_width(double module_width, double pitch) {
    if (!(module_width > 0.0) || !(pitch > 0.0)) {
        throw std::invalid_argument("module width and pitch must be positive");
    }
    return std::max(1, static_cast<int>(std::lround(module_width / pitch)));
}

std::vector<double> double_focus_phases(Point2 source, Point2 target,
                                        const EmsLayout& layout) {
    if (!(source.y > 0.0) || !(target.y > 0.0)) {
        throw std::invalid_argument("double focusing requires source and target at y > 0");
    }
    const double k = 2.0 * kPi / layout.design_wavelength;
    std::vector<double> out(layout.element_x.size());
    for (size_t i = 0; i < out.size(); ++i) {
        const Point2 el{layout.element_x[i], 0.0};
        out[i] = wrap_two_pi(k * (distance(el, source) + distance(el, target)));
    }
    return out;
}

std::vector<double> module_linear_profile(Point2 module_center, int n_begin,
                                          int n_count, Point2 source,
                                          Point2 anchor, double pitch,
                                          double wavelength) {
    if (module_center.y != 0.0) {
        throw std::invalid_argument("module center must lie on y = 0");
    }
    if (!(anchor.y > 0.0)) {
        throw std::invalid_argument("anchor must lie at y > 0");
    }
    if (distance(module_center, anchor) == 0.0) {
        throw std::invalid_argument("anchor coincides with the module center");
    }
    if (n_count <= 0) {
        throw std::invalid_argument("module must contain at least one element");
    }
    const double u_in = x_projection(module_center, source);
    const double u_out = x_projection(module_center, anchor);
    const double increment = -(2.0 * kPi * pitch / wavelength) * (u_in + u_out);
    const int n_center = n_begin + n_count / 2;
    std::vector<double> out(static_cast<size_t>(n_count));
    for (int k = 0; k < n_count; ++k) {
        out[k] = wrap_two_pi(increment * (n_begin + k - n_center));
    }
    return out;
}

std::vector<Point2> select_anchor_points(const AnchorScheme& scheme) {
    if (scheme.ranges.empty() || scheme.per_range_count <= 0) {
        throw std::invalid_argument("anchor scheme needs ranges and a positive count");
    }
    std::vector<Point2> anchors;
    // Azimuth measured from the +y axis; the arc lives in y > 0.
    constexpr int kSteps = 40000;
    for (const double range : scheme.ranges) {
        if (!(range > 0.0)) {
            throw std::invalid_argument("anchor ranges must be positive");
        }
        std::vector<double> inside;  // azimuth samples whose points fall in the area
        inside.reserve(kSteps);
        for (int k = 0; k <= kSteps; ++k) {
            const double az = -kPi / 2.0 + kPi * k / kSteps;
            const Point2 p{range * std::sin(az), range * std::cos(az)};
            if (p.y > 0.0 && scheme.area.contains(p)) {
                inside.push_back(az);
            }
        }
        if (inside.empty()) {
            throw std::invalid_argument("iso-range arc does not intersect the area");
        }
        // Uniform in angle over the clipped arc: place at quantiles of the
        // sampled in-area measure.
        const size_t m = inside.size();
        for (int k = 0; k < scheme.per_range_count; ++k) {
            const double q = (k + 0.5) / scheme.per_range_count;
            double az;
            if (scheme.per_range_count == 1) {
                az = 0.5 * (inside.front() + inside.back());
            } else {
                const double pos = q * (m - 1);
                const size_t lo = static_cast<size_t>(pos);
                const double frac = pos - lo;
                az = (lo + 1 < m) ? (1.0 - frac) * inside[lo] + frac * inside[lo + 1]
                                  : inside[lo];
            }
            anchors.push_back({range * std::sin(az), range * std::cos(az)});
        }
    }
    return anchors;
}

EmsLayout build_modular_ems(const ModularEmsDesign& design) {
    if (design.cluster_count <= 0 || design.modules_per_cluster <= 0 ||
        design.elements_per_module <= 0) {
        throw std::invalid_argument("cluster/module/element counts must be positive");
    }
    if (static_cast<int>(design.anchors.size()) != design.cluster_count) {
        throw std::invalid_argument("anchor list must have one entry per cluster");
    }
    if (!(design.pitch > 0.0) || !(design.wavelength > 0.0)) {
        throw std::invalid_argument("pitch and wavelength must be positive");
    }
    if (!(design.pointing > 0.0) || design.pointing > kPi / 2.0) {
        throw std::invalid_argument("pointing angle must lie in (0, pi/2]");
    }
    if (!(design.reference_source.y > 0.0)) {
        throw std::invalid_argument("reference source must lie at y > 0");
    }

    EmsLayout layout;
    layout.pitch = design.pitch;
    layout.design_wavelength = design.wavelength;
    layout.vertical_extent = design.vertical_extent;
    layout.elements_per_module = design.elements_per_module;
    layout.modules_per_cluster = design.modules_per_cluster;
    layout.cluster_count = design.cluster_count;

    const int n_total = design.cluster_count * design.modules_per_cluster *
                        design.elements_per_module;
    layout.element_x.resize(n_total);
    layout.phases.assign(n_total, 0.0);
    const int n_min = -(n_total / 2);
    for (int i = 0; i < n_total; ++i) {
        layout.element_x[i] = (n_min + i) * design.pitch;
    }

    const double height = design.reference_source.y;
    const double setback = height * std::cos(design.pointing) / std::sin(design.pointing);
    const int n_modules = design.cluster_count * design.modules_per_cluster;
    layout.module_centers.reserve(n_modules);
    for (int m = 0; m < n_modules; ++m) {
        const int cluster = m / design.modules_per_cluster;
        const int i_begin = m * design.elements_per_module;
        const int i_center = layout.module_center_element(m);
        const Point2 center = layout.element(i_center);
        layout.module_centers.push_back(center);
        // Design-time source: the trajectory point whose boresight center
        // hits this module's center.
        const Point2 source{center.x - setback, height};
        const auto profile = module_linear_profile(
            center, n_min + i_begin, design.elements_per_module, source,
            design.anchors[cluster], design.pitch, design.wavelength);
        std::copy(profile.begin(), profile.end(), layout.phases.begin() + i_begin);
    }
    layout.anchors = design.anchors;
    layout.validate();
    return layout;
}

double effective_aperture(double speed, double duration, double forward_range,
                          double beamwidth, double pointing) {
    if (!(pointing > 0.0) || pointing > kPi / 2.0) {
        throw std::invalid_argument("pointing angle must lie in (0, pi/2]");
    }
    return speed * duration + forward_range * beamwidth / std::sin(pointing);
}

double aperture_duration_bound(int modules_per_cluster, int elements_per_module,
                               int n_illuminated, double pitch, double speed) {
    if (!(speed > 0.0)) {
        throw std::invalid_argument("speed must be positive");
    }
    const int span = modules_per_cluster * elements_per_module - n_illuminated;
    if (span <= 0) {
        return 0.0;
    }
    return span * pitch / speed;
}

std::vector<double> quantize_phases(const std::vector<double>& phases, int bits) {
    if (bits < 1 || bits > 16) {
        throw std::invalid_argument("phase quantizer supports 1..16 bits");
    }
    const double step = 2.0 * kPi / static_cast<double>(1 << bits);
    std::vector<double> out(phases.size());
    for (size_t i = 0; i < phases.size(); ++i) {
        out[i] = wrap_two_pi(std::round(phases[i] / step) * step);
    }
    return out;
}

}  // namespace nrems
