#pragma once

#include <vector>

#include "nrems/geometry.hpp"

namespace nrems {

/// Element layout and fixed phase profile of the skin.
///
/// Elements sit at x = n*d on y = 0 with signed index n in [-N/2, N/2);
/// storage order is ascending n. Elements group into modules of
/// elements_per_module (each carrying an affine-in-n phase profile) and
/// modules into clusters that share an anchor point. Immutable once built;
/// safe to share across threads.
struct EmsLayout {
    double pitch = 0.0;                  // d, m
    double design_wavelength = 0.0;      // lambda0 the phases target, m
    double vertical_extent = 0.0;        // module height along z, bookkeeping only
    int elements_per_module = 0;         // N'
    int modules_per_cluster = 0;         // L
    int cluster_count = 0;               // K
    std::vector<double> element_x;       // size N
    std::vector<double> phases;          // size N, each in [0, 2*pi)
    std::vector<Point2> module_centers;  // size K*L, on y = 0
    std::vector<Point2> anchors;         // size K

    int size() const { return static_cast<int>(element_x.size()); }
    int index_min() const { return -(size() / 2); }
    int storage_index(int n) const { return n - index_min(); }
    int signed_index(int i) const { return i + index_min(); }
    Point2 element(int i) const { return {element_x[i], 0.0}; }
    int module_of(int i) const { return i / elements_per_module; }
    int cluster_of(int i) const { return module_of(i) / modules_per_cluster; }
    int module_center_element(int module) const {
        return module * elements_per_module + elements_per_module / 2;
    }
    /// Nearest element to a given x on the plane, or -1 when x falls outside
    /// the skin extent (half a pitch beyond the edge elements).
    int nearest_element(double x) const;

    void validate() const;
};

/// Number of elements spanning a physical module width, at least 1.
int elements_per_module_for_width(double module_width, double pitch);

/// Full conjugate-focusing profile for a single source/target pair:
/// phi_n = (2*pi/lambda0) * (|x_n - s| + |r - x_n|), wrapped to [0, 2*pi).
std::vector<double> double_focus_phases(Point2 source, Point2 target,
                                        const EmsLayout& layout);

/// Linear phase gradient steering the reflection of a wave arriving from
/// `source` toward `anchor`, evaluated for elements with signed indices
/// [n_begin, n_begin + n_count). The profile is zero at the module's center
/// element n_begin + n_count/2 and affine in n; the per-element increment is
/// -(2*pi*d/lambda0) * (u_in_x + u_out_x) with both unit vectors pointing
/// away from the module center (toward the source and toward the anchor),
/// which vanishes in the specular case.
std::vector<double> module_linear_profile(Point2 module_center, int n_begin,
                                          int n_count, Point2 source,
                                          Point2 anchor, double pitch,
                                          double wavelength);

struct Rect {
    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    bool contains(Point2 p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
};

/// Anchor placement rule: per iso-range arc, anchors uniformly spaced in
/// angle over the part of the arc inside the area.
struct AnchorScheme {
    std::vector<double> ranges;  // m, distances from the skin center
    int per_range_count = 0;
    Rect area;                   // NLOS region
};

std::vector<Point2> select_anchor_points(const AnchorScheme& scheme);

/// Inputs for the modular build. Each module's gradient is designed for the
/// trajectory point whose boresight center hits that module's center; the
/// reference source supplies the trajectory height.
struct ModularEmsDesign {
    int cluster_count = 0;        // K
    int modules_per_cluster = 0;  // L
    int elements_per_module = 0;  // N'
    double pitch = 0.0;           // d, m
    double wavelength = 0.0;      // lambda0, m
    double pointing = 0.0;        // psi, rad, in (0, pi/2]
    Point2 reference_source;      // any point on the design trajectory line
    std::vector<Point2> anchors;  // one per cluster
    double vertical_extent = 0.5; // m
};

EmsLayout build_modular_ems(const ModularEmsDesign& design);

/// A' = v*T + D_i * beamwidth / sin(pointing).
double effective_aperture(double speed, double duration, double forward_range,
                          double beamwidth, double pointing);

/// Slow-time duration needed to sweep one cluster:
/// (L*N' - n_illuminated) * d / v, clamped at zero.
double aperture_duration_bound(int modules_per_cluster, int elements_per_module,
                               int n_illuminated, double pitch, double speed);

/// Uniform phase quantizer to 2^bits levels over [0, 2*pi).
std::vector<double> quantize_phases(const std::vector<double>& phases, int bits);

}  // namespace nrems
