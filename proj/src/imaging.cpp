#include "nrems/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nrems/parallel.hpp"

namespace nrems {

namespace {

/// Per-snapshot geometry shared by every pixel: the snapped illuminated
/// center and the matched-filter phasor that removes the skin's own
/// modulation. The double-bounce echo is proportional to the square of the
/// window sum over e^{j phi_n} times the steering term; with the designed
/// per-module ramps taken out about the window center, that sum collapses to
/// the in-window blend of module pistons, a target-independent phase that
/// must be conjugated — otherwise an anomalous (off-specular) profile
/// shifts the focused image toward the specular position.
struct SnapshotCenters {
    std::vector<double> x0;                         // element x per snapshot
    std::vector<std::complex<double>> skin_phasor;  // exp(-j*2*arg(model sum))
    std::vector<bool> valid;
};

SnapshotCenters snapshot_centers(const RxDataMatrix& data, const RadarConfig& radar,
                                 const EmsLayout& layout) {
    // Designed per-element phase increment of each module (affine profiles).
    const int n_modules = layout.cluster_count * layout.modules_per_cluster;
    std::vector<double> increment(n_modules, 0.0);
    for (int m = 0; m < n_modules; ++m) {
        if (layout.elements_per_module < 2) {
            break;
        }
        const int begin = m * layout.elements_per_module;
        increment[m] =
            std::remainder(layout.phases[begin + 1] - layout.phases[begin], 2.0 * kPi);
    }

    SnapshotCenters c;
    c.x0.resize(data.n_slow, 0.0);
    c.skin_phasor.resize(data.n_slow, {1.0, 0.0});
    c.valid.resize(data.n_slow, false);
    for (int j = 0; j < data.n_slow; ++j) {
        const Point2 s = radar.trajectory.position(data.slow_time(j));
        const IndexWindow w =
            illumination_window(layout, s, radar.pointing, radar.beamwidth);
        if (w.empty()) {
            continue;
        }
        c.x0[j] = layout.element_x[w.center];
        std::complex<double> model{0.0, 0.0};
        for (int i = w.begin; i < w.end; ++i) {
            const double ramp = increment[layout.module_of(i)] * (i - w.center);
            model += std::polar(1.0, layout.phases[i] - ramp);
        }
        if (std::abs(model) > 0.0) {
            c.skin_phasor[j] = std::polar(1.0, -2.0 * std::arg(model));
        }
        c.valid[j] = true;
    }
    return c;
}

}  // namespace

void GridSpec::validate() const {
    if (!(dx > 0.0) || !(dy > 0.0) || nx <= 0 || ny <= 0) {
        throw std::invalid_argument("grid pitch and size must be positive");
    }
    if (!(y0 > 0.0)) {
        throw std::invalid_argument("grid must lie in the y > 0 half-plane");
    }
}

ImageGrid backproject(const RxDataMatrix& data, const RadarConfig& radar,
                      const EmsLayout& layout, const GridSpec& grid, int threads) {
    grid.validate();
    radar.validate();
    const SnapshotCenters centers = snapshot_centers(data, radar, layout);
    const double d_in = radar.trajectory.start.y / std::sin(radar.pointing);
    const double wavelength = radar.wavelength();
    const double k4pi = 4.0 * kPi / wavelength;

    ImageGrid image;
    image.spec = grid;
    image.values.assign(static_cast<size_t>(grid.nx) * grid.ny, {0.0, 0.0});

    parallel_for(grid.nx, threads, [&](int ix) {
        for (int iy = 0; iy < grid.ny; ++iy) {
            const Point2 r = grid.pixel(ix, iy);
            std::complex<double> acc{0.0, 0.0};
            for (int j = 0; j < data.n_slow; ++j) {
                if (!centers.valid[j]) {
                    continue;
                }
                const double d_out = std::hypot(r.x - centers.x0[j], r.y);
                const double delay = 2.0 * (d_in + d_out) / kSpeedOfLight;
                const double pos = (delay - data.t0) / data.dt;
                const int k = static_cast<int>(std::floor(pos));
                if (k < 0 || k + 1 >= data.n_fast) {
                    continue;
                }
                const double frac = pos - k;
                const std::complex<double> sample =
                    (1.0 - frac) * data.at(k, j) + frac * data.at(k + 1, j);
                acc += sample * centers.skin_phasor[j] *
                       std::polar(1.0, k4pi * (d_in + d_out));
            }
            image.at(ix, iy) = acc;
        }
    });
    return image;
}

PointFocus backproject_point(const RxDataMatrix& data, const RadarConfig& radar,
                             const EmsLayout& layout, Point2 position) {
    const SnapshotCenters centers = snapshot_centers(data, radar, layout);
    const double d_in = radar.trajectory.start.y / std::sin(radar.pointing);
    const double k4pi = 4.0 * kPi / radar.wavelength();

    PointFocus out;
    for (int j = 0; j < data.n_slow; ++j) {
        if (!centers.valid[j]) {
            continue;
        }
        const double d_out = std::hypot(position.x - centers.x0[j], position.y);
        const double delay = 2.0 * (d_in + d_out) / kSpeedOfLight;
        const double pos = (delay - data.t0) / data.dt;
        const int k = static_cast<int>(std::floor(pos));
        if (k < 0 || k + 1 >= data.n_fast) {
            continue;
        }
        const double frac = pos - k;
        out.value += ((1.0 - frac) * data.at(k, j) + frac * data.at(k + 1, j)) *
                     centers.skin_phasor[j] *
                     std::polar(1.0, k4pi * (d_in + d_out));
        out.noise_weight += (1.0 - frac) * (1.0 - frac) + frac * frac;
    }
    return out;
}

std::vector<double> to_db_normalized(const ImageGrid& image) {
    double peak = 0.0;
    for (const auto& v : image.values) {
        peak = std::max(peak, std::abs(v));
    }
    if (peak == 0.0) {
        throw std::invalid_argument("cannot normalize an all-zero image");
    }
    std::vector<double> db(image.values.size());
    for (size_t i = 0; i < db.size(); ++i) {
        const double mag = std::abs(image.values[i]);
        db[i] = mag > 0.0 ? std::max(-120.0, 20.0 * std::log10(mag / peak)) : -120.0;
    }
    return db;
}

double default_grid_pitch(double bandwidth, double wavelength, double max_range,
                          double cluster_aperture) {
    const double range_res = kSpeedOfLight / (2.0 * bandwidth);
    const double cross_res = wavelength * max_range / (2.0 * cluster_aperture);
    return std::min(range_res, cross_res) / 4.0;
}

}  // namespace nrems
