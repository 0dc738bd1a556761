#pragma once

#include <complex>
#include <vector>

#include "nrems/ems.hpp"
#include "nrems/geometry.hpp"
#include "nrems/synth.hpp"

namespace nrems {

/// Rectangular raster over the monitored area. (x0, y0) is the position of
/// sample (0, 0); pixel (ix, iy) sits at (x0 + ix*dx, y0 + iy*dy).
struct GridSpec {
    double x0 = 0.0;
    double y0 = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    int nx = 0;
    int ny = 0;

    Point2 pixel(int ix, int iy) const { return {x0 + ix * dx, y0 + iy * dy}; }
    int count() const { return nx * ny; }
    void validate() const;
};

struct ImageGrid {
    GridSpec spec;
    std::vector<std::complex<double>> values;  // ix-major: index = ix*ny + iy

    std::complex<double>& at(int ix, int iy) {
        return values[static_cast<size_t>(ix) * spec.ny + iy];
    }
    const std::complex<double>& at(int ix, int iy) const {
        return values[static_cast<size_t>(ix) * spec.ny + iy];
    }
};

/// Time-domain back-projection: per pixel, the sum over slow time of the
/// fast-time sample at the phase-center delay 2*(D_i + D_o(r, tau))/c
/// (linearly interpolated) rotated by exp(+j*4*pi/lambda0*(D_i + D_o)) and
/// by the conjugate of the skin's own modulation at the illuminated center,
/// exp(-j*2*phi(x0(tau))) — the correlation against the model signal that a
/// scatterer at r would return. D_i = s_y / sin(psi) is constant over tau;
/// D_o is measured from the boresight-nearest element. Out-of-window delays
/// contribute zero. Slow time is summed in ascending order, so results are
/// reproducible under any pixel-level parallelism.
ImageGrid backproject(const RxDataMatrix& data, const RadarConfig& radar,
                      const EmsLayout& layout, const GridSpec& grid,
                      int threads = 1);

/// Single-point back-projection. Also reports the sum of squared
/// interpolation weights per snapshot, which scales the post-imaging noise
/// power: var = sigma2 * noise_weight.
struct PointFocus {
    std::complex<double> value;
    double noise_weight = 0.0;
};
PointFocus backproject_point(const RxDataMatrix& data, const RadarConfig& radar,
                             const EmsLayout& layout, Point2 position);

/// 20*log10(|I| / max|I|), floored at -120 dB. Rejects an all-zero image.
std::vector<double> to_db_normalized(const ImageGrid& image);

/// Default image pitch: a quarter of the finest predicted resolution,
/// min(c/2B, lambda0 * max_range / (2 * cluster_aperture)) / 4.
double default_grid_pitch(double bandwidth, double wavelength, double max_range,
                          double cluster_aperture);

}  // namespace nrems
