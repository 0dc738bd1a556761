#pragma once

#include <complex>
#include <vector>

#include "nrems/geometry.hpp"

namespace nrems {

/// Base-band range-compressed pulse: a sinc of bandwidth B under a raised
/// cosine taper, sampled on a uniform fast-time grid. Immutable after
/// construction; evaluation is re-entrant.
class Waveform {
public:
    /// Builds the pulse. `oversample` sets the grid to 1/(oversample*B),
    /// `n_lobes` the one-sided support in sinc lobes (taper reaches zero at
    /// +-n_lobes/B).
    static Waveform make_pulse(double carrier_hz, double bandwidth_hz,
                               int oversample = 8, int n_lobes = 16);

    /// Linear interpolation of the sampled pulse; exactly zero outside the
    /// support. Total function.
    std::complex<double> eval(double t) const;

    double carrier() const { return carrier_; }
    double wavelength() const { return wavelength_; }
    double bandwidth() const { return bandwidth_; }
    double sample_interval() const { return dt_; }
    double support() const { return t_support_; }  // half-width of nonzero support
    double range_resolution() const { return kSpeedOfLight / (2.0 * bandwidth_); }
    const std::vector<std::complex<double>>& samples() const { return samples_; }

private:
    Waveform() = default;

    double carrier_ = 0.0;
    double wavelength_ = 0.0;
    double bandwidth_ = 0.0;
    double dt_ = 0.0;
    double t_support_ = 0.0;
    std::vector<std::complex<double>> samples_;  // index k holds t = (k - center) * dt
    int center_ = 0;
};

}  // namespace nrems
