#include "nrems/waveform.hpp"

#include <cmath>
#include <stdexcept>

namespace nrems {

namespace {

double sinc(double x) {
    if (x == 0.0) {
        return 1.0;
    }
    const double px = kPi * x;
    return std::sin(px) / px;
}

}  // namespace

Waveform Waveform::make_pulse(double carrier_hz, double bandwidth_hz,
                              int oversample, int n_lobes) {
    if (!(carrier_hz > 0.0) || !(bandwidth_hz > 0.0)) {
        throw std::invalid_argument("carrier and bandwidth must be positive");
    }
    if (oversample < 2) {
        throw std::invalid_argument("oversample must be at least 2");
    }
    if (n_lobes < 4) {
        throw std::invalid_argument("n_lobes must be at least 4");
    }

    Waveform w;
    w.carrier_ = carrier_hz;
    w.wavelength_ = kSpeedOfLight / carrier_hz;
    w.bandwidth_ = bandwidth_hz;
    w.dt_ = 1.0 / (static_cast<double>(oversample) * bandwidth_hz);
    w.t_support_ = static_cast<double>(n_lobes) / bandwidth_hz;

    const int half = n_lobes * oversample;
    w.center_ = half;
    w.samples_.resize(2 * half + 1);
    for (int k = -half; k <= half; ++k) {
        const double t = k * w.dt_;
        // Raised cosine taper reaching zero at the support edge; sinc nulls
        // at multiples of 1/B stay exact under the product.
        const double taper = 0.5 * (1.0 + std::cos(kPi * t / w.t_support_));
        w.samples_[k + half] = sinc(bandwidth_hz * t) * taper;
    }
    w.samples_.front() = 0.0;
    w.samples_.back() = 0.0;
    return w;
}

std::complex<double> Waveform::eval(double t) const {
    if (std::abs(t) >= t_support_) {
        return {0.0, 0.0};
    }
    const double pos = t / dt_ + center_;
    const int k = static_cast<int>(std::floor(pos));
    if (k < 0 || k + 1 >= static_cast<int>(samples_.size())) {
        return {0.0, 0.0};
    }
    const double frac = pos - k;
    if (frac == 0.0) {
        return samples_[k];
    }
    return (1.0 - frac) * samples_[k] + frac * samples_[k + 1];
}

}  // namespace nrems
