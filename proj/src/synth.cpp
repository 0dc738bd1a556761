#include "nrems/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "nrems/parallel.hpp"
#include "nrems/rng.hpp"

namespace nrems {

namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;

void fnv_add(uint64_t& h, const void* bytes, size_t n) {
    const auto* p = static_cast<const unsigned char*>(bytes);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
}

void fnv_add_double(uint64_t& h, double v) { fnv_add(h, &v, sizeof v); }

struct SceneFrame {
    std::vector<Point2> sources;       // per snapshot
    std::vector<IndexWindow> windows;  // per snapshot
    int64_t lattice_base = 0;          // fast-time origin in units of dt
    int n_fast = 0;
};

/// Snapshot positions, illumination windows and the fast-time frame shared
/// by both synthesis models. The fast-time origin is quantized to the
/// waveform sample lattice so matrices of the same scene superpose
/// bin-exactly.
SceneFrame prepare_frame(const RadarConfig& radar, const EmsLayout& layout,
                         const TargetSet& targets, const Waveform& pulse) {
    radar.validate();
    targets.validate();
    layout.validate();
    if (radar.carrier != pulse.carrier()) {
        throw std::invalid_argument("radar and waveform carrier frequencies differ");
    }

    SceneFrame frame;
    const int n_slow = radar.trajectory.snapshot_count();
    frame.sources.reserve(n_slow);
    frame.windows.reserve(n_slow);
    bool any = false;
    double t_min = std::numeric_limits<double>::infinity();
    double t_max = -t_min;
    for (int j = 0; j < n_slow; ++j) {
        const Point2 s = radar.trajectory.position(j * radar.trajectory.snapshot_interval);
        const IndexWindow w =
            illumination_window(layout, s, radar.pointing, radar.beamwidth);
        frame.sources.push_back(s);
        frame.windows.push_back(w);
        if (w.empty()) {
            continue;
        }
        any = true;
        if (targets.targets.empty()) {
            // No scatterers: frame the skin's own round-trip delays.
            for (int i : {w.begin, w.end - 1}) {
                const double d = 2.0 * distance(s, layout.element(i)) / kSpeedOfLight;
                t_min = std::min(t_min, d);
                t_max = std::max(t_max, d);
            }
            continue;
        }
        for (const Target& target : targets.targets) {
            for (int i = w.begin; i < w.end; ++i) {
                const Point2 el = layout.element(i);
                // One-way leg source -> element -> target; pair delays are
                // sums of two such legs.
                const double leg = distance(s, el) + distance(el, target.position);
                t_min = std::min(t_min, 2.0 * leg / kSpeedOfLight);
                t_max = std::max(t_max, 2.0 * leg / kSpeedOfLight);
            }
        }
    }
    if (!any) {
        throw GeometryError("boresight never intersects the skin");
    }
    // The fast-time grid lives on the absolute lattice t = k * dt, so every
    // matrix built from the same waveform shares bin positions bit-exactly.
    const double dt = pulse.sample_interval();
    frame.lattice_base =
        static_cast<int64_t>(std::floor((t_min - pulse.support()) / dt));
    const auto last =
        static_cast<int64_t>(std::ceil((t_max + pulse.support()) / dt));
    frame.n_fast = static_cast<int>(last - frame.lattice_base) + 1;
    return frame;
}

RxDataMatrix make_matrix(const RadarConfig& radar, const SceneFrame& frame,
                         const Waveform& pulse, const NoiseModel& noise) {
    RxDataMatrix m;
    m.n_fast = frame.n_fast;
    m.n_slow = static_cast<int>(frame.sources.size());
    m.t0 = static_cast<double>(frame.lattice_base) * pulse.sample_interval();
    m.dt = pulse.sample_interval();
    m.tau0 = 0.0;
    m.dtau = radar.trajectory.snapshot_interval;
    m.data.assign(static_cast<size_t>(m.n_fast) * m.n_slow, {0.0, 0.0});
    m.config_digest = radar_config_digest(radar);
    m.seed = noise.seed;
    return m;
}

/// Deposits amp * g(t - delay) onto one slow-time column. Bin times are
/// taken from the absolute lattice (base + k) * dt so that deposits do not
/// depend on the matrix framing.
void deposit_pulse(std::complex<double>* column, int n_fast, int64_t base, double dt,
                   const Waveform& pulse, double delay, std::complex<double> amp) {
    const auto abs_begin =
        static_cast<int64_t>(std::ceil((delay - pulse.support()) / dt));
    const auto abs_end =
        static_cast<int64_t>(std::floor((delay + pulse.support()) / dt));
    const int k_begin = static_cast<int>(std::max<int64_t>(0, abs_begin - base));
    const int k_end =
        static_cast<int>(std::min<int64_t>(n_fast - 1, abs_end - base));
    for (int k = k_begin; k <= k_end; ++k) {
        column[k] += amp * pulse.eval(static_cast<double>(base + k) * dt - delay);
    }
}

double amplitude_scale(const RadarConfig& radar, const EmsLayout& layout,
                       double rcs, const SynthesisOptions& options) {
    const double calib =
        options.calib > 0.0
            ? options.calib
            : default_calibration(radar.wavelength(), layout.pitch,
                                  layout.vertical_extent);
    return calib * std::sqrt(radar.tx_power * rcs) *
           std::pow(radar.beamwidth, -0.5 * options.directivity_exponent);
}

}  // namespace

void RadarConfig::validate() const {
    if (!(carrier > 0.0) || !(bandwidth > 0.0)) {
        throw std::invalid_argument("carrier and bandwidth must be positive");
    }
    if (!(beamwidth > 0.0) || beamwidth >= kPi) {
        throw std::invalid_argument("beamwidth must lie in (0, pi)");
    }
    if (!(pointing > 0.0) || pointing > kPi / 2.0) {
        throw std::invalid_argument("pointing angle must lie in (0, pi/2]");
    }
    if (!(tx_power > 0.0)) {
        throw std::invalid_argument("transmit power must be positive");
    }
    trajectory.validate();
}

double beamwidth_from_aperture(double wavelength, double aperture, double pointing) {
    if (!(wavelength > 0.0) || !(aperture > 0.0)) {
        throw std::invalid_argument("wavelength and aperture must be positive");
    }
    const double c = std::cos(pointing);
    if (!(c > 0.0)) {
        throw std::invalid_argument("aperture-derived beamwidth needs pointing < pi/2");
    }
    return wavelength / (aperture * c);
}

void TargetSet::validate() const {
    for (const Target& t : targets) {
        if (!(t.rcs > 0.0)) {
            throw std::invalid_argument("target RCS must be positive");
        }
        if (!(t.position.y > 0.0)) {
            throw std::invalid_argument("targets must lie at y > 0");
        }
    }
}

double thermal_noise_power(double bandwidth, double noise_figure_db) {
    constexpr double kBoltzmann = 1.380649e-23;  // J/K
    constexpr double kT0 = 290.0;                // K
    return kBoltzmann * kT0 * bandwidth * std::pow(10.0, noise_figure_db / 10.0);
}

int n_rad(double forward_range, double beamwidth, double pitch, double pointing,
          int n_total) {
    if (!(forward_range > 0.0) || !(beamwidth > 0.0) || !(pitch > 0.0)) {
        throw std::invalid_argument("n_rad arguments must be positive");
    }
    if (!(pointing > 0.0) || pointing > kPi / 2.0) {
        throw std::invalid_argument("pointing angle must lie in (0, pi/2]");
    }
    const double raw = forward_range * beamwidth / (pitch * std::sin(pointing));
    const long count = std::lround(raw);
    return static_cast<int>(std::clamp<long>(count, 1, n_total));
}

IndexWindow illumination_window(const EmsLayout& layout, Point2 source,
                                double pointing, double beamwidth) {
    const BoresightHit hit = boresight_center(source, pointing);
    const int center = layout.nearest_element(hit.point.x);
    if (center < 0) {
        return {};
    }
    const int count =
        n_rad(hit.range, beamwidth, layout.pitch, pointing, layout.size());
    IndexWindow w;
    w.center = center;
    w.begin = std::max(0, center - count / 2);
    w.end = std::min(layout.size(), center + count - count / 2);
    return w;
}

double exact_delay(Point2 source, Point2 element_a, Point2 target, Point2 element_b) {
    return (distance(source, element_a) + distance(element_a, target) +
            distance(target, element_b) + distance(element_b, source)) /
           kSpeedOfLight;
}

double farfield_delay(double forward_range, double return_range, int n, int n2,
                      double pitch, double u_in, double u_out) {
    return 2.0 * (forward_range + return_range) / kSpeedOfLight +
           (n + n2) * (pitch / kSpeedOfLight) * (u_in + u_out);
}

double narrowband_margin(double bandwidth, double forward_range, double beamwidth,
                         double pointing) {
    if (!(pointing > 0.0) || pointing > kPi / 2.0) {
        throw std::invalid_argument("pointing angle must lie in (0, pi/2]");
    }
    if (!(bandwidth > 0.0) || !(forward_range > 0.0) || !(beamwidth > 0.0)) {
        throw std::invalid_argument("narrowband_margin arguments must be positive");
    }
    const double cot = std::cos(pointing) / std::sin(pointing);
    // Vertical pointing: cos(pi/2) only reaches ~6e-17 in floating point,
    // so treat anything below 1e-12 as the zero-spread limit.
    if (cot < 1e-12) {
        return std::numeric_limits<double>::infinity();
    }
    return (1.0 / bandwidth) / ((forward_range / kSpeedOfLight) * beamwidth * cot);
}

double pair_amplitude(double d_sn, double d_nr, double d_rn2, double d_n2s,
                      double beamwidth, double tx_power, double rcs, double calib) {
    if (!(d_sn > 0.0) || !(d_nr > 0.0) || !(d_rn2 > 0.0) || !(d_n2s > 0.0)) {
        throw std::invalid_argument("pair_amplitude requires positive distances");
    }
    return calib * std::sqrt(tx_power * rcs) /
           (beamwidth * beamwidth * d_sn * d_nr * d_rn2 * d_n2s);
}

double default_calibration(double wavelength, double pitch, double vertical_extent) {
    const double area = pitch * vertical_extent;
    return area * area / (std::pow(4.0 * kPi, 1.5) * wavelength);
}

RxDataMatrix synthesize_general(const RadarConfig& radar, const EmsLayout& layout,
                                const TargetSet& targets, const Waveform& pulse,
                                const NoiseModel& noise,
                                const SynthesisOptions& options) {
    const SceneFrame frame = prepare_frame(radar, layout, targets, pulse);
    RxDataMatrix m = make_matrix(radar, frame, pulse, noise);
    const double wavelength = radar.wavelength();

    parallel_for(m.n_slow, options.threads, [&](int j) {
        const IndexWindow& w = frame.windows[j];
        if (w.empty()) {
            return;
        }
        const Point2 s = frame.sources[j];
        std::complex<double>* column = &m.at(0, j);
        std::vector<double> leg(w.size());
        std::vector<std::complex<double>> coeff(w.size());
        // Per-target scratch column, so that multi-target scenes superpose
        // bin-exactly with single-target runs.
        std::vector<std::complex<double>> scratch(m.n_fast);
        for (const Target& target : targets.targets) {
            const double scale = amplitude_scale(radar, layout, target.rcs, options);
            for (int i = w.begin; i < w.end; ++i) {
                const Point2 el = layout.element(i);
                const double d_se = distance(s, el);
                const double d_et = distance(el, target.position);
                leg[i - w.begin] = d_se + d_et;
                const double phase =
                    layout.phases[i] - 2.0 * kPi * (d_se + d_et) / wavelength;
                coeff[i - w.begin] =
                    std::polar(1.0 / (d_se * d_et), phase);
            }
            std::fill(scratch.begin(), scratch.end(), std::complex<double>{0.0, 0.0});
            // Pairs are symmetric in (n, n'); fold the off-diagonal ones.
            for (int a = 0; a < w.size(); ++a) {
                for (int b = a; b < w.size(); ++b) {
                    const double delay = (leg[a] + leg[b]) / kSpeedOfLight;
                    std::complex<double> amp = scale * coeff[a] * coeff[b];
                    if (b != a) {
                        amp *= 2.0;
                    }
                    deposit_pulse(scratch.data(), m.n_fast, frame.lattice_base,
                                  m.dt, pulse, delay, amp);
                }
            }
            for (int k = 0; k < m.n_fast; ++k) {
                column[k] += scratch[k];
            }
        }
    });
    return add_noise(std::move(m), noise);
}

RxDataMatrix synthesize_narrowbeam(const RadarConfig& radar, const EmsLayout& layout,
                                   const TargetSet& targets, const Waveform& pulse,
                                   const NoiseModel& noise,
                                   const SynthesisOptions& options) {
    const SceneFrame frame = prepare_frame(radar, layout, targets, pulse);
    RxDataMatrix m = make_matrix(radar, frame, pulse, noise);
    const double wavelength = radar.wavelength();
    const double k_pitch = 2.0 * kPi * layout.pitch / wavelength;

    parallel_for(m.n_slow, options.threads, [&](int j) {
        const IndexWindow& w = frame.windows[j];
        if (w.empty()) {
            return;
        }
        const Point2 s = frame.sources[j];
        const Point2 x0 = layout.element(w.center);
        const double d_in = distance(s, x0);
        const double u_in = x_projection(s, x0);
        std::complex<double>* column = &m.at(0, j);
        for (const Target& target : targets.targets) {
            const double scale = amplitude_scale(radar, layout, target.rcs, options);
            const double d_out = distance(x0, target.position);
            const double u_out = x_projection(target.position, x0);
            std::complex<double> sum{0.0, 0.0};
            for (int i = w.begin; i < w.end; ++i) {
                const double geom = k_pitch * (i - w.center) * (u_in + u_out);
                sum += std::polar(1.0, layout.phases[i] - geom);
            }
            const double delay = 2.0 * (d_in + d_out) / kSpeedOfLight;
            const std::complex<double> amp =
                scale / (d_in * d_in * d_out * d_out) *
                std::polar(1.0, -4.0 * kPi * (d_in + d_out) / wavelength) * sum * sum;
            deposit_pulse(column, m.n_fast, frame.lattice_base, m.dt, pulse, delay,
                          amp);
        }
    });
    return add_noise(std::move(m), noise);
}

RxDataMatrix add_noise(RxDataMatrix matrix, const NoiseModel& noise) {
    matrix.seed = noise.seed;
    if (noise.sigma2 < 0.0) {
        throw std::invalid_argument("noise variance must be nonnegative");
    }
    if (noise.sigma2 == 0.0) {
        return matrix;
    }
    const CounterRng rng{noise.seed};
    for (size_t idx = 0; idx < matrix.data.size(); ++idx) {
        matrix.data[idx] += rng.complex_gaussian(idx, noise.sigma2);
    }
    return matrix;
}

std::string radar_config_digest(const RadarConfig& radar) {
    uint64_t h = kFnvOffset;
    fnv_add_double(h, radar.carrier);
    fnv_add_double(h, radar.bandwidth);
    fnv_add_double(h, radar.beamwidth);
    fnv_add_double(h, radar.pointing);
    fnv_add_double(h, radar.tx_power);
    fnv_add_double(h, radar.trajectory.start.x);
    fnv_add_double(h, radar.trajectory.start.y);
    fnv_add_double(h, radar.trajectory.speed);
    fnv_add_double(h, radar.trajectory.duration);
    fnv_add_double(h, radar.trajectory.snapshot_interval);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace nrems
