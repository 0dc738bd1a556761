#pragma once

#include <complex>
#include <stdexcept>
#include <cstdint>
#include <string>
#include <vector>

#include "nrems/ems.hpp"
#include "nrems/geometry.hpp"
#include "nrems/waveform.hpp"

namespace nrems {

/// Raised when a scene is geometrically infeasible (e.g. the boresight never
/// hits the skin).
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RadarConfig {
    double carrier = 0.0;    // f0, Hz
    double bandwidth = 0.0;  // B, Hz
    double beamwidth = 0.0;  // azimuth beamwidth, rad
    double pointing = 0.0;   // psi, rad, in (0, pi/2]
    double tx_power = 0.0;   // W
    SourceTrajectory trajectory;

    double wavelength() const { return kSpeedOfLight / carrier; }
    void validate() const;
};

/// Beamwidth of a linear aperture: lambda0 / (A * cos(pointing)).
double beamwidth_from_aperture(double wavelength, double aperture, double pointing);

struct Target {
    Point2 position;
    double rcs = 0.0;  // m^2
};

struct TargetSet {
    std::vector<Target> targets;
    void validate() const;
};

struct NoiseModel {
    double sigma2 = 0.0;  // noise power per complex sample, W
    uint64_t seed = 0;
};

/// kB * T0 * B * F with T0 = 290 K.
double thermal_noise_power(double bandwidth, double noise_figure_db = 10.0);

/// Complex base-band samples over fast time (rows, contiguous) x slow time
/// (columns). Fast-time bins lie on the absolute lattice t = k * dt, so
/// matrices from the same waveform superpose bin-exactly.
struct RxDataMatrix {
    int n_fast = 0;
    int n_slow = 0;
    double t0 = 0.0;    // s, fast-time origin (multiple of dt)
    double dt = 0.0;    // s
    double tau0 = 0.0;  // s, slow-time origin
    double dtau = 0.0;  // s
    std::vector<std::complex<double>> data;
    std::string config_digest;
    uint64_t seed = 0;

    std::complex<double>& at(int fast, int slow) {
        return data[static_cast<size_t>(slow) * n_fast + fast];
    }
    const std::complex<double>& at(int fast, int slow) const {
        return data[static_cast<size_t>(slow) * n_fast + fast];
    }
    double fast_time(int k) const { return t0 + k * dt; }
    double slow_time(int j) const { return tau0 + j * dtau; }
};

/// Illuminated element count round(D_i * beamwidth / (d * sin(psi))),
/// clamped to [1, n_total].
int n_rad(double forward_range, double beamwidth, double pitch, double pointing,
          int n_total);

/// Contiguous storage-index window [begin, end) of illuminated elements,
/// centered on the element nearest the boresight center and truncated at the
/// skin edges. Empty (begin == end, center -1) when the boresight misses the
/// skin.
struct IndexWindow {
    int begin = 0;
    int end = 0;
    int center = -1;  // storage index of the boresight-nearest element
    bool empty() const { return begin >= end; }
    int size() const { return end - begin; }
};

IndexWindow illumination_window(const EmsLayout& layout, Point2 source,
                                double pointing, double beamwidth);

/// Two-way delay source -> element a -> target -> element b -> source.
double exact_delay(Point2 source, Point2 element_a, Point2 target, Point2 element_b);

/// Far-field delay about a common expansion center:
/// 2*(D_i + D_o)/c + (n + n2)*(d/c)*(u_in + u_out), with n, n2 measured from
/// the expansion center and u_in, u_out the x projections of the unit
/// vectors pointing from the source and from the target toward that center.
double farfield_delay(double forward_range, double return_range, int n, int n2,
                      double pitch, double u_in, double u_out);

/// Ratio (1/B) / ((D_i/c) * beamwidth * cot(psi)); values well above 1 mean
/// the envelope is flat across the illuminated footprint. Infinite at
/// psi = pi/2.
double narrowband_margin(double bandwidth, double forward_range, double beamwidth,
                         double pointing);

/// Per-pair echo amplitude calib * sqrt(P * rcs) / (beamwidth^2 * D1*D2*D3*D4).
double pair_amplitude(double d_sn, double d_nr, double d_rn2, double d_n2s,
                      double beamwidth, double tx_power, double rcs, double calib);

/// Default amplitude calibration (d*h_z)^2 / ((4*pi)^(3/2) * lambda0), the
/// element-scattering-cross-section link budget.
double default_calibration(double wavelength, double pitch, double vertical_extent);

struct SynthesisOptions {
    double calib = 0.0;                 // 0 -> default_calibration(...)
    double directivity_exponent = 4.0;  // power-law exponent on 1/beamwidth
    int threads = 1;
};

/// Exact near-field, spatially wideband model: per snapshot, target and
/// element pair, a delayed copy of the pulse with the full four-leg delay.
RxDataMatrix synthesize_general(const RadarConfig& radar, const EmsLayout& layout,
                                const TargetSet& targets, const Waveform& pulse,
                                const NoiseModel& noise,
                                const SynthesisOptions& options = {});

/// Far-field + spatially narrowband model: common envelope at the
/// phase-center delay times the factorized array sum squared.
RxDataMatrix synthesize_narrowbeam(const RadarConfig& radar, const EmsLayout& layout,
                                   const TargetSet& targets, const Waveform& pulse,
                                   const NoiseModel& noise,
                                   const SynthesisOptions& options = {});

/// Adds one independent complex Gaussian draw per sample, keyed by
/// (seed, fast index, slow index). Identity when sigma2 == 0.
RxDataMatrix add_noise(RxDataMatrix matrix, const NoiseModel& noise);

/// Digest of the radar configuration, stored in RxDataMatrix metadata.
std::string radar_config_digest(const RadarConfig& radar);

}  // namespace nrems
