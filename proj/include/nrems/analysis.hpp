#pragma once

#include <optional>
#include <vector>

#include "nrems/imaging.hpp"
#include "nrems/synth.hpp"
#include "nrems/waveform.hpp"

namespace nrems {

struct SnrMap {
    GridSpec spec;
    std::vector<double> snr_db;  // ix-major, like ImageGrid
    double probe_rcs = 0.0;
};

struct SnrMapOptions {
    SynthesisOptions synth;
    bool narrowbeam = true;  // forward model used per probe
    int threads = 1;
};

/// Post-imaging SNR per probe cell: one fictitious target per cell, a
/// noise-free synthesis + focus, |I(peak)|^2 over the analytic noise power
/// sigma2 * sum of squared interpolation weights. Capped at +200 dB.
SnrMap snr_map(const RadarConfig& radar, const EmsLayout& layout,
               const GridSpec& probes, double probe_rcs, const NoiseModel& noise,
               const Waveform& pulse, const SnrMapOptions& options = {});

/// Fraction of cells with SNR strictly above the threshold.
double coverage_fraction(const SnrMap& map, double threshold_db);

/// Monte-Carlo estimate of the post-imaging noise power at a position:
/// focuses `draws` pure-noise matrices shaped like `data` and averages
/// |I|^2. Cross-check for the analytic sigma2 * noise_weight value.
double monte_carlo_noise_power(const RxDataMatrix& data, const RadarConfig& radar,
                               const EmsLayout& layout, Point2 position,
                               double sigma2, uint64_t seed, int draws);

struct PsfReport {
    Point2 peak_position;
    double delta_x = 0.0;       // -3 dB width of |I| along x, m
    double delta_y = 0.0;       // -3 dB width of |I| along y, m
    double peak_snr_db = 0.0;   // peak over rms background in the search region
    std::optional<double> highest_sidelobe_db;  // relative to the peak
};

/// Locates the dominant peak near `near` (quadratic sub-pixel refinement)
/// and measures the -3 dB widths along axis cuts. Widths are +infinity when
/// the cut never drops 3 dB inside the search radius. Throws when no peak
/// within 20 dB of the image maximum lies inside the radius.
PsfReport psf_metrics(const ImageGrid& image, Point2 near, double search_radius);

/// Relative SNR loss from widening the beam: 30*log10(wide/narrow) dB.
double beam_widening_loss(double beamwidth_wide, double beamwidth_narrow);

struct GhostPeak {
    Point2 position;
    double level_db = 0.0;  // relative to the image peak
};

/// Local maxima of the normalized image above floor_db that do not match a
/// true target within match_radius, strongest first.
std::vector<GhostPeak> ghost_report(const ImageGrid& image, const TargetSet& truth,
                                    double match_radius, double floor_db);

}  // namespace nrems
