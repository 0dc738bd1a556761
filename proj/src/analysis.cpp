#include "nrems/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nrems/parallel.hpp"
#include "nrems/rng.hpp"

namespace nrems {

namespace {

constexpr double kSnrCapDb = 200.0;

double cluster_aperture(const EmsLayout& layout) {
    return layout.modules_per_cluster * layout.elements_per_module * layout.pitch;
}

/// -3 dB width of |I| along one axis through (ix, iy); +infinity when the
/// cut never crosses the level inside the image.
double cut_width(const ImageGrid& img, int ix, int iy, bool along_x, double peak) {
    const double level = peak * std::pow(10.0, -3.0 / 20.0);
    const double pitch = along_x ? img.spec.dx : img.spec.dy;
    const int limit = along_x ? img.spec.nx : img.spec.ny;
    const int start = along_x ? ix : iy;
    double side[2] = {0.0, 0.0};
    for (int dir = 0; dir < 2; ++dir) {
        const int step = dir == 0 ? -1 : 1;
        int k = start;
        double prev = std::abs(along_x ? img.at(k, iy) : img.at(ix, k));
        bool crossed = false;
        while (k + step >= 0 && k + step < limit) {
            k += step;
            const double cur = std::abs(along_x ? img.at(k, iy) : img.at(ix, k));
            if (cur <= level) {
                const double frac = prev > cur ? (prev - level) / (prev - cur) : 1.0;
                side[dir] = (std::abs(k - step - start) + frac) * pitch;
                crossed = true;
                break;
            }
            prev = cur;
        }
        if (!crossed) {
            return std::numeric_limits<double>::infinity();
        }
    }
    return side[0] + side[1];
}

/// Sub-pixel offset of a parabola through three samples, clamped to half a
/// pixel.
double parabolic_offset(double left, double mid, double right) {
    const double denom = left - 2.0 * mid + right;
    if (denom >= 0.0) {
        return 0.0;
    }
    return std::clamp(0.5 * (left - right) / denom, -0.5, 0.5);
}

}  // namespace

SnrMap snr_map(const RadarConfig& radar, const EmsLayout& layout,
               const GridSpec& probes, double probe_rcs, const NoiseModel& noise,
               const Waveform& pulse, const SnrMapOptions& options) {
    probes.validate();
    if (!(probe_rcs > 0.0)) {
        throw std::invalid_argument("probe RCS must be positive");
    }
    SnrMap map;
    map.spec = probes;
    map.probe_rcs = probe_rcs;
    map.snr_db.assign(static_cast<size_t>(probes.nx) * probes.ny, 0.0);

    const NoiseModel quiet{0.0, noise.seed};
    // Fine pitch for the local peak search around each probe.
    const double patch_pitch =
        default_grid_pitch(radar.bandwidth, radar.wavelength(),
                           std::hypot(probes.x0 + (probes.nx - 1) * probes.dx,
                                      probes.y0 + (probes.ny - 1) * probes.dy),
                           cluster_aperture(layout));

    parallel_for(probes.count(), options.threads, [&](int cell) {
        const int ix = cell / probes.ny;
        const int iy = cell % probes.ny;
        const Point2 r = probes.pixel(ix, iy);
        TargetSet probe;
        probe.targets.push_back({r, probe_rcs});
        SynthesisOptions synth = options.synth;
        synth.threads = 1;  // probes already run in parallel
        const RxDataMatrix data =
            options.narrowbeam
                ? synthesize_narrowbeam(radar, layout, probe, pulse, quiet, synth)
                : synthesize_general(radar, layout, probe, pulse, quiet, synth);
        // Peak over a small patch centered on the probe.
        double peak2 = 0.0;
        double weight = 0.0;
        for (int px = -2; px <= 2; ++px) {
            for (int py = -2; py <= 2; ++py) {
                const Point2 q{r.x + px * patch_pitch, r.y + py * patch_pitch};
                const PointFocus f = backproject_point(data, radar, layout, q);
                const double p2 = std::norm(f.value);
                if (p2 > peak2) {
                    peak2 = p2;
                    weight = f.noise_weight;
                }
            }
        }
        double snr_db = kSnrCapDb;
        const double noise_power = noise.sigma2 * weight;
        if (noise_power > 0.0 && peak2 > 0.0) {
            snr_db = std::min(kSnrCapDb, 10.0 * std::log10(peak2 / noise_power));
        } else if (peak2 == 0.0) {
            snr_db = -kSnrCapDb;
        }
        map.snr_db[static_cast<size_t>(ix) * probes.ny + iy] = snr_db;
    });
    return map;
}

double coverage_fraction(const SnrMap& map, double threshold_db) {
    if (map.snr_db.empty()) {
        return 0.0;
    }
    const auto above = std::count_if(map.snr_db.begin(), map.snr_db.end(),
                                     [&](double v) { return v > threshold_db; });
    return static_cast<double>(above) / static_cast<double>(map.snr_db.size());
}

double monte_carlo_noise_power(const RxDataMatrix& data, const RadarConfig& radar,
                               const EmsLayout& layout, Point2 position,
                               double sigma2, uint64_t seed, int draws) {
    if (draws < 1) {
        throw std::invalid_argument("at least one noise draw is required");
    }
    RxDataMatrix noise_only = data;
    double total = 0.0;
    for (int d = 0; d < draws; ++d) {
        std::fill(noise_only.data.begin(), noise_only.data.end(),
                  std::complex<double>{0.0, 0.0});
        noise_only = add_noise(std::move(noise_only), {sigma2, seed + d});
        total += std::norm(backproject_point(noise_only, radar, layout, position).value);
    }
    return total / draws;
}

PsfReport psf_metrics(const ImageGrid& image, Point2 near, double search_radius) {
    if (!(search_radius > 0.0)) {
        throw std::invalid_argument("search radius must be positive");
    }
    double global_peak = 0.0;
    for (const auto& v : image.values) {
        global_peak = std::max(global_peak, std::abs(v));
    }
    if (global_peak == 0.0) {
        throw std::runtime_error("image is identically zero");
    }

    // Strongest pixel inside the search disc.
    int px = -1, py = -1;
    double peak = 0.0;
    for (int ix = 0; ix < image.spec.nx; ++ix) {
        for (int iy = 0; iy < image.spec.ny; ++iy) {
            const Point2 r = image.spec.pixel(ix, iy);
            if (distance(r, near) > search_radius) {
                continue;
            }
            const double mag = std::abs(image.at(ix, iy));
            if (mag > peak) {
                peak = mag;
                px = ix;
                py = iy;
            }
        }
    }
    if (px < 0 || peak < global_peak * std::pow(10.0, -20.0 / 20.0)) {
        throw std::runtime_error("no dominant peak within the search radius");
    }

    PsfReport report;
    // Quadratic sub-pixel refinement along each axis.
    double off_x = 0.0, off_y = 0.0;
    if (px > 0 && px + 1 < image.spec.nx) {
        off_x = parabolic_offset(std::abs(image.at(px - 1, py)), peak,
                                 std::abs(image.at(px + 1, py)));
    }
    if (py > 0 && py + 1 < image.spec.ny) {
        off_y = parabolic_offset(std::abs(image.at(px, py - 1)), peak,
                                 std::abs(image.at(px, py + 1)));
    }
    const Point2 center = image.spec.pixel(px, py);
    report.peak_position = {center.x + off_x * image.spec.dx,
                            center.y + off_y * image.spec.dy};
    report.delta_x = cut_width(image, px, py, true, peak);
    report.delta_y = cut_width(image, px, py, false, peak);

    // Background and sidelobes within the search disc, outside the main lobe.
    const double guard_x =
        std::isfinite(report.delta_x) ? 1.5 * report.delta_x : 3.0 * image.spec.dx;
    const double guard_y =
        std::isfinite(report.delta_y) ? 1.5 * report.delta_y : 3.0 * image.spec.dy;
    double background_sq = 0.0;
    int background_n = 0;
    double sidelobe = 0.0;
    bool sidelobe_found = false;
    for (int ix = 0; ix < image.spec.nx; ++ix) {
        for (int iy = 0; iy < image.spec.ny; ++iy) {
            const Point2 r = image.spec.pixel(ix, iy);
            if (distance(r, near) > search_radius) {
                continue;
            }
            const double ex = (r.x - report.peak_position.x) / guard_x;
            const double ey = (r.y - report.peak_position.y) / guard_y;
            if (ex * ex + ey * ey <= 1.0) {
                continue;
            }
            const double mag = std::abs(image.at(ix, iy));
            background_sq += mag * mag;
            ++background_n;
            // Local maximum over the 8-neighborhood.
            bool is_max = true;
            for (int sx = -1; sx <= 1 && is_max; ++sx) {
                for (int sy = -1; sy <= 1; ++sy) {
                    if (sx == 0 && sy == 0) {
                        continue;
                    }
                    const int jx = ix + sx, jy = iy + sy;
                    if (jx < 0 || jy < 0 || jx >= image.spec.nx || jy >= image.spec.ny) {
                        continue;
                    }
                    if (std::abs(image.at(jx, jy)) > mag) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max && mag > sidelobe) {
                sidelobe = mag;
                sidelobe_found = true;
            }
        }
    }
    if (background_n > 0 && background_sq > 0.0) {
        report.peak_snr_db =
            10.0 * std::log10(peak * peak / (background_sq / background_n));
    } else {
        report.peak_snr_db = kSnrCapDb;
    }
    if (sidelobe_found && sidelobe > 0.0) {
        report.highest_sidelobe_db = 20.0 * std::log10(sidelobe / peak);
    }
    return report;
}

double beam_widening_loss(double beamwidth_wide, double beamwidth_narrow) {
    if (!(beamwidth_wide > 0.0) || !(beamwidth_narrow > 0.0)) {
        throw std::invalid_argument("beamwidths must be positive");
    }
    if (beamwidth_wide < beamwidth_narrow) {
        throw std::invalid_argument("wide beamwidth must be >= narrow beamwidth");
    }
    return 30.0 * std::log10(beamwidth_wide / beamwidth_narrow);
}

std::vector<GhostPeak> ghost_report(const ImageGrid& image, const TargetSet& truth,
                                    double match_radius, double floor_db) {
    const std::vector<double> db = to_db_normalized(image);
    std::vector<GhostPeak> ghosts;
    for (int ix = 0; ix < image.spec.nx; ++ix) {
        for (int iy = 0; iy < image.spec.ny; ++iy) {
            const double level = db[static_cast<size_t>(ix) * image.spec.ny + iy];
            if (level < floor_db) {
                continue;
            }
            bool is_max = true;
            for (int sx = -1; sx <= 1 && is_max; ++sx) {
                for (int sy = -1; sy <= 1; ++sy) {
                    if (sx == 0 && sy == 0) {
                        continue;
                    }
                    const int jx = ix + sx, jy = iy + sy;
                    if (jx < 0 || jy < 0 || jx >= image.spec.nx || jy >= image.spec.ny) {
                        continue;
                    }
                    if (db[static_cast<size_t>(jx) * image.spec.ny + jy] > level) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (!is_max) {
                continue;
            }
            const Point2 r = image.spec.pixel(ix, iy);
            const bool matched =
                std::any_of(truth.targets.begin(), truth.targets.end(),
                            [&](const Target& t) {
                                return distance(t.position, r) <= match_radius;
                            });
            if (!matched) {
                ghosts.push_back({r, level});
            }
        }
    }
    std::sort(ghosts.begin(), ghosts.end(),
              [](const GhostPeak& a, const GhostPeak& b) {
                  return a.level_db > b.level_db;
              });
    return ghosts;
}

}  // namespace nrems
