#include "nrems/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nrems/io.hpp"

namespace nrems {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ScenarioError("schema: " + where + ": " + what);
}

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            fail(where, "unknown key '" + item.key() + "'");
        }
    }
    for (const auto& key : required) {
        if (!obj.contains(key)) {
            fail(where, "missing key '" + key + "'");
        }
    }
}

double get_number(const json& obj, const std::string& where, const std::string& key) {
    const auto& v = obj.at(key);
    if (!v.is_number()) {
        fail(where, "'" + key + "' must be a number");
    }
    return v.get<double>();
}

double get_positive(const json& obj, const std::string& where, const std::string& key) {
    const double v = get_number(obj, where, key);
    if (!(v > 0.0)) {
        fail(where, "'" + key + "' must be > 0");
    }
    return v;
}

int get_count(const json& obj, const std::string& where, const std::string& key) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long>() <= 0) {
        fail(where, "'" + key + "' must be a positive integer");
    }
    return static_cast<int>(v.get<long>());
}

Point2 get_point(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        fail(where, "expected [x, y]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

RadarConfig parse_radar(const json& obj) {
    require_keys(obj, "radar",
                 {"carrier_hz", "bandwidth_hz", "beamwidth_deg", "aperture_m",
                  "pointing_deg", "tx_power_w", "tx_power_dbm", "trajectory"},
                 {"carrier_hz", "bandwidth_hz", "pointing_deg", "trajectory"});
    RadarConfig radar;
    radar.carrier = get_positive(obj, "radar", "carrier_hz");
    radar.bandwidth = get_positive(obj, "radar", "bandwidth_hz");
    radar.pointing = get_number(obj, "radar", "pointing_deg") * kPi / 180.0;

    if (obj.contains("beamwidth_deg") == obj.contains("aperture_m")) {
        fail("radar", "exactly one of 'beamwidth_deg' or 'aperture_m' is required");
    }
    if (obj.contains("beamwidth_deg")) {
        radar.beamwidth = get_positive(obj, "radar", "beamwidth_deg") * kPi / 180.0;
    } else {
        radar.beamwidth = beamwidth_from_aperture(
            radar.wavelength(), get_positive(obj, "radar", "aperture_m"),
            radar.pointing);
    }

    if (obj.contains("tx_power_w") == obj.contains("tx_power_dbm")) {
        fail("radar", "exactly one of 'tx_power_w' or 'tx_power_dbm' is required");
    }
    radar.tx_power = obj.contains("tx_power_w")
                         ? get_positive(obj, "radar", "tx_power_w")
                         : std::pow(10.0, get_number(obj, "radar", "tx_power_dbm") / 10.0) * 1e-3;

    const json& traj = obj.at("trajectory");
    require_keys(traj, "radar.trajectory",
                 {"start_m", "speed_mps", "duration_s", "snapshot_interval_s"},
                 {"start_m", "speed_mps", "duration_s"});
    radar.trajectory.start = get_point(traj.at("start_m"), "radar.trajectory.start_m");
    radar.trajectory.speed = get_positive(traj, "radar.trajectory", "speed_mps");
    radar.trajectory.duration = get_positive(traj, "radar.trajectory", "duration_s");
    if (traj.contains("snapshot_interval_s")) {
        radar.trajectory.snapshot_interval =
            get_positive(traj, "radar.trajectory", "snapshot_interval_s");
    } else {
        // Default: the illuminated center advances by at most lambda0/4 per
        // snapshot, keeping the two-way slow-time phase unaliased.
        radar.trajectory.snapshot_interval =
            radar.wavelength() / 4.0 / radar.trajectory.speed;
    }
    return radar;
}

EmsLayout parse_ems(const json& obj, const RadarConfig& radar) {
    require_keys(obj, "ems",
                 {"clusters", "modules_per_cluster", "module_width_m",
                  "module_height_m", "pitch_m", "element_decimation", "anchors",
                  "phase_bits", "mirror"},
                 {"clusters", "modules_per_cluster", "module_width_m", "anchors"});
    ModularEmsDesign design;
    design.cluster_count = get_count(obj, "ems", "clusters");
    design.modules_per_cluster = get_count(obj, "ems", "modules_per_cluster");
    design.wavelength = radar.wavelength();
    design.pointing = radar.pointing;
    design.reference_source = radar.trajectory.start;
    design.vertical_extent =
        obj.contains("module_height_m") ? get_positive(obj, "ems", "module_height_m") : 0.5;

    double pitch = obj.contains("pitch_m") ? get_positive(obj, "ems", "pitch_m")
                                           : design.wavelength / 4.0;
    if (obj.contains("element_decimation")) {
        pitch *= get_count(obj, "ems", "element_decimation");
    }
    design.pitch = pitch;
    const double module_width = get_positive(obj, "ems", "module_width_m");
    design.elements_per_module = elements_per_module_for_width(module_width, pitch);

    const json& anchors = obj.at("anchors");
    if (anchors.is_array()) {
        for (const auto& a : anchors) {
            design.anchors.push_back(get_point(a, "ems.anchors"));
        }
    } else {
        require_keys(anchors, "ems.anchors",
                     {"ranges_m", "per_range_count", "area"},
                     {"ranges_m", "per_range_count", "area"});
        AnchorScheme scheme;
        for (const auto& r : anchors.at("ranges_m")) {
            if (!r.is_number() || !(r.get<double>() > 0.0)) {
                fail("ems.anchors.ranges_m", "ranges must be positive numbers");
            }
            scheme.ranges.push_back(r.get<double>());
        }
        scheme.per_range_count = get_count(anchors, "ems.anchors", "per_range_count");
        const json& area = anchors.at("area");
        require_keys(area, "ems.anchors.area",
                     {"x_min_m", "x_max_m", "y_min_m", "y_max_m"},
                     {"x_min_m", "x_max_m", "y_min_m", "y_max_m"});
        scheme.area = {get_number(area, "ems.anchors.area", "x_min_m"),
                       get_number(area, "ems.anchors.area", "x_max_m"),
                       get_number(area, "ems.anchors.area", "y_min_m"),
                       get_number(area, "ems.anchors.area", "y_max_m")};
        try {
            design.anchors = select_anchor_points(scheme);
        } catch (const std::invalid_argument& e) {
            fail("ems.anchors", e.what());
        }
    }
    if (static_cast<int>(design.anchors.size()) != design.cluster_count) {
        fail("ems.anchors", "anchor count must equal 'clusters'");
    }

    EmsLayout layout;
    try {
        layout = build_modular_ems(design);
    } catch (const std::invalid_argument& e) {
        fail("ems", e.what());
    }
    if (obj.contains("mirror") && obj.at("mirror").is_boolean() &&
        obj.at("mirror").get<bool>()) {
        // Plain-mirror variant: keep the geometry, zero every phase.
        std::fill(layout.phases.begin(), layout.phases.end(), 0.0);
    }
    if (obj.contains("phase_bits")) {
        layout.phases = quantize_phases(layout.phases, get_count(obj, "ems", "phase_bits"));
    }
    return layout;
}

TargetSet parse_targets(const json& arr) {
    if (!arr.is_array()) {
        fail("targets", "expected an array");
    }
    TargetSet set;
    for (const auto& t : arr) {
        require_keys(t, "targets[]", {"position_m", "rcs_m2"}, {"position_m", "rcs_m2"});
        Target target;
        target.position = get_point(t.at("position_m"), "targets[].position_m");
        target.rcs = get_positive(t, "targets[]", "rcs_m2");
        if (!(target.position.y > 0.0)) {
            fail("targets[].position_m", "targets must lie at y > 0");
        }
        set.targets.push_back(target);
    }
    return set;
}

NoiseModel parse_noise(const json& obj, const RadarConfig& radar) {
    require_keys(obj, "noise", {"seed", "sigma2_w", "noise_figure_db"}, {"seed"});
    NoiseModel noise;
    if (!obj.at("seed").is_number_unsigned() && !obj.at("seed").is_number_integer()) {
        fail("noise", "'seed' must be an integer");
    }
    noise.seed = obj.at("seed").get<uint64_t>();
    if (obj.contains("sigma2_w") && obj.contains("noise_figure_db")) {
        fail("noise", "give either 'sigma2_w' or 'noise_figure_db', not both");
    }
    if (obj.contains("sigma2_w")) {
        const double v = get_number(obj, "noise", "sigma2_w");
        if (v < 0.0) {
            fail("noise", "'sigma2_w' must be >= 0");
        }
        noise.sigma2 = v;
    } else {
        const double figure =
            obj.contains("noise_figure_db") ? get_number(obj, "noise", "noise_figure_db") : 10.0;
        noise.sigma2 = thermal_noise_power(radar.bandwidth, figure);
    }
    return noise;
}

GridSpec parse_grid(const json& obj, const RadarConfig& radar, const EmsLayout& ems) {
    require_keys(obj, "grid",
                 {"x_min_m", "x_max_m", "y_min_m", "y_max_m", "pixel_m"},
                 {"x_min_m", "x_max_m", "y_min_m", "y_max_m"});
    const double x_min = get_number(obj, "grid", "x_min_m");
    const double x_max = get_number(obj, "grid", "x_max_m");
    const double y_min = get_number(obj, "grid", "y_min_m");
    const double y_max = get_number(obj, "grid", "y_max_m");
    if (!(x_max > x_min) || !(y_max > y_min)) {
        fail("grid", "max bounds must exceed min bounds");
    }
    if (!(y_min > 0.0)) {
        fail("grid", "the imaged area must lie at y > 0");
    }
    double pitch;
    if (obj.contains("pixel_m")) {
        pitch = get_positive(obj, "grid", "pixel_m");
    } else {
        const double max_range = std::max(std::hypot(x_min, y_max), std::hypot(x_max, y_max));
        const double aperture =
            ems.modules_per_cluster * ems.elements_per_module * ems.pitch;
        pitch = default_grid_pitch(radar.bandwidth, radar.wavelength(), max_range, aperture);
    }
    GridSpec grid;
    grid.x0 = x_min;
    grid.y0 = y_min;
    grid.dx = pitch;
    grid.dy = pitch;
    grid.nx = static_cast<int>(std::floor((x_max - x_min) / pitch + 1e-9)) + 1;
    grid.ny = static_cast<int>(std::floor((y_max - y_min) / pitch + 1e-9)) + 1;
    grid.validate();
    return grid;
}

}  // namespace

Scenario load_scenario(const std::string& json_text) {
    json root = json::parse(json_text, nullptr, false);
    if (root.is_discarded()) {
        throw ScenarioError("schema: not valid JSON");
    }
    require_keys(root, "scenario",
                 {"radar", "ems", "targets", "noise", "grid", "calibration", "model",
                  "pulse", "analysis"},
                 {"radar", "ems", "noise", "grid"});

    Scenario sc;
    sc.radar = parse_radar(root.at("radar"));
    sc.ems = parse_ems(root.at("ems"), sc.radar);
    if (root.contains("targets")) {
        sc.targets = parse_targets(root.at("targets"));
    }
    sc.noise = parse_noise(root.at("noise"), sc.radar);
    sc.grid = parse_grid(root.at("grid"), sc.radar, sc.ems);

    if (root.contains("calibration")) {
        const json& cal = root.at("calibration");
        require_keys(cal, "calibration", {"amplitude_const_m3", "directivity_exponent"}, {});
        if (cal.contains("amplitude_const_m3")) {
            sc.synthesis.calib = get_positive(cal, "calibration", "amplitude_const_m3");
        }
        if (cal.contains("directivity_exponent")) {
            sc.synthesis.directivity_exponent =
                get_number(cal, "calibration", "directivity_exponent");
        }
    }
    if (root.contains("model")) {
        const auto model = root.at("model").get<std::string>();
        if (model != "narrowbeam" && model != "general") {
            fail("model", "must be 'narrowbeam' or 'general'");
        }
        sc.model = model;
    }
    if (root.contains("pulse")) {
        const json& pulse = root.at("pulse");
        require_keys(pulse, "pulse", {"oversample", "n_lobes"}, {});
        if (pulse.contains("oversample")) {
            sc.pulse_oversample = get_count(pulse, "pulse", "oversample");
        }
        if (pulse.contains("n_lobes")) {
            sc.pulse_lobes = get_count(pulse, "pulse", "n_lobes");
        }
    }
    if (root.contains("analysis")) {
        const json& an = root.at("analysis");
        require_keys(an, "analysis",
                     {"psf_search_radius_m", "ghost_match_radius_m", "ghost_floor_db"},
                     {});
        if (an.contains("psf_search_radius_m")) {
            sc.analysis.psf_search_radius = get_positive(an, "analysis", "psf_search_radius_m");
        }
        if (an.contains("ghost_match_radius_m")) {
            sc.analysis.ghost_match_radius =
                get_positive(an, "analysis", "ghost_match_radius_m");
        }
        if (an.contains("ghost_floor_db")) {
            sc.analysis.ghost_floor_db = get_number(an, "analysis", "ghost_floor_db");
        }
    }

    try {
        sc.radar.validate();
        sc.targets.validate();
        Waveform pulse = sc.make_waveform();
        if (sc.radar.carrier != pulse.carrier()) {
            throw std::invalid_argument("waveform carrier mismatch");
        }
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(std::string("schema: ") + e.what());
    }

    sc.digest = fnv1a_hex(root.dump());
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open scenario file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario(buf.str());
}

}  // namespace nrems
