#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "nrems/analysis.hpp"
#include "nrems/ems.hpp"
#include "nrems/imaging.hpp"
#include "nrems/synth.hpp"
#include "nrems/waveform.hpp"

namespace nrems {

/// Raised on any scenario schema or value violation.
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AnalysisOptions {
    double psf_search_radius = 2.0;  // m
    double ghost_match_radius = 1.0; // m
    double ghost_floor_db = -10.0;
};

/// A fully validated simulation setup. All module-level preconditions are
/// checked at load time; unknown JSON keys are rejected.
struct Scenario {
    RadarConfig radar;
    EmsLayout ems;
    TargetSet targets;
    NoiseModel noise;
    GridSpec grid;
    SynthesisOptions synthesis;
    AnalysisOptions analysis;
    std::string model = "narrowbeam";  // "narrowbeam" | "general"
    int pulse_oversample = 8;
    int pulse_lobes = 16;
    std::string digest;  // of the canonical scenario text

    Waveform make_waveform() const {
        return Waveform::make_pulse(radar.carrier, radar.bandwidth, pulse_oversample,
                                    pulse_lobes);
    }
};

Scenario load_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

}  // namespace nrems
