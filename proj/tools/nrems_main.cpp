// Command-line front end: scenario ingestion, pipeline orchestration and
// artifact export.
//
// Subcommands:
//   design    phase-mask CSV for the configured skin
//   simulate  raw echo matrix (EMSRAW1 binary)
//   image     focused image (CSV + 16-bit PGM)
//   snrmap    post-imaging SNR map (CSV)
//   analyze   PSF and ghost reports (JSON)
//
// Exit codes: 0 success, 2 scenario/schema violation, 3 infeasible geometry,
// 4 I/O failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "nrems/analysis.hpp"
#include "nrems/imaging.hpp"
#include "nrems/io.hpp"
#include "nrems/scenario.hpp"
#include "nrems/synth.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct CliOptions {
    std::string scenario_path;
    std::string out_dir = ".";
    std::string raw_path;  // optional pre-simulated input for image/analyze
    std::string model_override;
    uint64_t seed = 0;
    bool seed_given = false;
    int threads = 0;
};

std::filesystem::path out_path(const CliOptions& cli, const std::string& name) {
    return std::filesystem::path(cli.out_dir) / name;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw nrems::IoError("cannot open for writing: " + path.string());
    }
    out << text;
    if (!out) {
        throw nrems::IoError("failed writing " + path.string());
    }
}

void write_sidecar(const CliOptions& cli, const nrems::Scenario& sc,
                   const std::string& artifact, const std::string& command) {
    nlohmann::ordered_json meta;
    meta["artifact"] = artifact;
    meta["command"] = command;
    meta["scenario_digest"] = sc.digest;
    meta["radar_digest"] = nrems::radar_config_digest(sc.radar);
    meta["seed"] = sc.noise.seed;
    meta["model"] = sc.model;
    meta["version"] = kVersion;
    write_text_file(out_path(cli, artifact + ".meta.json"), meta.dump(2) + "\n");
}

nrems::Scenario load(const CliOptions& cli) {
    nrems::Scenario sc = nrems::load_scenario_file(cli.scenario_path);
    if (cli.seed_given) {
        sc.noise.seed = cli.seed;
    }
    if (!cli.model_override.empty()) {
        if (cli.model_override != "narrowbeam" && cli.model_override != "general") {
            throw nrems::ScenarioError("schema: --model must be narrowbeam or general");
        }
        sc.model = cli.model_override;
    }
    sc.synthesis.threads = cli.threads;
    return sc;
}

nrems::RxDataMatrix simulate(const nrems::Scenario& sc) {
    const nrems::Waveform pulse = sc.make_waveform();
    if (sc.model == "general") {
        return nrems::synthesize_general(sc.radar, sc.ems, sc.targets, pulse,
                                         sc.noise, sc.synthesis);
    }
    return nrems::synthesize_narrowbeam(sc.radar, sc.ems, sc.targets, pulse,
                                        sc.noise, sc.synthesis);
}

nrems::RxDataMatrix obtain_raw(const CliOptions& cli, const nrems::Scenario& sc) {
    if (!cli.raw_path.empty()) {
        return nrems::read_raw_file(cli.raw_path);
    }
    return simulate(sc);
}

int run_design(const CliOptions& cli, const nrems::Scenario& sc) {
    std::ofstream out(out_path(cli, "phase_mask.csv"), std::ios::binary);
    if (!out) {
        throw nrems::IoError("cannot open phase_mask.csv for writing");
    }
    nrems::write_phase_mask_csv(out, sc.ems);
    write_sidecar(cli, sc, "phase_mask.csv", "design");
    return 0;
}

int run_simulate(const CliOptions& cli, const nrems::Scenario& sc) {
    const nrems::RxDataMatrix data = simulate(sc);
    nrems::write_raw_file(out_path(cli, "raw.bin").string(), data);
    write_sidecar(cli, sc, "raw.bin", "simulate");
    return 0;
}

int run_image(const CliOptions& cli, const nrems::Scenario& sc) {
    const nrems::RxDataMatrix data = obtain_raw(cli, sc);
    const nrems::ImageGrid image =
        nrems::backproject(data, sc.radar, sc.ems, sc.grid, sc.synthesis.threads);
    const std::vector<double> db = nrems::to_db_normalized(image);
    {
        std::ofstream out(out_path(cli, "image.csv"), std::ios::binary);
        if (!out) {
            throw nrems::IoError("cannot open image.csv for writing");
        }
        nrems::write_image_csv(out, image.spec, db);
    }
    {
        std::ofstream out(out_path(cli, "image.pgm"), std::ios::binary);
        if (!out) {
            throw nrems::IoError("cannot open image.pgm for writing");
        }
        nrems::write_image_pgm(out, image.spec, db);
    }
    write_sidecar(cli, sc, "image.csv", "image");
    write_sidecar(cli, sc, "image.pgm", "image");
    return 0;
}

int run_snrmap(const CliOptions& cli, const nrems::Scenario& sc) {
    nrems::SnrMapOptions options;
    options.synth = sc.synthesis;
    options.synth.threads = 1;
    options.narrowbeam = sc.model != "general";
    options.threads = sc.synthesis.threads;
    const nrems::Waveform pulse = sc.make_waveform();
    const nrems::SnrMap map =
        nrems::snr_map(sc.radar, sc.ems, sc.grid, 0.1, sc.noise, pulse, options);
    std::ofstream out(out_path(cli, "snr_map.csv"), std::ios::binary);
    if (!out) {
        throw nrems::IoError("cannot open snr_map.csv for writing");
    }
    nrems::write_snr_csv(out, map);
    write_sidecar(cli, sc, "snr_map.csv", "snrmap");
    return 0;
}

int run_analyze(const CliOptions& cli, const nrems::Scenario& sc) {
    const nrems::RxDataMatrix data = obtain_raw(cli, sc);
    const nrems::ImageGrid image =
        nrems::backproject(data, sc.radar, sc.ems, sc.grid, sc.synthesis.threads);

    nlohmann::ordered_json report;
    report["psf"] = nlohmann::ordered_json::array();
    for (const nrems::Target& target : sc.targets.targets) {
        nlohmann::ordered_json entry;
        entry["target"] = {target.position.x, target.position.y};
        try {
            const nrems::PsfReport psf = nrems::psf_metrics(
                image, target.position, sc.analysis.psf_search_radius);
            entry["report"] = nlohmann::ordered_json::parse(nrems::psf_report_json(psf));
        } catch (const std::runtime_error& e) {
            entry["error"] = e.what();
        }
        report["psf"].push_back(entry);
    }
    const auto ghosts = nrems::ghost_report(image, sc.targets,
                                            sc.analysis.ghost_match_radius,
                                            sc.analysis.ghost_floor_db);
    report["ghosts"] = nlohmann::ordered_json::parse(nrems::ghost_report_json(ghosts));
    report["ghost_floor_db"] = sc.analysis.ghost_floor_db;
    report["ghost_match_radius_m"] = sc.analysis.ghost_match_radius;
    write_text_file(out_path(cli, "analysis.json"), report.dump(2) + "\n");
    write_sidecar(cli, sc, "analysis.json", "analyze");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NLOS radar imaging with modular electromagnetic skins"};
    app.set_version_flag("--version", kVersion);
    app.fallthrough(true);  // global options may follow the subcommand
    CliOptions cli;
    app.add_option("--scenario", cli.scenario_path, "Scenario JSON file")->required();
    app.add_option("--out", cli.out_dir, "Output directory");
    app.add_option("--seed", cli.seed, "Noise seed override")
        ->each([&](const std::string&) { cli.seed_given = true; });
    app.add_option("--threads", cli.threads, "Worker thread count");
    app.add_option("--model", cli.model_override, "Forward model: narrowbeam|general");
    app.add_option("--raw", cli.raw_path, "Existing raw file (image/analyze inputs)");

    bool do_design = false, do_simulate = false, do_image = false;
    bool do_snrmap = false, do_analyze = false;
    app.add_subcommand("design", "Emit the phase-mask CSV")
        ->callback([&] { do_design = true; });
    app.add_subcommand("simulate", "Emit the raw echo matrix")
        ->callback([&] { do_simulate = true; });
    app.add_subcommand("image", "Emit the focused image (CSV + PGM)")
        ->callback([&] { do_image = true; });
    app.add_subcommand("snrmap", "Emit the SNR map CSV")
        ->callback([&] { do_snrmap = true; });
    app.add_subcommand("analyze", "Emit PSF and ghost JSON reports")
        ->callback([&] { do_analyze = true; });
    app.require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    if (cli.threads <= 0) {
        cli.threads = static_cast<int>(std::thread::hardware_concurrency());
        if (cli.threads <= 0) {
            cli.threads = 1;
        }
    }

    try {
        const nrems::Scenario sc = load(cli);
        std::filesystem::create_directories(cli.out_dir);
        if (do_design) {
            return run_design(cli, sc);
        }
        if (do_simulate) {
            return run_simulate(cli, sc);
        }
        if (do_image) {
            return run_image(cli, sc);
        }
        if (do_snrmap) {
            return run_snrmap(cli, sc);
        }
        if (do_analyze) {
            return run_analyze(cli, sc);
        }
        std::cerr << "error: schema: no subcommand selected\n";
        return 2;
    } catch (const nrems::ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nrems::GeometryError& e) {
        std::cerr << "error: geometry: " << e.what() << "\n";
        return 3;
    } catch (const nrems::IoError& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return 4;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
