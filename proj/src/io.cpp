#include "nrems/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>

#include <json.hpp>

namespace nrems {

static_assert(std::endian::native == std::endian::little,
              "raw-data serialization assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'E', 'M', 'S', 'R', 'A', 'W', '1', '\0'};

void put_u64(std::ostream& out, uint64_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_f64(std::ostream& out, double v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

uint64_t get_u64(std::istream& in) {
    uint64_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

double get_f64(std::istream& in) {
    double v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

void write_raw(std::ostream& out, const RxDataMatrix& matrix) {
    out.write(kMagic, sizeof kMagic);
    put_u64(out, static_cast<uint64_t>(matrix.n_fast));
    put_u64(out, static_cast<uint64_t>(matrix.n_slow));
    put_f64(out, matrix.t0);
    put_f64(out, matrix.dt);
    put_f64(out, matrix.tau0);
    put_f64(out, matrix.dtau);
    for (const auto& sample : matrix.data) {
        put_f64(out, sample.real());
        put_f64(out, sample.imag());
    }
    if (!out) {
        throw IoError("failed writing raw data stream");
    }
}

void write_raw_file(const std::string& path, const RxDataMatrix& matrix) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    write_raw(out, matrix);
}

RxDataMatrix read_raw(std::istream& in) {
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0) {
        throw IoError("not an EMSRAW1 stream");
    }
    RxDataMatrix m;
    const uint64_t n_fast = get_u64(in);
    const uint64_t n_slow = get_u64(in);
    if (n_fast == 0 || n_slow == 0 || n_fast * n_slow > (1ULL << 32)) {
        throw IoError("raw header has implausible dimensions");
    }
    m.n_fast = static_cast<int>(n_fast);
    m.n_slow = static_cast<int>(n_slow);
    m.t0 = get_f64(in);
    m.dt = get_f64(in);
    m.tau0 = get_f64(in);
    m.dtau = get_f64(in);
    m.data.resize(n_fast * n_slow);
    for (auto& sample : m.data) {
        const double re = get_f64(in);
        const double im = get_f64(in);
        sample = {re, im};
    }
    if (!in) {
        throw IoError("raw stream truncated");
    }
    return m;
}

RxDataMatrix read_raw_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    return read_raw(in);
}

void write_phase_mask_csv(std::ostream& out, const EmsLayout& layout) {
    out << "element_index,x_meters,phase_radians,module_id,cluster_id\n";
    for (int i = 0; i < layout.size(); ++i) {
        out << layout.signed_index(i) << ',' << format_double(layout.element_x[i])
            << ',' << format_double(layout.phases[i]) << ',' << layout.module_of(i)
            << ',' << layout.cluster_of(i) << '\n';
    }
    if (!out) {
        throw IoError("failed writing phase mask CSV");
    }
}

void write_image_csv(std::ostream& out, const GridSpec& grid,
                     const std::vector<double>& db) {
    out << "x,y,magnitude_db\n";
    for (int ix = 0; ix < grid.nx; ++ix) {
        for (int iy = 0; iy < grid.ny; ++iy) {
            const Point2 p = grid.pixel(ix, iy);
            out << format_double(p.x) << ',' << format_double(p.y) << ','
                << format_double(db[static_cast<size_t>(ix) * grid.ny + iy]) << '\n';
        }
    }
    if (!out) {
        throw IoError("failed writing image CSV");
    }
}

void write_image_pgm(std::ostream& out, const GridSpec& grid,
                     const std::vector<double>& db) {
    out << "P5\n" << grid.nx << ' ' << grid.ny << "\n65535\n";
    for (int iy = grid.ny - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double v = db[static_cast<size_t>(ix) * grid.ny + iy];
            const double scaled = (std::clamp(v, -80.0, 0.0) + 80.0) / 80.0 * 65535.0;
            const auto word = static_cast<uint16_t>(std::lround(scaled));
            // Netpbm stores the most significant byte first.
            out.put(static_cast<char>(word >> 8));
            out.put(static_cast<char>(word & 0xff));
        }
    }
    if (!out) {
        throw IoError("failed writing PGM image");
    }
}

void write_snr_csv(std::ostream& out, const SnrMap& map) {
    out << "x,y,snr_db\n";
    for (int ix = 0; ix < map.spec.nx; ++ix) {
        for (int iy = 0; iy < map.spec.ny; ++iy) {
            const Point2 p = map.spec.pixel(ix, iy);
            out << format_double(p.x) << ',' << format_double(p.y) << ','
                << format_double(map.snr_db[static_cast<size_t>(ix) * map.spec.ny + iy])
                << '\n';
        }
    }
    if (!out) {
        throw IoError("failed writing SNR CSV");
    }
}

std::string psf_report_json(const PsfReport& report) {
    nlohmann::ordered_json j;
    j["peak_position"] = {report.peak_position.x, report.peak_position.y};
    // Widths are +infinity when the cut never drops 3 dB; JSON carries null.
    j["delta_x_m"] = std::isfinite(report.delta_x)
                         ? nlohmann::ordered_json(report.delta_x)
                         : nlohmann::ordered_json(nullptr);
    j["delta_y_m"] = std::isfinite(report.delta_y)
                         ? nlohmann::ordered_json(report.delta_y)
                         : nlohmann::ordered_json(nullptr);
    j["peak_snr_db"] = report.peak_snr_db;
    if (report.highest_sidelobe_db) {
        j["highest_sidelobe_db"] = *report.highest_sidelobe_db;
    } else {
        j["highest_sidelobe_db"] = nullptr;
    }
    return j.dump(2);
}

std::string ghost_report_json(const std::vector<GhostPeak>& ghosts) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const GhostPeak& g : ghosts) {
        j.push_back({{"position", {g.position.x, g.position.y}},
                     {"level_db", g.level_db}});
    }
    return j.dump(2);
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace nrems
