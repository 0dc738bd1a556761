#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nrems/analysis.hpp"
#include "nrems/ems.hpp"
#include "nrems/imaging.hpp"
#include "nrems/synth.hpp"

namespace nrems {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form of a double; identical input bits yield
/// identical text, which keeps every exported artifact byte-reproducible.
std::string format_double(double value);

/// Raw-data container format:
///   magic "EMSRAW1\0" (8 bytes)
///   u64 little-endian n_fast, n_slow
///   f64 little-endian t0, dt, tau0, dtau
///   n_fast*n_slow complex samples, interleaved little-endian f64 (re, im),
///   fast index contiguous.
void write_raw(std::ostream& out, const RxDataMatrix& matrix);
void write_raw_file(const std::string& path, const RxDataMatrix& matrix);
RxDataMatrix read_raw(std::istream& in);
RxDataMatrix read_raw_file(const std::string& path);

/// CSV with columns element_index,x_meters,phase_radians,module_id,cluster_id.
void write_phase_mask_csv(std::ostream& out, const EmsLayout& layout);

/// CSV with columns x,y,magnitude_db; one row per pixel, x-major.
void write_image_csv(std::ostream& out, const GridSpec& grid,
                     const std::vector<double>& db);

/// 16-bit binary PGM (P5), rows from max y to min y, mapping
/// [-80 dB, 0 dB] -> [0, 65535] linearly.
void write_image_pgm(std::ostream& out, const GridSpec& grid,
                     const std::vector<double>& db);

/// CSV with columns x,y,snr_db.
void write_snr_csv(std::ostream& out, const SnrMap& map);

std::string psf_report_json(const PsfReport& report);
std::string ghost_report_json(const std::vector<GhostPeak>& ghosts);

/// FNV-1a digest of a byte string, as 16 hex characters.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace nrems
