#pragma once

// File formats for run records.
//
// CSV  header `t,label,axis0,...,axis{d-1},logmag`, one row per (snapshot,
//      point) holding the unit-normalized coordinates; LF endings; numbers
//      in 17-significant-digit %g form.
// JSON one document, keys in fixed order, "schema_version": "1"; see
//      docs/run_record_schema.md.
// SVG  standalone 1.1 scatter plot of one snapshot.

#include <cstdint>
#include <filesystem>
#include <string>

#include "cyclic/harness.hpp"

namespace cyclic {

/// %.17g rendering used by every exporter; round-trips any finite double.
std::string format_number(double value);

std::string csv_string(const RunRecord& record);
void export_csv(const RunRecord& record, const std::filesystem::path& path);

std::string json_string(const RunRecord& record);
void export_json(const RunRecord& record, const std::filesystem::path& path);
RunRecord parse_json(const std::string& text);
RunRecord import_json(const std::filesystem::path& path);

/// Even labels and odd labels are drawn in different colours, each parity
/// class joined by a closed polyline in label order (a single polyline over
/// all labels for odd n), with the predicted ellipse overlaid for odd n in
/// two dimensions. Coordinates are the stored unit cloud times (-1)^t so
/// consecutive snapshots do not flip. d = 3 and above are projected onto
/// the first two axes. Throws no_such_snapshot if t was not recorded.
std::string svg_string(const RunRecord& record, std::uint64_t t);
void emit_svg(const RunRecord& record, std::uint64_t t, const std::filesystem::path& path);

} // namespace cyclic
