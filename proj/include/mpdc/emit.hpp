#ifndef MPDC_EMIT_HPP
#define MPDC_EMIT_HPP

#include <iosfwd>
#include <string>

#include "mpdc/analysis.hpp"

namespace mpdc {

enum class EmitFormat { Csv, Json, Svg };

EmitFormat emit_format_from_string(const std::string& s);

// Shortest decimal form that parses back to the identical double
// (locale-independent).
std::string format_double(double v);

// Header row of column names, then one row per grid point.  Values round-trip
// exactly through parse_csv.
void emit_csv(const ScanResult& scan, std::ostream& out);

// Inverse of emit_csv (numbers only, no metadata).
ScanResult parse_csv(std::istream& in);

// Same columns and values as the CSV plus the metadata block.
void emit_json(const ScanResult& scan, std::ostream& out);

// Deterministic standalone plot: fixed 800x600 canvas, linear axes, at most
// 12 ticks per axis, one polyline per ordinate column.  Byte-identical output
// for identical input.
void emit_svg(const ScanResult& scan, std::ostream& out);

// Writes to the path ("-" = stdout); throws IoError on failure.
void write_scan(const ScanResult& scan, const std::string& path, EmitFormat format);

} // namespace mpdc

#endif
