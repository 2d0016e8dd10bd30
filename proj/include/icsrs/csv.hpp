#pragma once

#include "icsrs/sweep.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace icsrs {

/// '#'-prefixed metadata lines placed above the header row. Keep these
/// deterministic (no timestamps): byte-identical inputs must give
/// byte-identical files.
struct CsvMetadata {
    std::vector<std::string> lines;
};

/// Column layout: <variable>_<unit>, then mW/nm and dBm/nm pairs for the four
/// noise totals, then icsrs_click_prob, skr_per_gate, qber. Values are
/// written with 12 significant digits ("%.11e").
void write_csv(std::ostream& out, const SweepResult& result,
               const CsvMetadata& meta = {});

/// Writes to <path>.tmp then renames, so readers never observe a torn file.
void write_csv_file(const std::string& path, const SweepResult& result,
                    const CsvMetadata& meta = {});

std::string csv_header(SweepVariable variable);

} // namespace icsrs
