#include "icsrs/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ios>
#include <ostream>
#include <string>

namespace icsrs {

namespace {

const char* abscissa_column(SweepVariable v) {
    switch (v) {
        case SweepVariable::Length: return "length_km";
        case SweepVariable::Coupling: return "h_per_m";
        case SweepVariable::AlphaC: return "alpha_c_per_km";
        case SweepVariable::AlphaQ: return "alpha_q_per_km";
        case SweepVariable::LaunchPower: return "launch_power_mw";
    }
    return "x";
}

// Fixed 12-significant-digit scientific formatting keeps output byte-stable.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

double dbm_of(double mw) { return 10.0 * std::log10(mw); }

} // namespace

std::string csv_header(SweepVariable variable) {
    return std::string(abscissa_column(variable)) +
           ",forward_icsrs_mw_per_nm,forward_icsrs_dbm_per_nm"
           ",backward_icsrs_mw_per_nm,backward_icsrs_dbm_per_nm"
           ",forward_srs_mw_per_nm,forward_srs_dbm_per_nm"
           ",backward_srs_mw_per_nm,backward_srs_dbm_per_nm"
           ",icsrs_click_prob,skr_per_gate,qber";
}

void write_csv(std::ostream& out, const SweepResult& result, const CsvMetadata& meta) {
    for (const auto& line : meta.lines) out << "# " << line << "\n";
    out << csv_header(result.variable) << "\n";
    for (const auto& row : result.rows) {
        out << num(row.x) << ',' << num(row.fwd_icsrs_mw_nm) << ','
            << num(dbm_of(row.fwd_icsrs_mw_nm)) << ',' << num(row.bwd_icsrs_mw_nm) << ','
            << num(dbm_of(row.bwd_icsrs_mw_nm)) << ',' << num(row.fwd_srs_mw_nm) << ','
            << num(dbm_of(row.fwd_srs_mw_nm)) << ',' << num(row.bwd_srs_mw_nm) << ','
            << num(dbm_of(row.bwd_srs_mw_nm)) << ',' << num(row.icsrs_click_prob) << ','
            << num(row.skr) << ',' << num(row.qber) << "\n";
    }
}

void write_csv_file(const std::string& path, const SweepResult& result,
                    const CsvMetadata& meta) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::ios_base::failure("cannot open " + tmp + " for writing");
        write_csv(out, result, meta);
        out.flush();
        if (!out) throw std::ios_base::failure("write failed on " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::ios_base::failure("cannot move " + tmp + " into place at " + path);
    }
}

} // namespace icsrs
