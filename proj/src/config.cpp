#include "icsrs/config.hpp"

#include "icsrs/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace icsrs {

std::string to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::Length: return "length";
        case SweepVariable::Coupling: return "h_ij";
        case SweepVariable::AlphaC: return "alpha_c";
        case SweepVariable::AlphaQ: return "alpha_q";
        case SweepVariable::LaunchPower: return "launch_power";
    }
    return "?";
}

std::vector<double> SweepSpec::grid() const {
    if (points < 2) throw std::domain_error("sweep needs at least two points");
    if (!(lo < hi)) throw std::domain_error("sweep requires lo < hi");
    if (log_spacing && !(lo > 0.0))
        throw std::domain_error("logarithmic spacing requires lo > 0");
    std::vector<double> xs(static_cast<std::size_t>(points));
    if (log_spacing) {
        const double la = std::log(lo);
        const double lb = std::log(hi);
        for (int i = 0; i < points; ++i)
            xs[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (points - 1));
    } else {
        for (int i = 0; i < points; ++i)
            xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    }
    xs.front() = lo;  // endpoints exact regardless of rounding
    xs.back() = hi;
    return xs;
}

namespace {

struct Entry {
    std::string value;
    int line;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size() && std::isfinite(out);
}

bool parse_int(const std::string& s, int& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size()) return false;
    out = static_cast<int>(v);
    return static_cast<long>(out) == v;
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

using Report = std::function<void(int, const std::string&)>;

// One parsed section: scalar keys occur once, 'channel' may repeat.
class Section {
public:
    void add(const std::string& key, Entry entry) { entries_[key].push_back(std::move(entry)); }

    const Entry* take(const std::string& key, const Report& err) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return nullptr;
        taken_.insert(key);
        if (it->second.size() > 1)
            err(it->second[1].line, "duplicate key '" + key + "'");
        return &it->second.front();
    }

    std::vector<Entry> take_all(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return {};
        taken_.insert(key);
        return it->second;
    }

    void report_unknown(const std::string& section_name, bool strict, const Report& err,
                        const Report& warn) const {
        for (const auto& [key, occurrences] : entries_) {
            if (taken_.count(key)) continue;
            const std::string msg = "unknown key '" + key + "' in [" + section_name + "]";
            for (const auto& e : occurrences) (strict ? err : warn)(e.line, msg);
        }
    }

private:
    std::map<std::string, std::vector<Entry>> entries_;
    std::set<std::string> taken_;
};

} // namespace

LoadResult load_config(std::istream& in, const std::string& name, bool strict) {
    LoadResult result;
    auto at = [&name](int line) {
        return line > 0 ? name + ":" + std::to_string(line) + ": " : name + ": ";
    };
    Report err = [&](int line, const std::string& msg) {
        result.errors.push_back(at(line) + msg);
    };
    Report warn = [&](int line, const std::string& msg) {
        result.warnings.push_back(at(line) + msg);
    };

    std::map<std::string, Section> sections;
    const std::set<std::string> known_sections = {"link", "receiver", "plan", "sweep"};

    std::string raw;
    int line_no = 0;
    std::string current;
    bool current_known = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                err(line_no, "malformed section header '" + line + "'");
                current.clear();
                current_known = false;
                continue;
            }
            current = trim(line.substr(1, line.size() - 2));
            current_known = known_sections.count(current) > 0;
            if (!current_known)
                (strict ? err : warn)(line_no, "unknown section [" + current + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            err(line_no, "expected 'key = value', got '" + line + "'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            err(line_no, "empty key");
            continue;
        }
        if (current.empty()) {
            err(line_no, "key '" + key + "' outside any section");
            continue;
        }
        if (!current_known) continue;  // section already reported
        sections[current].add(key, Entry{value, line_no});
    }

    ScenarioConfig cfg;

    auto take_double = [&](Section& sec, const std::string& key,
                           const std::string& where) -> std::optional<std::pair<double, int>> {
        const Entry* e = sec.take(key, err);
        if (!e) return std::nullopt;
        double v = 0.0;
        if (!parse_double(e->value, v)) {
            err(e->line, where + "." + key + ": not a number: '" + e->value + "'");
            return std::nullopt;
        }
        return std::make_pair(v, e->line);
    };

    // ---- [link] ----
    {
        Section& sec = sections["link"];
        auto length = take_double(sec, "length_km", "link");
        auto ac_db = take_double(sec, "alpha_c_db_per_km", "link");
        auto ac_lin = take_double(sec, "alpha_c_per_km", "link");
        auto aq_db = take_double(sec, "alpha_q_db_per_km", "link");
        auto aq_lin = take_double(sec, "alpha_q_per_km", "link");
        auto h_m = take_double(sec, "h_per_m", "link");

        auto pick_alpha = [&](const char* base, std::optional<std::pair<double, int>> db,
                              std::optional<std::pair<double, int>> lin)
            -> std::optional<AttenuationCoeff> {
            if (db && lin) {
                err(lin->second, std::string("link: give exactly one of ") + base +
                                     "_db_per_km / " + base + "_per_km");
                return std::nullopt;
            }
            if (!db && !lin) {
                err(0, std::string("link: missing ") + base + "_db_per_km or " + base +
                           "_per_km");
                return std::nullopt;
            }
            try {
                return db ? AttenuationCoeff::from_db_per_km(db->first)
                          : AttenuationCoeff(lin->first);
            } catch (const std::exception& e) {
                err(db ? db->second : lin->second, std::string("link: ") + e.what());
                return std::nullopt;
            }
        };

        auto alpha_c = pick_alpha("alpha_c", ac_db, ac_lin);
        auto alpha_q = pick_alpha("alpha_q", aq_db, aq_lin);
        if (!length) err(0, "link: missing length_km");
        if (!h_m) err(0, "link: missing h_per_m");

        if (length && alpha_c && alpha_q && h_m) {
            try {
                cfg.link = FiberLink(length->first, *alpha_c, *alpha_q,
                                     CouplingCoeff::from_per_m(h_m->first));
            } catch (const std::exception& e) {
                err(length->second, std::string("link: ") + e.what());
            }
        }
        sec.report_unknown("link", strict, err, warn);
    }

    // ---- [receiver] ----
    {
        Section& sec = sections["receiver"];
        auto set = [&](const std::string& key, double& target, double scale = 1.0) {
            if (auto v = take_double(sec, key, "receiver")) target = v->first * scale;
        };
        set("det_efficiency", cfg.receiver.det_efficiency);
        set("dark_count_prob", cfg.receiver.dark_count_prob);
        set("gate_width_ns", cfg.receiver.gate_width_s, 1e-9);
        set("rx_bandwidth_ghz", cfg.receiver.rx_bandwidth_ghz);
        set("mean_photon_number", cfg.receiver.mean_photon_number);
        set("misalignment_error", cfg.receiver.misalignment_error);
        set("error_correction_efficiency", cfg.receiver.error_correction_eff);
        set("protocol_factor", cfg.receiver.protocol_factor);
        try {
            cfg.receiver.validate();
        } catch (const std::exception& e) {
            err(0, e.what());
        }
        sec.report_unknown("receiver", strict, err, warn);
    }

    // ---- [plan] ----
    {
        Section& sec = sections["plan"];
        auto wl_nm = take_double(sec, "quantum_wavelength_nm", "plan");
        auto f_thz = take_double(sec, "quantum_frequency_thz", "plan");
        if (wl_nm && f_thz)
            err(f_thz->second,
                "plan: give exactly one of quantum_wavelength_nm / quantum_frequency_thz");
        try {
            if (f_thz && !wl_nm)
                cfg.plan.quantum_wavelength = Wavelength::from_thz(f_thz->first);
            else if (wl_nm)
                cfg.plan.quantum_wavelength = Wavelength(wl_nm->first);
        } catch (const std::exception& e) {
            err(wl_nm ? wl_nm->second : f_thz->second, std::string("plan: ") + e.what());
        }

        if (const Entry* e = sec.take("profile", err)) cfg.profile_name = e->value;

        if (const Entry* e = sec.take("grid", err)) {
            // grid = <spacing_ghz> <num_below> <num_above> <power_dbm> <co|counter>
            const auto tok = split_tokens(e->value);
            double spacing = 0.0, dbm = 0.0;
            int below = 0, above = 0;
            if (tok.size() != 5 || !parse_double(tok[0], spacing) ||
                !parse_int(tok[1], below) || !parse_int(tok[2], above) ||
                !parse_double(tok[3], dbm) || (tok[4] != "co" && tok[4] != "counter")) {
                err(e->line,
                    "plan.grid: expected '<spacing_ghz> <num_below> <num_above> "
                    "<power_dbm> <co|counter>'");
            } else {
                try {
                    ChannelPlan grid = dwdm_grid_plan(
                        cfg.plan.quantum_wavelength.thz(), spacing, below, above,
                        Power::from_dbm(dbm),
                        tok[4] == "co" ? Direction::Co : Direction::Counter);
                    cfg.plan.channels = std::move(grid.channels);
                } catch (const std::exception& ex) {
                    err(e->line, std::string("plan.grid: ") + ex.what());
                }
            }
        }

        for (const Entry& e : sec.take_all("channel")) {
            // channel = <wavelength_nm> <power_dbm> <co|counter> [alpha_c_db_per_km]
            const auto tok = split_tokens(e.value);
            double wl = 0.0, dbm = 0.0, alpha_db = 0.0;
            const bool has_alpha = tok.size() == 4;
            if ((tok.size() != 3 && tok.size() != 4) || !parse_double(tok[0], wl) ||
                !parse_double(tok[1], dbm) || (tok[2] != "co" && tok[2] != "counter") ||
                (has_alpha && !parse_double(tok[3], alpha_db))) {
                err(e.line,
                    "plan.channel: expected '<wavelength_nm> <power_dbm> <co|counter> "
                    "[alpha_c_db_per_km]'");
                continue;
            }
            try {
                ClassicalChannel ch;
                ch.wavelength = Wavelength(wl);
                ch.launch_power = Power::from_dbm(dbm);
                ch.direction = tok[2] == "co" ? Direction::Co : Direction::Counter;
                if (has_alpha) ch.alpha_c = AttenuationCoeff::from_db_per_km(alpha_db);
                cfg.plan.channels.push_back(ch);
            } catch (const std::exception& ex) {
                err(e.line, std::string("plan.channel: ") + ex.what());
            }
        }
        sec.report_unknown("plan", strict, err, warn);
    }

    // ---- [sweep] ----
    {
        Section& sec = sections["sweep"];
        const Entry* var = sec.take("variable", err);
        if (!var) {
            err(0, "sweep: missing variable");
        } else {
            const std::map<std::string, SweepVariable> names = {
                {"length", SweepVariable::Length},
                {"h_ij", SweepVariable::Coupling},
                {"alpha_c", SweepVariable::AlphaC},
                {"alpha_q", SweepVariable::AlphaQ},
                {"launch_power", SweepVariable::LaunchPower}};
            auto it = names.find(var->value);
            if (it == names.end())
                err(var->line, "sweep.variable: unknown variable '" + var->value +
                                   "' (length, h_ij, alpha_c, alpha_q, launch_power)");
            else
                cfg.sweep.variable = it->second;
        }

        auto lo = take_double(sec, "lo", "sweep");
        auto hi = take_double(sec, "hi", "sweep");
        if (lo) cfg.sweep.lo = lo->first;
        else err(0, "sweep: missing lo");
        if (hi) cfg.sweep.hi = hi->first;
        else err(0, "sweep: missing hi");

        if (const Entry* e = sec.take("points", err)) {
            int n = 0;
            if (!parse_int(e->value, n))
                err(e->line, "sweep.points: not an integer: '" + e->value + "'");
            else if (n < 2)
                err(e->line, "sweep.points: need at least 2, got " + std::to_string(n));
            else
                cfg.sweep.points = n;
        } else {
            err(0, "sweep: missing points");
        }

        if (const Entry* e = sec.take("spacing", err)) {
            if (e->value == "linear")
                cfg.sweep.log_spacing = false;
            else if (e->value == "log")
                cfg.sweep.log_spacing = true;
            else
                err(e->line, "sweep.spacing: expected 'linear' or 'log', got '" + e->value +
                                 "'");
        }

        if (lo && hi) {
            if (!(cfg.sweep.lo < cfg.sweep.hi))
                err(hi->second, "sweep: lo must be below hi");
            if (cfg.sweep.log_spacing && !(cfg.sweep.lo > 0.0))
                err(lo->second, "sweep: logarithmic spacing requires lo > 0");
            if (cfg.sweep.variable == SweepVariable::Length && !(cfg.sweep.lo > 0.0))
                err(lo->second, "sweep: length sweep requires lo > 0");
            if (cfg.sweep.lo < 0.0) err(lo->second, "sweep: lo must be nonnegative");
        }
        sec.report_unknown("sweep", strict, err, warn);
    }

    // ---- cross-field checks ----
    for (std::size_t i = 0; i < cfg.plan.channels.size(); ++i) {
        const double wl = cfg.plan.channels[i].wavelength.nm;
        if (wl == cfg.plan.quantum_wavelength.nm)
            err(0, "plan: channel " + std::to_string(i) +
                       " collides with the quantum wavelength");
        for (std::size_t j = i + 1; j < cfg.plan.channels.size(); ++j)
            if (cfg.plan.channels[j].wavelength.nm == wl)
                err(0, "plan: duplicate classical wavelength between channels " +
                           std::to_string(i) + " and " + std::to_string(j));
    }
    try {
        const RamanProfile profile = resolve_profile(cfg.profile_name);
        for (std::size_t i = 0; i < cfg.plan.channels.size(); ++i) {
            const double detuning =
                cfg.plan.quantum_wavelength.nm - cfg.plan.channels[i].wavelength.nm;
            if (detuning < profile.min_detuning_nm() || detuning > profile.max_detuning_nm())
                err(0, "plan: channel " + std::to_string(i) + " detuning " +
                           std::to_string(detuning) + " nm outside profile '" +
                           cfg.profile_name + "' span");
        }
    } catch (const std::exception& e) {
        err(0, std::string("plan.profile: ") + e.what());
    }
    if (cfg.plan.channels.empty())
        warn(0, "plan has no classical channels; noise columns will be zero");

    cfg.receiver.wavelength = cfg.plan.quantum_wavelength;

    if (result.errors.empty()) result.config = std::move(cfg);
    return result;
}

LoadResult load_config_string(const std::string& text, const std::string& name,
                              bool strict) {
    std::istringstream in(text);
    return load_config(in, name, strict);
}

LoadResult load_config_file(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) {
        LoadResult result;
        result.errors.push_back(path + ": cannot open config file");
        return result;
    }
    return load_config(in, path, strict);
}

RamanProfile resolve_profile(const std::string& name) {
    for (const auto& builtin : builtin_profile_names())
        if (name == builtin) return builtin_profile(name);
    return load_profile_file(name);
}

} // namespace icsrs
