// io.cpp: Config parsing, CSV/JSON writers, report rendering

#include "qbm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qbm/errors.hpp"

namespace qbm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ConfigError("config key '" + key + "': not a number: " + text);
    return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("config key '" + key + "': not a non-negative integer: " + text);
    }
    return v;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"model.M", [](RunConfig& c, auto& k, auto& v) { c.model.M = parse_double(k, v); }},
        {"model.Omega", [](RunConfig& c, auto& k, auto& v) { c.model.Omega = parse_double(k, v); }},
        {"model.gamma0_bar", [](RunConfig& c, auto& k, auto& v) { c.model.gamma0_bar = parse_double(k, v); }},
        {"model.hbar", [](RunConfig& c, auto& k, auto& v) { c.model.hbar = parse_double(k, v); }},
        {"model.kB", [](RunConfig& c, auto& k, auto& v) { c.model.kB = parse_double(k, v); }},
        {"env.omega_L", [](RunConfig& c, auto& k, auto& v) { c.env.omega_L = parse_double(k, v); }},
        {"env.omega_U", [](RunConfig& c, auto& k, auto& v) { c.env.omega_U = parse_double(k, v); }},
        {"env.m", [](RunConfig& c, auto& k, auto& v) { c.env.m = parse_double(k, v); }},
        {"env.T", [](RunConfig& c, auto& k, auto& v) { c.env.T = parse_double(k, v); }},
        {"env.n_unobserved", [](RunConfig& c, auto& k, auto& v) { c.env.n_unobserved = parse_uint(k, v); }},
        {"env.n_observed_per_mac",
         [](RunConfig& c, auto& k, auto& v) { c.env.n_observed_per_mac = parse_uint(k, v); }},
        {"env.n_macrofractions", [](RunConfig& c, auto& k, auto& v) { c.env.n_macrofractions = parse_uint(k, v); }},
        {"env.seed", [](RunConfig& c, auto& k, auto& v) { c.env.seed = parse_uint(k, v); }},
        {"run.t_min", [](RunConfig& c, auto& k, auto& v) { c.run.t_min = parse_double(k, v); }},
        {"run.t_max", [](RunConfig& c, auto& k, auto& v) { c.run.t_max = parse_double(k, v); }},
        {"run.t_points", [](RunConfig& c, auto& k, auto& v) { c.run.t_points = parse_uint(k, v); }},
        {"run.t_scale", [](RunConfig& c, auto&, auto& v) { c.run.t_scale = v; }},
        {"run.delta_X", [](RunConfig& c, auto& k, auto& v) { c.run.delta_X = parse_double(k, v); }},
        {"run.epsilon_dec", [](RunConfig& c, auto& k, auto& v) { c.run.epsilon_dec = parse_double(k, v); }},
        {"run.epsilon_ort", [](RunConfig& c, auto& k, auto& v) { c.run.epsilon_ort = parse_double(k, v); }},
        {"run.fock_budget", [](RunConfig& c, auto& k, auto& v) { c.run.fock_budget = parse_double(k, v); }},
    };
    return table;
}

void set_key(RunConfig& config, const std::string& key, const std::string& value) {
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(config, key, value);
    config.present.insert(key);
}

void flatten(const nlohmann::json& j, const std::string& prefix, FlatConfig& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        const auto& v = it.value();
        if (v.is_object()) {
            flatten(v, key, out);
        } else if (v.is_string()) {
            out[key] = v.get<std::string>();
        } else if (v.is_number_unsigned()) {
            out[key] = std::to_string(v.get<std::uint64_t>());
        } else if (v.is_number_integer()) {
            out[key] = std::to_string(v.get<std::int64_t>());
        } else if (v.is_number()) {
            out[key] = format_double(v.get<double>());
        } else if (v.is_boolean()) {
            out[key] = v.get<bool>() ? "true" : "false";
        } else {
            throw ConfigError("config key '" + key + "': unsupported value type");
        }
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json bound_json(const MacBound& b) {
    ordered_json j;
    j["kind"] = std::string(to_string(b.kind));
    j["epsilon"] = b.epsilon;
    j["plateau_min"] = b.plateau_min;
    j["bound_exact"] = b.bound_exact;
    j["bound_fast"] = b.bound_fast;
    return j;
}

ordered_json constraint_json(const TemperatureConstraint& c) {
    ordered_json j;
    j["satisfied"] = c.satisfied;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    return j;
}

// JSON has no infinity; use null.
ordered_json finite_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

}  // namespace

std::vector<double> RunConfig::time_grid() const {
    validate();
    std::vector<double> out(run.t_points);
    if (run.t_points == 1) {
        out[0] = run.t_min;
        return out;
    }
    const double n = static_cast<double>(run.t_points - 1);
    for (std::size_t i = 0; i < run.t_points; ++i) {
        const double f = static_cast<double>(i) / n;
        out[i] = run.t_scale == "log" ? run.t_min * std::pow(run.t_max / run.t_min, f)
                                      : run.t_min + (run.t_max - run.t_min) * f;
    }
    out.back() = run.t_max;
    return out;
}

void RunConfig::validate() const {
    model.validate();
    env.validate();
    if (run.t_points == 0) throw ConfigError("run.t_points must be >= 1");
    if (run.t_scale != "linear" && run.t_scale != "log") throw ConfigError("run.t_scale must be linear or log");
    if (!(run.t_min >= 0.0)) throw ConfigError("run.t_min must be >= 0");
    if (run.t_scale == "log" && !(run.t_min > 0.0)) throw ConfigError("run.t_min must be > 0 for log scale");
    if (run.t_points > 1 && !(run.t_max > run.t_min)) throw ConfigError("run.t_max must exceed run.t_min");
    if (!(run.delta_X >= 0.0)) throw ConfigError("run.delta_X must be >= 0");
    for (auto [name, eps] : {std::pair{"run.epsilon_dec", run.epsilon_dec}, {"run.epsilon_ort", run.epsilon_ort}}) {
        if (!(eps > 0.0 && eps <= 1.0)) throw ConfigError(std::string(name) + " must lie in (0, 1]");
    }
    if (!(run.fock_budget > 0.0 && run.fock_budget < 1.0)) throw ConfigError("run.fock_budget must lie in (0, 1)");
}

void RunConfig::require(const std::vector<std::string>& keys) const {
    for (const auto& k : keys) {
        if (!present.count(k)) throw ConfigError("missing required config key '" + k + "'");
    }
}

FlatConfig parse_json_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON config: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("JSON config must be an object");
    FlatConfig out;
    flatten(j, "", out);
    return out;
}

FlatConfig parse_toml_config(const std::string& text) {
    FlatConfig out;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Strip comments outside of strings.
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line.resize(i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = "TOML line " + std::to_string(lineno);
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw ConfigError(where + ": empty key or value");
        if (value.front() == '"') {
            if (value.size() < 2 || value.back() != '"') throw ConfigError(where + ": unterminated string");
            value = value.substr(1, value.size() - 2);
        } else {
            value.erase(std::remove(value.begin(), value.end(), '_'), value.end());
        }
        out[section.empty() ? key : section + "." + key] = value;
    }
    return out;
}

RunConfig config_from_flat(const FlatConfig& flat) {
    RunConfig config;
    for (const auto& [k, v] : flat) set_key(config, k, v);
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    const std::string ext = path.extension().string();
    if (ext == ".json") return config_from_flat(parse_json_config(text));
    if (ext == ".toml") return config_from_flat(parse_toml_config(text));
    throw ConfigError("config file must end in .json or .toml: " + path.string());
}

void apply_override(RunConfig& config, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError("override must be key=value: " + assignment);
    std::string value = trim(assignment.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    set_key(config, trim(assignment.substr(0, eq)), value);
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, ptr);
}

void CsvWriter::header(const std::vector<std::string>& columns) { row(columns); }

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        const std::string& c = cells[i];
        if (c.find_first_of(",\"\n") != std::string::npos) {
            out_ << '"';
            for (char ch : c) {
                if (ch == '"') out_ << '"';
                out_ << ch;
            }
            out_ << '"';
        } else {
            out_ << c;
        }
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_double(v));
    row(cells);
}

std::string report_to_json(const RegimeReport& r, const RunConfig& config) {
    ordered_json j;
    j["regime"] = std::string(to_string(r.regime));
    j["fast_environment"] = r.fast_environment;
    j["temperature"] = r.temperature;
    j["tau_T"] = finite_or_null(r.tau_T);
    j["delta_X"] = r.delta_X;
    j["epsilon_dec"] = r.epsilon_dec;
    j["epsilon_ort"] = r.epsilon_ort;
    ordered_json env;
    env["omega_L"] = config.env.omega_L;
    env["omega_U"] = config.env.omega_U;
    env["Omega"] = config.model.Omega;
    env["n_unobserved"] = config.env.n_unobserved;
    env["n_observed_per_mac"] = config.env.n_observed_per_mac;
    env["n_macrofractions"] = config.env.n_macrofractions;
    env["seed"] = config.env.seed;
    j["environment"] = env;
    ordered_json ts = ordered_json::array();
    for (const auto& t : r.timescales) {
        ordered_json e;
        e["kind"] = std::string(to_string(t.kind));
        e["c2"] = t.c2;
        e["tau_derived"] = t.tau_derived;
        e["tau_paper"] = t.tau_paper;
        ts.push_back(e);
    }
    j["timescales"] = ts;
    j["bound_dec"] = r.bound_dec ? bound_json(*r.bound_dec) : ordered_json(nullptr);
    j["bound_ort"] = r.bound_ort ? bound_json(*r.bound_ort) : ordered_json(nullptr);
    j["temperature_constraint_unobserved"] =
        r.constraint_unobserved ? constraint_json(*r.constraint_unobserved) : ordered_json(nullptr);
    j["temperature_constraint_observed"] =
        r.constraint_observed ? constraint_json(*r.constraint_observed) : ordered_json(nullptr);
    j["macrofraction_ratio"] = r.macrofraction_ratio ? ordered_json(*r.macrofraction_ratio) : ordered_json(nullptr);
    ordered_json m;
    m["window_start"] = r.window_start;
    m["window_end"] = r.window_end;
    m["avg_gamma"] = r.avg_gamma;
    m["avg_overlap"] = r.avg_overlap;
    j["measured"] = m;
    j["sbs_verdict"] = r.pass ? "PASS" : "FAIL";
    return j.dump(2) + "\n";
}

std::string report_to_table(const RegimeReport& r) {
    std::ostringstream out;
    auto line = [&](const std::string& k, const std::string& v) {
        out << std::left << std::setw(34) << k << v << '\n';
    };
    line("regime", std::string(to_string(r.regime)) + (r.fast_environment ? " (fast environment)" : ""));
    line("temperature", format_double(r.temperature));
    line("delta_X", format_double(r.delta_X));
    for (const auto& t : r.timescales) {
        const std::string k(to_string(t.kind));
        line("c2 [" + k + "]", format_double(t.c2));
        line("tau_derived [" + k + "]", format_double(t.tau_derived));
        line("tau_paper [" + k + "]", format_double(t.tau_paper));
    }
    auto bound_line = [&](const char* which, const std::optional<MacBound>& b) {
        if (!b) return;
        line(std::string("dX^2 N_mac bound, ") + which + " [" + std::string(to_string(b->kind)) + "]",
             format_double(b->bound_exact) + "  (fast form " + format_double(b->bound_fast) + ")");
    };
    bound_line("dec", r.bound_dec);
    bound_line("ort", r.bound_ort);
    if (r.constraint_unobserved) {
        line("temperature constraint (unobs.)", r.constraint_unobserved->satisfied ? "satisfied" : "violated");
    }
    if (r.constraint_observed) {
        line("temperature constraint (obs.)", r.constraint_observed->satisfied ? "satisfied" : "violated");
    }
    if (r.macrofraction_ratio) line("N^B/N^Gamma lower bound", format_double(*r.macrofraction_ratio));
    line("window", "[" + format_double(r.window_start) + ", " + format_double(r.window_end) + "]");
    line("<|Gamma|> (eps_dec " + format_double(r.epsilon_dec) + ")", format_double(r.avg_gamma));
    for (std::size_t i = 0; i < r.avg_overlap.size(); ++i) {
        line("<B> mac " + std::to_string(i + 1) + " (eps_ort " + format_double(r.epsilon_ort) + ")",
             format_double(r.avg_overlap[i]));
    }
    line("SBS verdict", r.pass ? "PASS" : "FAIL");
    return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << content;
    if (!out) throw ConfigError("write failed: " + path.string());
}

}  // namespace qbm
