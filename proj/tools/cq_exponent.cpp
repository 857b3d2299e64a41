// cq-exponent: deterministic CSV curve data for quantum reliability
// functions, cutoff rates, von Neumann entropy surfaces and the Gallager
// comparison of small pure-state constellations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cqr/format.hpp"
#include "cqr/gallager.hpp"
#include "cqr/parallel.hpp"
#include "cqr/quantum_exponent.hpp"

namespace {

struct RunConfig {
    std::string command;
    std::string signal;
    std::optional<double> ns;
    double r_min = 0.0;
    std::optional<double> r_max;
    int points = 50;
    int grid = 101;
    int precision = 9;
    int threads = 1;
    std::string output;
};

struct CommandOptions {
    CLI::App* cmd = nullptr;
    std::map<std::string, CLI::Option*> opts;
    std::string config_path;
};

struct ConfigError {
    std::string message;
};

void add_common(CommandOptions& co, RunConfig& cfg, bool rate_grid, bool surface_grid) {
    CLI::App* cmd = co.cmd;
    co.opts["signal"] = cmd->add_option("--signal", cfg.signal, "signal kind: binary|psk3|orth4|ternary");
    co.opts["ns"] = cmd->add_option("--ns", cfg.ns, "mean photon number of the constellation");
    if (rate_grid) {
        co.opts["r-min"] = cmd->add_option("--r-min", cfg.r_min, "lowest rate in nats (default 0)");
        co.opts["r-max"] = cmd->add_option("--r-max", cfg.r_max, "highest rate in nats");
        co.opts["points"] = cmd->add_option("--points", cfg.points, "rate grid points (default 50)");
    }
    if (surface_grid) {
        co.opts["grid"] = cmd->add_option("--grid", cfg.grid, "points per simplex coordinate (default 101)");
    }
    co.opts["precision"] = cmd->add_option("--precision", cfg.precision, "decimal digits (default 9)");
    co.opts["output"] = cmd->add_option("--output", cfg.output, "output path (default stdout)");
    co.opts["threads"] = cmd->add_option("--threads", cfg.threads, "worker threads (default 1)");
    cmd->add_option("--config", co.config_path, "key=value file with the same keys; flags win");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError{"invalid number for '" + key + "': " + text};
    }
    if (used != text.size()) throw ConfigError{"invalid number for '" + key + "': " + text};
    return v;
}

int parse_int(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        throw ConfigError{"invalid integer for '" + key + "': " + text};
    }
    if (used != text.size()) throw ConfigError{"invalid integer for '" + key + "': " + text};
    return static_cast<int>(v);
}

void apply_config_file(const CommandOptions& co, RunConfig& cfg) {
    if (co.config_path.empty()) return;
    std::ifstream in(co.config_path);
    if (!in) throw ConfigError{"cannot open config file: " + co.config_path};

    std::string line;
    while (std::getline(in, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) throw ConfigError{"malformed config line: " + stripped};
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        const auto it = co.opts.find(key);
        if (it == co.opts.end()) throw ConfigError{"unknown config key: " + key};
        if (it->second->count() > 0) continue;  // flags override file values

        if (key == "signal") cfg.signal = value;
        else if (key == "ns") cfg.ns = parse_double(key, value);
        else if (key == "r-min") cfg.r_min = parse_double(key, value);
        else if (key == "r-max") cfg.r_max = parse_double(key, value);
        else if (key == "points") cfg.points = parse_int(key, value);
        else if (key == "grid") cfg.grid = parse_int(key, value);
        else if (key == "precision") cfg.precision = parse_int(key, value);
        else if (key == "threads") cfg.threads = parse_int(key, value);
        else if (key == "output") cfg.output = value;
    }
}

cqr::SignalKind parse_kind(const std::string& name) {
    if (name == "binary") return cqr::SignalKind::Binary;
    if (name == "psk3") return cqr::SignalKind::Psk3;
    if (name == "orth4") return cqr::SignalKind::Orth4;
    if (name == "ternary") return cqr::SignalKind::Ternary;
    throw ConfigError{"unknown signal '" + name + "'"};
}

void validate(const RunConfig& cfg, bool rate_grid) {
    if (cfg.signal.empty()) throw ConfigError{"signal is required"};
    parse_kind(cfg.signal);
    if (cfg.command == "entropy-surface" && cfg.signal != "ternary") {
        throw ConfigError{"entropy-surface requires --signal ternary"};
    }
    if ((cfg.command == "gallager" || cfg.command == "compare") && cfg.signal != "binary") {
        throw ConfigError{cfg.command + " requires --signal binary"};
    }
    if (!cfg.ns.has_value()) throw ConfigError{"ns is required"};
    if (!(*cfg.ns >= 0.0)) throw ConfigError{"ns must be >= 0"};
    if (cfg.precision < 1 || cfg.precision > 17) throw ConfigError{"precision must lie in [1,17]"};
    if (cfg.threads < 1) throw ConfigError{"threads must be >= 1"};
    if (rate_grid) {
        if (cfg.points < 2) throw ConfigError{"points must be >= 2"};
        if (!cfg.r_max.has_value()) throw ConfigError{"r-max is required"};
        if (!(cfg.r_min >= 0.0)) throw ConfigError{"r-min must be >= 0"};
        if (!(cfg.r_min < *cfg.r_max)) throw ConfigError{"r-min must be < r-max"};
    }
    if (cfg.command == "entropy-surface" && cfg.grid < 2) throw ConfigError{"grid must be >= 2"};
}

std::vector<double> rate_grid(double r_min, double r_max, int n) {
    std::vector<double> rates(static_cast<std::size_t>(n));
    const double step = (r_max - r_min) / (n - 1);
    for (int i = 0; i < n; ++i) {
        rates[static_cast<std::size_t>(i)] = (i == n - 1) ? r_max : r_min + step * i;
    }
    return rates;
}

std::string cmd_exponent(const RunConfig& cfg) {
    const cqr::SignalSet set = cqr::make_signal_set(parse_kind(cfg.signal), *cfg.ns);
    const cqr::ExponentCurve curve = cqr::reliability_curve(set, cfg.r_min, *cfg.r_max, cfg.points, cfg.threads);
    const int p = cfg.precision;

    std::ostringstream out;
    out << "R,E_Qr,s_opt";
    for (int i = 0; i < set.size(); ++i) out << ",xi_opt_" << (i + 1);
    out << ",regime\n";
    for (const cqr::ExponentPoint& pt : curve.points) {
        out << cqr::format_fixed(pt.rate, p) << ',' << cqr::format_fixed(pt.value, p) << ','
            << cqr::format_fixed(pt.s_opt, p);
        for (int i = 0; i < set.size(); ++i) out << ',' << cqr::format_fixed(pt.xi_opt[i], p);
        out << ',' << cqr::to_string(cqr::regime_of(pt)) << '\n';
    }
    return out.str();
}

std::string cmd_cutoff(const RunConfig& cfg) {
    const cqr::SignalSet set = cqr::make_signal_set(parse_kind(cfg.signal), *cfg.ns);
    const cqr::CutoffRate cr = cqr::cutoff_rate(set);
    const int p = cfg.precision;

    std::ostringstream out;
    out << "signal,ns,R0";
    for (int i = 0; i < set.size(); ++i) out << ",xi_opt_" << (i + 1);
    out << '\n' << cfg.signal << ',' << cqr::format_fixed(*cfg.ns, p) << ',' << cqr::format_fixed(cr.r0, p);
    for (int i = 0; i < set.size(); ++i) out << ',' << cqr::format_fixed(cr.xi_opt[i], p);
    out << '\n';
    return out.str();
}

std::string cmd_entropy_surface(const RunConfig& cfg) {
    const cqr::SignalSet set = cqr::make_signal_set(cqr::SignalKind::Ternary, *cfg.ns);
    const int n = cfg.grid;
    const int p = cfg.precision;

    struct Cell {
        double xi1;
        double xi2;
        double h;
    };
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n - i; ++j) {
            const double xi1 = static_cast<double>(i) / (n - 1);
            const double xi2 = static_cast<double>(j) / (n - 1);
            cells.push_back({xi1, xi2, 0.0});
        }
    }
    cqr::parallel_for(static_cast<int>(cells.size()), cfg.threads, [&](int idx) {
        Cell& c = cells[static_cast<std::size_t>(idx)];
        const cqr::PriorVector xi({c.xi1, c.xi2, 1.0 - c.xi1 - c.xi2});
        c.h = cqr::von_neumann_entropy(cqr::hermitian_eigenvalues(cqr::weighted_gram(set, xi)));
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].h > cells[best].h) best = i;
    }

    std::ostringstream out;
    out << "xi1,xi2,H\n";
    for (const Cell& c : cells) {
        out << cqr::format_fixed(c.xi1, p) << ',' << cqr::format_fixed(c.xi2, p) << ','
            << cqr::format_fixed(c.h, p) << '\n';
    }
    out << "# max xi1=" << cqr::format_fixed(cells[best].xi1, p) << " xi2=" << cqr::format_fixed(cells[best].xi2, p)
        << " H=" << cqr::format_fixed(cells[best].h, p) << '\n';
    return out.str();
}

std::string cmd_gallager(const RunConfig& cfg) {
    const cqr::SignalSet set = cqr::make_signal_set(cqr::SignalKind::Binary, *cfg.ns);
    const std::vector<double> rates = rate_grid(cfg.r_min, *cfg.r_max, cfg.points);
    const int p = cfg.precision;

    std::vector<cqr::GallagerPoint> pts(rates.size(), cqr::GallagerPoint{0.0, 0.0, 0.0, cqr::PriorVector::uniform(2)});
    cqr::parallel_for(static_cast<int>(rates.size()), cfg.threads, [&](int i) {
        pts[static_cast<std::size_t>(i)] = cqr::binary_gallager_exponent(set, rates[static_cast<std::size_t>(i)]);
    });

    std::ostringstream out;
    out << "R,E_gallager,rho_opt,xi1_opt\n";
    for (const cqr::GallagerPoint& pt : pts) {
        out << cqr::format_fixed(pt.rate, p) << ',' << cqr::format_fixed(pt.value, p) << ','
            << cqr::format_fixed(pt.rho_opt, p) << ',' << cqr::format_fixed(pt.xi_opt[0], p) << '\n';
    }
    return out.str();
}

std::string cmd_compare(const RunConfig& cfg) {
    const cqr::SignalSet set = cqr::make_signal_set(cqr::SignalKind::Binary, *cfg.ns);
    const std::vector<double> rates = rate_grid(cfg.r_min, *cfg.r_max, cfg.points);
    const int p = cfg.precision;

    std::vector<double> eq(rates.size(), 0.0);
    std::vector<double> eg(rates.size(), 0.0);
    cqr::parallel_for(static_cast<int>(rates.size()), cfg.threads, [&](int i) {
        const std::size_t k = static_cast<std::size_t>(i);
        eq[k] = cqr::reliability_at_rate(set, rates[k]).value;
        eg[k] = cqr::binary_gallager_exponent(set, rates[k]).value;
    });

    const double c1 = cqr::capacity_c1(set).c1;
    const double h = cqr::optimize_priors(set, cqr::PriorObjective::von_neumann()).value;

    std::ostringstream out;
    out << "R,E_quantum,E_gallager\n";
    for (std::size_t k = 0; k < rates.size(); ++k) {
        out << cqr::format_fixed(rates[k], p) << ',' << cqr::format_fixed(eq[k], p) << ','
            << cqr::format_fixed(eg[k], p) << '\n';
    }
    out << "# C1=" << cqr::format_fixed(c1, p) << '\n';
    out << "# H=" << cqr::format_fixed(h, p) << '\n';
    return out.str();
}

int emit(const RunConfig& cfg, const std::string& data) {
    if (cfg.output.empty()) {
        std::cout << data;
        std::cout.flush();
        return 0;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output path: " << cfg.output << "\n";
        return 2;
    }
    out << data;
    return out.good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum reliability function and cutoff rate curve data"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<CommandOptions> commands(5);
    const char* names[5] = {"exponent", "cutoff", "entropy-surface", "gallager", "compare"};
    const char* descs[5] = {
        "reliability function E_Qr over a rate grid",
        "quantum cutoff rate R0 and its optimal prior",
        "von Neumann entropy over the ternary prior simplex",
        "Gallager exponent of the Helstrom-measured binary channel",
        "quantum vs Gallager exponents on a shared rate grid",
    };
    for (int i = 0; i < 5; ++i) {
        commands[static_cast<std::size_t>(i)].cmd = app.add_subcommand(names[i], descs[i]);
        const bool rate = (i == 0 || i == 3 || i == 4);
        const bool surface = (i == 2);
        add_common(commands[static_cast<std::size_t>(i)], cfg, rate, surface);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const CommandOptions* active = nullptr;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        if (commands[i].cmd->parsed()) {
            active = &commands[i];
            cfg.command = names[i];
        }
    }
    if (active == nullptr) {
        std::cerr << "a subcommand is required\n";
        return 2;
    }

    try {
        apply_config_file(*active, cfg);
        const bool rate = (cfg.command == "exponent" || cfg.command == "gallager" || cfg.command == "compare");
        validate(cfg, rate);

        std::string data;
        if (cfg.command == "exponent") data = cmd_exponent(cfg);
        else if (cfg.command == "cutoff") data = cmd_cutoff(cfg);
        else if (cfg.command == "entropy-surface") data = cmd_entropy_surface(cfg);
        else if (cfg.command == "gallager") data = cmd_gallager(cfg);
        else data = cmd_compare(cfg);
        return emit(cfg, data);
    } catch (const ConfigError& e) {
        std::cerr << e.message << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
