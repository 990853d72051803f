// hosc: command-line front end for the oscillator spectral toolkit.
//
// Subcommands:
//   verify     run one verification suite, write report JSON / CSV
//   sweep      tabulate empirical constants across cutoffs and exponents
//   norm       evaluate a norm of a field given as JSON
//   propagate  evolve a field (oscillator / heat / free) and write samples
//
// Exit codes: 0 pass, 1 fail (suite ran, criterion failed), 2 invalid
// input or hypothesis, 3 resolution insufficient.
//
// HOSC_THREADS caps the number of worker threads (default: hardware).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hosc/norms.hpp"
#include "hosc/propagators.hpp"
#include "hosc/report.hpp"
#include "hosc/suites.hpp"
#include "hosc/trial_family.hpp"
#include "hosc/types.hpp"

namespace {

using hosc::Json;

// Exponent grammar: comma-separated, decimals with '.', `inf` accepted.
double parse_exponent(const std::string& tok) {
    if (tok == "inf" || tok == "Inf" || tok == "INF")
        return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse exponent '" + tok + "'");
    }
    if (used != tok.size())
        throw std::invalid_argument("cannot parse exponent '" + tok + "'");
    return v;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        if (!tok.empty()) out.push_back(tok);
        pos = comma + 1;
    }
    return out;
}

// List options arrive as vector<string>: CLI11 splits both `--t 0.5,1` (via
// the option delimiter) and `t=0.5,1` in a config file the same way.  Each
// element may still carry commas, so split again before parsing.
std::vector<double> parse_exponent_list(const std::vector<std::string>& items) {
    std::vector<double> out;
    for (const auto& item : items)
        for (const auto& tok : split_commas(item)) out.push_back(parse_exponent(tok));
    return out;
}

std::vector<int> parse_int_list(const std::vector<std::string>& items) {
    std::vector<int> out;
    for (const auto& item : items) {
        for (const auto& tok : split_commas(item)) {
            int v = 0;
            auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
                throw std::invalid_argument("cannot parse integer '" + tok + "'");
            out.push_back(v);
        }
    }
    return out;
}

std::string fmt_shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Printed with 15 digits after the point (scientific outside [1e-3, 1e6)).
void print_value(double v) {
    char buf[64];
    double a = std::fabs(v);
    if (v == 0.0 || (a >= 1e-3 && a < 1e6))
        std::snprintf(buf, sizeof buf, "%.15f", v);
    else
        std::snprintf(buf, sizeof buf, "%.15e", v);
    std::printf("%s\n", buf);
}

// Raw option strings shared by verify and sweep.
struct SuiteOptions {
    std::string suite;
    int dimension = 0;                    // 0 = suite default
    std::vector<std::string> cutoffs;     // comma list
    std::vector<std::string> p, q, t;     // exponent / time lists
    double s = std::numeric_limits<double>::quiet_NaN();
    double r = std::numeric_limits<double>::quiet_NaN();
    int trials = 0;               // 0 = suite default
    std::uint64_t seed = 42;
    double tolerance = std::numeric_limits<double>::quiet_NaN();
    std::string family;
    bool real = false;
};

void add_suite_options(CLI::App* cmd, SuiteOptions& o, bool suite_required) {
    auto* s = cmd->add_option("--suite", o.suite, "Suite name (see --list)");
    if (suite_required) s->required();
    cmd->add_option("--dim", o.dimension, "Spatial dimension n");
    cmd->add_option("--cutoff,--cutoffs", o.cutoffs,
                    "Spectral cutoff L, or comma list for stability sweeps")
        ->delimiter(',');
    cmd->add_option("--p", o.p, "Exponent p (comma list; `inf` accepted)")->delimiter(',');
    cmd->add_option("--q", o.q, "Exponent q (comma list; `inf` accepted)")->delimiter(',');
    cmd->add_option("--s", o.s, "Smoothing exponent s");
    cmd->add_option("--r", o.r, "Auxiliary exponent r");
    cmd->add_option("--t", o.t, "Time value(s), comma list")->delimiter(',');
    cmd->add_option("--trials", o.trials, "Number of random trials");
    cmd->add_option("--seed", o.seed, "Random seed (default 42)");
    cmd->add_option("--tol", o.tolerance, "Tolerance override");
    cmd->add_option("--family", o.family,
                    "Trial family: single-eigenfunction | random-band-limited | "
                    "gaussian | gaussian-perturbed");
    cmd->add_flag("--real", o.real, "Draw real coefficients");
}

hosc::SuiteConfig build_config(const SuiteOptions& o) {
    hosc::SuiteConfig cfg;
    if (o.dimension > 0) cfg.dimension = o.dimension;
    if (!o.cutoffs.empty()) cfg.cutoffs = parse_int_list(o.cutoffs);
    if (!o.p.empty()) cfg.p_list = parse_exponent_list(o.p);
    if (!o.q.empty()) {
        cfg.q_list = parse_exponent_list(o.q);
        if (cfg.q_list.size() == 1) cfg.q = cfg.q_list.front();
    }
    if (!std::isnan(o.s)) cfg.s = o.s;
    if (!std::isnan(o.r)) cfg.r = o.r;
    if (!o.t.empty()) cfg.t_list = parse_exponent_list(o.t);
    if (o.trials > 0) cfg.trials = o.trials;
    cfg.seed = o.seed;
    if (!std::isnan(o.tolerance)) cfg.tolerance = o.tolerance;
    if (!o.family.empty()) cfg.family = hosc::trial_kind_from_string(o.family);
    cfg.real_coefficients = o.real;
    return cfg;
}

int cmd_verify(const SuiteOptions& opts, const std::string& out_path,
               const std::string& csv_path, const std::string& format) {
    hosc::VerificationReport rep = hosc::run_suite(opts.suite, build_config(opts));
    if (!out_path.empty()) hosc::write_json_file(out_path, rep.to_json());
    if (!csv_path.empty()) hosc::write_text_file(csv_path, rep.to_csv());
    if (format == "json") {
        std::cout << rep.to_json().dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << rep.to_csv();
    } else {
        std::cout << "suite " << rep.suite << ": " << (rep.pass ? "pass" : "FAIL")
                  << "  trials=" << rep.trials.size()
                  << "  max=" << fmt_shortest(rep.aggregate.max)
                  << "  median=" << fmt_shortest(rep.aggregate.median)
                  << "  tolerance=" << fmt_shortest(rep.tolerance) << "\n";
        for (const auto& [L, c] : rep.aggregate.c_hat_by_cutoff)
            std::cout << "  C_hat(" << L << ") = " << fmt_shortest(c) << "\n";
        for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_sweep(const SuiteOptions& opts, const std::string& out_path) {
    std::vector<double> p_grid = opts.p.empty() ? std::vector<double>{}
                                                : parse_exponent_list(opts.p);
    if (p_grid.empty())
        throw std::invalid_argument("sweep needs a non-empty exponent grid (--p)");
    std::vector<std::optional<double>> q_grid;
    if (opts.q.empty()) {
        q_grid.push_back(std::nullopt);  // suite default
    } else {
        for (double q : parse_exponent_list(opts.q)) q_grid.push_back(q);
        if (q_grid.empty())
            throw std::invalid_argument("sweep needs a non-empty exponent grid (--q)");
    }

    std::string csv = "suite,cutoff,p,q,c_hat,pass\n";
    bool all_pass = true;
    for (double p : p_grid) {
        for (const auto& q : q_grid) {
            SuiteOptions cell = opts;
            hosc::SuiteConfig cfg = build_config(cell);
            cfg.p_list = {p};
            if (q) {
                cfg.q = *q;
                cfg.q_list = {*q};
            }
            hosc::VerificationReport rep = hosc::run_suite(opts.suite, cfg);
            all_pass = all_pass && rep.pass;
            for (const auto& [L, c] : rep.aggregate.c_hat_by_cutoff) {
                csv += rep.suite + "," + std::to_string(L) + "," + fmt_shortest(p) + "," +
                       (q ? fmt_shortest(*q) : std::string("default")) + "," +
                       fmt_shortest(c) + "," + (rep.pass ? "true" : "false") + "\n";
            }
        }
    }
    if (!out_path.empty())
        hosc::write_text_file(out_path, csv);
    else
        std::cout << csv;
    return all_pass ? 0 : 1;
}

int cmd_norm(const std::string& field_path, const std::string& spec_text) {
    hosc::SpectralField f = hosc::field_from_json(hosc::read_json_file(field_path));
    hosc::NormSpec spec = hosc::NormSpec::parse(spec_text);
    spec.validate();
    print_value(hosc::field_norm(f, spec));
    return 0;
}

int cmd_propagate(const std::string& field_path, const std::string& evolution,
                  const std::vector<std::string>& t_text, const std::string& out_path) {
    hosc::SpectralField f = hosc::field_from_json(hosc::read_json_file(field_path));
    std::vector<double> ts = parse_exponent_list(t_text);
    if (ts.empty()) throw std::invalid_argument("propagate needs at least one time (--t)");

    hosc::TimeGrid tg;
    tg.nodes = ts;
    tg.weights.assign(ts.size(), 1.0);
    tg.start = *std::min_element(ts.begin(), ts.end());
    tg.end = *std::max_element(ts.begin(), ts.end());
    tg.periodic = false;

    hosc::QuadratureGrid grid = hosc::default_grid(f.dimension, f.cutoff);
    hosc::SpaceTimeField u;

    if (evolution == "oscillator") {
        u = hosc::evolve_oscillator(f, tg, grid);
    } else if (evolution == "heat") {
        u.initial = f;
        u.time = tg;
        u.space = grid;
        u.values.reserve(tg.size() * grid.size());
        for (double t : ts) {
            hosc::SpectralField ft = hosc::heat_spectral(f, t);  // rejects t < 0
            auto vals = hosc::synthesize(ft, grid);
            u.values.insert(u.values.end(), vals.begin(), vals.end());
        }
    } else if (evolution == "free") {
        u.initial = f;
        u.time = tg;
        u.space = grid;
        u.values.reserve(tg.size() * grid.size());
        for (double t : ts) {
            auto res = hosc::free_schrodinger(f, t, grid.points);
            u.values.insert(u.values.end(), res.values.begin(), res.values.end());
        }
    } else {
        throw std::invalid_argument("unknown evolution '" + evolution +
                                    "' (expected oscillator, heat, or free)");
    }

    Json j = hosc::spacetime_to_json(u);
    if (!out_path.empty())
        hosc::write_json_file(out_path, j);
    else
        std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hosc: Hermite spectral toolkit for the quantum harmonic oscillator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a config file (sections per subcommand)");
    app.set_version_flag("--version", "hosc 0.1.0");

    // verify
    SuiteOptions vopts;
    std::string v_out, v_csv, v_format = "summary";
    auto* verify = app.add_subcommand("verify", "Run one verification suite");
    add_suite_options(verify, vopts, /*suite_required=*/false);
    verify->add_option("--out", v_out, "Write report JSON here (atomic)");
    verify->add_option("--csv", v_csv, "Write trial CSV here (atomic)");
    verify->add_option("--format", v_format, "Stdout format: summary | json | csv")
        ->check(CLI::IsMember({"summary", "json", "csv"}));
    bool list_suites = false;
    verify->add_flag("--list", list_suites, "List registered suites and exit");

    // sweep
    SuiteOptions sopts;
    std::string s_out;
    auto* sweep = app.add_subcommand(
        "sweep", "Tabulate empirical constants over cutoffs and exponent grids (CSV)");
    add_suite_options(sweep, sopts, /*suite_required=*/true);
    sweep->add_option("--out", s_out, "Write the CSV here (atomic)");

    // norm
    std::string n_field, n_spec;
    auto* norm = app.add_subcommand("norm", "Evaluate a norm of a field JSON");
    norm->add_option("--field", n_field, "Field JSON path")->required();
    norm->add_option("--norm", n_spec,
                     "Norm spec, e.g. Lp:p=2 | TL:r=0,p=4,q=2 | MixedXT:p=4,q=2,"
                     "T=6.283185307179586 | MixedTX:q=2,p=4 | SobolevH2:s=2 | SobolevWp:s=1,p=4")
        ->required();

    // propagate
    std::string p_field, p_evolution, p_out;
    std::vector<std::string> p_t;
    auto* propagate = app.add_subcommand("propagate", "Evolve a field and write samples");
    propagate->add_option("--field", p_field, "Field JSON path")->required();
    propagate->add_option("--evolution", p_evolution, "oscillator | heat | free")->required();
    propagate->add_option("--t", p_t, "Time value(s), comma list")
        ->required()
        ->delimiter(',');
    propagate->add_option("--out", p_out, "Write space-time JSON here (atomic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0; parse errors exit 2
    }

    try {
        if (verify->parsed()) {
            if (list_suites) {
                for (const auto& name : hosc::suite_names()) std::cout << name << "\n";
                return 0;
            }
            if (vopts.suite.empty())
                throw std::invalid_argument("verify needs --suite (or --list)");
            return cmd_verify(vopts, v_out, v_csv, v_format);
        }
        if (sweep->parsed()) return cmd_sweep(sopts, s_out);
        if (norm->parsed()) return cmd_norm(n_field, n_spec);
        if (propagate->parsed()) return cmd_propagate(p_field, p_evolution, p_t, p_out);
    } catch (const hosc::HypothesisError& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return 2;
    } catch (const hosc::ResolutionError& e) {
        std::cerr << "resolution insufficient: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
