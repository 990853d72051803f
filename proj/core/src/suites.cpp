#include "hosc/suites.hpp"

#include "hosc/multiplier.hpp"
#include "hosc/norms.hpp"
#include "hosc/parallel.hpp"
#include "hosc/propagators.hpp"
#include "hosc/quadrature.hpp"
#include "hosc/rng.hpp"
#include "hosc/time_grid.hpp"
#include "hosc/trial_family.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace hosc {

namespace {

std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double conjugate_exponent(double p) {
    if (std::isinf(p)) return 1.0;
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return p / (p - 1.0);
}

void require(bool ok, const std::string& constraint, const std::string& detail) {
    if (!ok) throw HypothesisError(constraint, detail);
}

std::string hypothesis_detail(const std::string& lead) { return lead; }

// --- config resolution -------------------------------------------------

int cfg_dim(const SuiteConfig& c, int fallback) {
    return c.dimension ? *c.dimension : fallback;
}

std::vector<int> cfg_cutoffs(const SuiteConfig& c, std::vector<int> fallback) {
    return c.cutoffs.empty() ? fallback : c.cutoffs;
}

double cfg_p(const SuiteConfig& c, double fallback) {
    return c.p_list.empty() ? fallback : c.p_list.front();
}

double cfg_q(const SuiteConfig& c, double fallback) {
    return c.q ? *c.q : fallback;
}

double cfg_s(const SuiteConfig& c, double fallback) {
    return c.s ? *c.s : fallback;
}

int cfg_trials(const SuiteConfig& c, int fallback) {
    return c.trials ? *c.trials : fallback;
}

double cfg_tol(const SuiteConfig& c, double fallback) {
    return c.tolerance ? *c.tolerance : fallback;
}

TrialKind cfg_family(const SuiteConfig& c, TrialKind fallback) {
    return c.family ? *c.family : fallback;
}

// --- shared numerics ---------------------------------------------------

std::vector<Complex> sum_levels(const LevelValues& lv) {
    std::vector<Complex> out(lv.point_count, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < lv.levels.size(); ++r) {
        auto row = lv.row(r);
        for (std::size_t i = 0; i < lv.point_count; ++i) out[i] += row[i];
    }
    return out;
}

// || sqrt(2*pi * sum_l |P_l f|^2) ||_{L^p} over the spatial grid: the exact
// value of the L^2_t(0,2pi) inner norm of the oscillator evolution.
double exact_l2t_lp(const LevelValues& lv, std::span<const double> w, double p) {
    auto profile = l2t_profile_from_levels(lv);
    return weighted_lp(std::span<const double>(profile), w, p);
}

// Quadrature route for || e^{-itH} f ||_{L^p_x L^q_t(0,2pi)} using the exact
// periodic trapezoid rule with 8*cutoff nodes (exact for band-limited powers
// whenever q*cutoff/2 < 8*cutoff, i.e. q < 16).
double quad_mixed_xt(const LevelValues& lv, std::span<const double> w, int cutoff,
                     double p, double q) {
    const int nt = 8 * std::max(cutoff, 1);
    TimeGrid tg = TimeGrid::periodic_uniform(kTwoPi, nt);
    auto u = oscillator_values(lv, tg.nodes);  // time-major
    const std::size_t npts = lv.point_count;
    std::vector<double> inner(npts, 0.0);
    if (std::isinf(q)) {
        for (std::size_t j = 0; j < tg.nodes.size(); ++j) {
            const Complex* slice = u.data() + j * npts;
            for (std::size_t i = 0; i < npts; ++i)
                inner[i] = std::max(inner[i], std::abs(slice[i]));
        }
    } else {
        for (std::size_t j = 0; j < tg.nodes.size(); ++j) {
            const Complex* slice = u.data() + j * npts;
            const double wt = tg.weights[j];
            if (q == 2.0) {
                for (std::size_t i = 0; i < npts; ++i) inner[i] += wt * std::norm(slice[i]);
            } else {
                for (std::size_t i = 0; i < npts; ++i)
                    inner[i] += wt * std::pow(std::abs(slice[i]), q);
            }
        }
        for (auto& v : inner) v = std::pow(v, 1.0 / q);
    }
    return weighted_lp(std::span<const double>(inner), w, p);
}

// --- stability verdict across cutoffs ----------------------------------

bool stability_verdict(const std::map<int, double>& c_hat,
                       std::vector<std::string>& notes) {
    if (c_hat.size() < 2) {
        notes.push_back("stability check needs at least two cutoffs; got " +
                        std::to_string(c_hat.size()));
        return false;
    }
    bool any_pair = false;
    bool ok = true;
    for (const auto& [L, cL] : c_hat) {
        auto it = c_hat.find(2 * L);
        if (it == c_hat.end()) continue;
        any_pair = true;
        if (it->second > kStabilityFactor * cL) {
            ok = false;
            notes.push_back("constant grew from cutoff " + std::to_string(L) + " (" +
                            fmt(cL) + ") to cutoff " + std::to_string(2 * L) + " (" +
                            fmt(it->second) + "): factor " + fmt(it->second / cL) +
                            " exceeds " + fmt(kStabilityFactor));
        }
    }
    if (!any_pair) {
        // No doubled pair in the list: fall back to consecutive cutoffs.
        notes.push_back("no doubled cutoff pair present; applying the growth factor to consecutive cutoffs");
        auto it = c_hat.begin();
        auto prev = it++;
        for (; it != c_hat.end(); ++prev, ++it) {
            if (it->second > kStabilityFactor * prev->second) {
                ok = false;
                notes.push_back("constant grew from cutoff " + std::to_string(prev->first) +
                                " (" + fmt(prev->second) + ") to cutoff " +
                                std::to_string(it->first) + " (" + fmt(it->second) +
                                "): factor " + fmt(it->second / prev->second) +
                                " exceeds " + fmt(kStabilityFactor));
            }
        }
    }
    if (ok) notes.push_back("constants stable across cutoffs (growth factor <= " +
                            fmt(kStabilityFactor) + ")");
    return ok;
}

void attach_aggregate(VerificationReport& rep) { rep.aggregate_from_trials(); }

// =======================================================================
// identity-sqrt2pi: || e^{-itH} f ||_{L^p_x L^2_t(0,2pi)} equals
// sqrt(2pi) * || f ||_{F^0_{p,2}} exactly; checked via the closed-form
// level profile (tight tolerance) and via time quadrature (loose).
// =======================================================================

VerificationReport suite_identity_sqrt2pi(const SuiteConfig& cfg) {
    const int dim = cfg_dim(cfg, 1);
    const auto cutoffs = cfg_cutoffs(cfg, {20});
    std::vector<double> p_list = cfg.p_list.empty()
        ? std::vector<double>{1.5, 2.0, 4.0, std::numeric_limits<double>::infinity()}
        : cfg.p_list;
    const int trials = cfg_trials(cfg, 50);
    const double tol = cfg_tol(cfg, 1e-6);
    const double quad_tol = 1e-3;

    VerificationReport rep;
    rep.suite = "identity-sqrt2pi";
    rep.tolerance = tol;
    rep.params = {{"dimension", dim},
                  {"cutoffs", cutoffs},
                  {"p_list", p_list},
                  {"trials", trials},
                  {"seed", cfg.seed},
                  {"quad_tolerance", quad_tol}};

    bool needs_sup = false, needs_quad = false;
    for (double p : p_list) (std::isinf(p) ? needs_sup : needs_quad) = true;

    bool pass = true;
    double worst_exact = 0.0, worst_quad = 0.0;
    for (int L : cutoffs) {
        TrialFamily fam;
        fam.kind = cfg_family(cfg, TrialKind::RandomBandLimited);
        fam.dimension = dim;
        fam.cutoff = L;
        fam.seed = cfg.seed;
        fam.real_coefficients = cfg.real_coefficients;

        QuadratureGrid weighted = needs_quad ? default_grid(dim, L)
                                             : QuadratureGrid{};
        QuadratureGrid supg = needs_sup ? sup_grid(dim, L) : QuadratureGrid{};

        const std::size_t base = rep.trials.size();
        rep.trials.resize(base + static_cast<std::size_t>(trials) * p_list.size());
        std::vector<double> quad_dev(static_cast<std::size_t>(trials) * p_list.size(), 0.0);
        std::vector<double> exact_dev(quad_dev.size(), 0.0);

        parallel_for(0, trials, [&](int t) {
            SpectralField f = fam.draw(t);
            LevelValues lvw, lvs;
            if (needs_quad) lvw = level_synthesis(f, weighted);
            if (needs_sup) lvs = level_synthesis(f, supg);
            for (std::size_t pi = 0; pi < p_list.size(); ++pi) {
                const double p = p_list[pi];
                const bool sup = std::isinf(p);
                const LevelValues& lv = sup ? lvs : lvw;
                std::span<const double> w(sup ? supg.weights : weighted.weights);
                double lhs = exact_l2t_lp(lv, w, p);
                double rhs = std::sqrt(kTwoPi) * tl_norm_from_levels(lv, w, 0.0, p, 2.0);
                double quad = quad_mixed_xt(lv, w, L, p, 2.0);
                const std::size_t slot = base + static_cast<std::size_t>(t) * p_list.size() + pi;
                rep.trials[slot] = TrialRecord{L, static_cast<int>(t * p_list.size() + pi),
                                               lhs, rhs, rhs == 0.0 ? 1.0 : lhs / rhs};
                exact_dev[slot - base] = rhs == 0.0 ? 0.0 : std::abs(lhs / rhs - 1.0);
                quad_dev[slot - base] = lhs == 0.0 ? 0.0 : std::abs(quad / lhs - 1.0);
            }
        });
        for (double d : exact_dev) worst_exact = std::max(worst_exact, d);
        for (double d : quad_dev) worst_quad = std::max(worst_quad, d);
    }
    pass = worst_exact <= tol && worst_quad <= quad_tol;
    rep.notes.push_back("trial index = draw * |p_list| + p index; p order: " +
                        [&] {
                            std::string s;
                            for (double p : p_list)
                                s += (s.empty() ? "" : ", ") + (std::isinf(p) ? std::string("inf") : fmt(p));
                            return s;
                        }());
    rep.notes.push_back("max |ratio - 1| via closed-form time profile: " + fmt(worst_exact));
    rep.notes.push_back("max relative gap between time-quadrature and closed-form norms: " +
                        fmt(worst_quad) + " (tolerance " + fmt(quad_tol) + ")");
    rep.pass = pass;
    attach_aggregate(rep);
    return rep;
}

// =======================================================================
// multiplier-norm: spectral multipliers act on F^0_{p,2} with operator
// norm exactly sup_l |m(l)|; witnessed on an eigenfunction at the
// supremum level and bounded on random fields.
// =======================================================================

VerificationReport suite_multiplier_norm(const SuiteConfig& cfg) {
    const int dim = cfg_dim(cfg, 1);
    const auto cutoffs = cfg_cutoffs(cfg, {20});
    const int L = cutoffs.front();
    const double p = cfg_p(cfg, 4.0);
    const double q = cfg_q(cfg, 2.0);
    const int trials = cfg_trials(cfg, 50);
    const double tol = cfg_tol(cfg, 1e-12);

    VerificationReport rep;
    rep.suite = "multiplier-norm";
    rep.tolerance = tol;
    rep.params = {{"dimension", dim}, {"cutoff", L}, {"p", p}, {"q", q},
                  {"trials", trials}, {"seed", cfg.seed}};

    auto levels = levels_up_to(L, dim);
    std::map<int, Complex> random_table;
    {
        TrialRng rng(cfg.seed, 999331);
        for (int l : levels)
            random_table[l] = std::polar(rng.uniform(), kTwoPi * rng.uniform());
    }
    std::vector<Multiplier> mults;
    mults.push_back(Multiplier::level_cutoff(levels[levels.size() / 2]));
    mults.push_back(Multiplier::level_band(levels.size() > 1 ? levels[1] : levels[0]));
    mults.push_back(Multiplier::h_power(-1.0));
    mults.push_back(Multiplier::oscillator_phase(0.7));
    mults.push_back(Multiplier::tabulated(random_table, "random-table"));

    QuadratureGrid grid = std::isinf(p) ? sup_grid(dim, L) : default_grid(dim, L);

    TrialFamily fam;
    fam.kind = cfg_family(cfg, TrialKind::RandomBandLimited);
    fam.dimension = dim;
    fam.cutoff = L;
    fam.seed = cfg.seed;
    fam.real_coefficients = cfg.real_coefficients;

    bool pass = true;
    int trial_id = 0;
    for (const auto& m : mults) {
        const double sup = m.sup_over(dim, L);
        const int l_star = m.arg_sup(dim, L);
        // Witness: an eigenfunction at the supremum level attains the norm.
        auto slice = level_slice(L, dim, l_star);
        SpectralField e = zero_field(dim, L);
        e.coefficients[slice.first] = Complex{1.0, 0.0};
        {
            SpectralField me = apply_multiplier(e, m);
            double lhs = tl_norm(me, 0.0, p, q, grid);
            double rhs = tl_norm(e, 0.0, p, q, grid);
            double ratio = rhs == 0.0 ? 0.0 : lhs / rhs;
            rep.trials.push_back({L, trial_id++, lhs, rhs, ratio});
            if (std::abs(ratio - sup) > tol * std::max(1.0, sup)) {
                pass = false;
                rep.notes.push_back("witness for " + m.describe() + " attained " + fmt(ratio) +
                                    " but sup |m| = " + fmt(sup));
            }
        }
        // Upper bound on random fields: ratio normalized by the sup, so a
        // passing record has ratio <= 1 (+tol).
        for (int t = 0; t < trials; ++t) {
            SpectralField f = fam.draw(t);
            SpectralField mf = apply_multiplier(f, m);
            double denom = tl_norm(f, 0.0, p, q, grid);
            double num = tl_norm(mf, 0.0, p, q, grid);
            double ratio = (sup == 0.0 || denom == 0.0) ? 0.0 : num / (sup * denom);
            rep.trials.push_back({L, trial_id++, num, sup * denom, ratio});
            if (ratio > 1.0 + tol) {
                pass = false;
                rep.notes.push_back("contraction violated for " + m.describe() +
                                    " on trial " + std::to_string(t) + ": ratio " + fmt(ratio));
            }
        }
    }
    rep.notes.push_back("per multiplier: first record is the eigenfunction witness (ratio = sup |m|), "
                        "followed by random-field records normalized so ratio <= 1");
    std::string names;
    for (const auto& m : mults) names += (names.empty() ? "" : "; ") + m.describe();
    rep.notes.push_back("multipliers: " + names);
    rep.pass = pass;
    attach_aggregate(rep);
    return rep;
}

// =======================================================================
// sjogren-torrea: global-time free-propagator mixed norm against the
// lens-transformed oscillator norm on (0, pi/4).
// =======================================================================

VerificationReport suite_sjogren_torrea(const SuiteConfig& cfg) {
    const int dim = cfg_dim(cfg, 1);
    const auto cutoffs = cfg_cutoffs(cfg, {12});
    const int L = cutoffs.front();
    const double p = cfg_p(cfg, 6.0);
    const double q = cfg_q(cfg, 6.0);
    TrialKind kind = cfg_family(cfg, TrialKind::RandomBandLimited);
    const int trials = cfg_trials(cfg, kind == TrialKind::Gaussian ? 1 : 8);
    const double tol = cfg_tol(cfg, kind == TrialKind::Gaussian ? 1e-3 : 2e-2);

    require(std::abs(2.0 / q - dim * (0.5 - 1.0 / p)) <= 1e-9,
            "2/q = n(1/2 - 1/p)",
            hypothesis_detail("global time scaling requires the exponent pair to sit on the line: got p=" +
                              fmt(p) + ", q=" + fmt(q) + ", n=" + std::to_string(dim)));
    require(p > 2.0 && !std::isinf(p), "2 < p < inf",
            "the scaling line with q finite forces p in (2, inf); got p=" + fmt(p));

    VerificationReport rep;
    rep.suite = "sjogren-torrea";
    rep.tolerance = tol;
    rep.params = {{"dimension", dim}, {"cutoff", L}, {"p", p}, {"q", q},
                  {"trials", trials}, {"seed", cfg.seed},
                  {"family", to_string(kind)}};

    const double s_h = 60.0;  // free-time horizon for the left-hand side
    FreeEvolutionOptions fopts;
    fopts.horizon = s_h + 1.0;
    fopts.tolerance = 1e-6;

    TrialFamily fam;
    fam.kind = kind;
    fam.dimension = dim;
    fam.cutoff = L;
    fam.seed = cfg.seed;
    fam.real_coefficients = true;  // the global-period comparison needs real data

    QuadratureGrid grid = default_grid(dim, L);
    std::span<const double> w(grid.weights);

    // Right-hand side time grid: composite Gauss on (0, pi/4).
    TimeGrid rhs_tg = TimeGrid::composite_gauss(
        {0.0, kPi / 16.0, kPi / 8.0, 3.0 * kPi / 16.0, kPi / 4.0}, 10);
    // Left-hand side: s-panels mapped through tau = arctan(2s)/2.
    const double s_edges[] = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, s_h};
    std::vector<double> tau_edges;
    for (double s : s_edges) tau_edges.push_back(0.5 * std::atan(2.0 * s));
    TimeGrid lhs_tg = TimeGrid::composite_gauss(tau_edges, 8);

    const double pp = conjugate_exponent(p);
    double max_cert = 0.0, max_tail_frac = 0.0;
    bool pass = true;
    for (int t = 0; t < trials; ++t) {
        SpectralField f = fam.draw(t);
        LevelValues lv = level_synthesis(f, grid);

        // RHS: plain integral over (0, pi/4) of the oscillator L^p norm to the
        // q-th power.  (Under s = tan(2 tau)/2 the Jacobian sec^2(2 tau)
        // cancels exactly against the dilation factor rho^{-2} on the scaling
        // line, which is why no weight appears here.)
        double rhs_q = 0.0;
        for (std::size_t j = 0; j < rhs_tg.nodes.size(); ++j) {
            auto vals = oscillator_values(lv, std::span<const double>(&rhs_tg.nodes[j], 1));
            double np = weighted_lp(std::span<const Complex>(vals), w, p);
            rhs_q += rhs_tg.weights[j] * std::pow(np, q);
        }
        double rhs = std::pow(rhs_q, 1.0 / q);

        // LHS: free evolution sampled on dilated grids, plus half the
        // dispersive tail bound for s > s_h.
        double main_q = 0.0, cert = 0.0;
        for (std::size_t j = 0; j < lhs_tg.nodes.size(); ++j) {
            double tau = lhs_tg.nodes[j];
            double s = 0.5 * std::tan(2.0 * tau);
            double rho = std::sqrt(1.0 + 4.0 * s * s);
            std::vector<double> pts(grid.points.size());
            for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = rho * grid.points[i];
            FreeEvolutionResult res = free_schrodinger(f, s, pts, fopts);
            cert = std::max(cert, res.certified_error);
            double sum = 0.0;
            for (std::size_t i = 0; i < w.size(); ++i)
                sum += w[i] * std::pow(std::abs(res.values[i]), p);
            double np = std::pow(std::pow(rho, dim) * sum, 1.0 / p);
            main_q += lhs_tg.weights[j] * std::pow(np, q) * rho * rho;
        }
        auto f_vals = sum_levels(lv);
        double fp_prime = weighted_lp(std::span<const Complex>(f_vals), w, pp);
        double tail = std::pow(fp_prime, q) / (16.0 * kPi * kPi * s_h);
        double lhs = std::pow(main_q + 0.5 * tail, 1.0 / q);
        max_tail_frac = std::max(max_tail_frac, tail / std::max(main_q, 1e-300));
        max_cert = std::max(max_cert, cert);

        double ratio = rhs == 0.0 ? 1.0 : lhs / rhs;
        rep.trials.push_back({L, t, lhs, rhs, ratio});
        if (std::abs(ratio - 1.0) > tol) pass = false;
    }
    rep.notes.push_back("lhs: integral of the free-evolution L^p norm over s in (0, " + fmt(s_h) +
                        "] mapped to tau panels, plus half the dispersive tail bound "
                        "||f||_{p'}^q / (16 pi^2 s_h) for the truncated range");
    rep.notes.push_back("rhs: integral over tau in (0, pi/4) of the oscillator L^p norm "
                        "(the substitution Jacobian cancels on the scaling line)");
    rep.notes.push_back("max certified free-evolution quadrature error: " + fmt(max_cert));
    rep.notes.push_back("tail bound / main integral: " + fmt(max_tail_frac));
    rep.pass = pass;
    attach_aggregate(rep);
    return rep;
}

// =======================================================================
// main-theorem: || e^{-itH} f ||_{L^{p'}_x L^q_t(0,2pi)} <=
// C || H^s f ||_{L^p} in the stated range; empirical constants must be
// stable under cutoff doubling.
// =======================================================================

VerificationReport suite_main_theorem(const SuiteConfig& cfg) {
    const int dim = cfg_dim(cfg, 3);
    const auto cutoffs = cfg_cutoffs(cfg, {8, 16});
    const double p = cfg_p(cfg, 1.8);
    const double q = cfg_q(cfg, 2.0);
    const double s_q = 0.5 - 1.0 / q;
    const double s = cfg_s(cfg, std::max(s_q, 0.0));
    const int trials = cfg_trials(cfg, 200);

    require(dim > 2, "n > 2", "stated for dimensions n >= 3; got n=" + std::to_string(dim));
    require(p > 1.0 && p < 2.0, "1 < p < 2", "got p=" + fmt(p));
    require(std::abs(0.5 - 1.0 / p) < 1.0 / (2.0 * dim), "|1/2 - 1/p| < 1/(2n)",
            "got |1/2 - 1/p| = " + fmt(std::abs(0.5 - 1.0 / p)) + " with 1/(2n) = " +
                fmt(1.0 / (2.0 * dim)));
    require(q >= 2.0 && !std::isinf(q), "2 <= q < inf", "got q=" + fmt(q));
    require(s >= s_q - 1e-12, "s >= s_q = 1/2 - 1/q",
            "got s=" + fmt(s) + " below s_q=" + fmt(s_q));

    VerificationReport rep;
    rep.suite = "main-theorem";
    rep.tolerance = kStabilityFactor;
    rep.params = {{"dimension", dim}, {"cutoffs", cutoffs}, {"p", p}, {"q", q},
                  {"s", s}, {"trials", trials}, {"seed", cfg.seed}};

    const double pp = conjugate_exponent(p);
    for (int L : cutoffs) {
        TrialFamily fam;
        fam.kind = cfg_family(cfg, TrialKind::RandomBandLimited);
        fam.dimension = dim;
        fam.cutoff = L;
        fam.seed = cfg.seed;
        fam.real_coefficients = cfg.real_coefficients;
        QuadratureGrid grid = default_grid(dim, L);
        std::span<const double> w(grid.weights);

        const std::size_t base = rep.trials.size();
        rep.trials.resize(base + trials);
        parallel_for(0, trials, [&](int t) {
            SpectralField f = fam.draw(t);
            LevelValues lv = level_synthesis(f, grid);
            double lhs;
            if (q == 2.0) {
                lhs = exact_l2t_lp(lv, w, pp);
            } else {
                lhs = quad_mixed_xt(lv, w, L, pp, q);
            }
            // || H^s f ||_p from the level decomposition: scale each level
            // by l^s and sum.
            std::vector<Complex> hs(lv.point_count, Complex{0.0, 0.0});
            for (std::size_t r = 0; r < lv.levels.size(); ++r) {
                double scale = std::pow(static_cast<double>(lv.levels[r]), s);
                auto row = lv.row(r);
                for (std::size_t i = 0; i < lv.point_count; ++i) hs[i] += scale * row[i];
            }
            double rhs = weighted_lp(std::span<const Complex>(hs), w, p);
            rep.trials[base + t] = {L, t, lhs, rhs, rhs == 0.0 ? 0.0 : lhs / rhs};
        });
    }
    attach_aggregate(rep);
    rep.pass = stability_verdict(rep.aggregate.c_hat_by_cutoff, rep.notes);
    return rep;
}

// =======================================================================
// lplq: || e^{-itH} f ||_{L^{p'}_x L^q_t(0,2pi)} <= C || f ||_{L^p}
// without smoothing, in the narrower exponent window.
// =======================================================================

VerificationReport suite_lplq(const SuiteConfig& cfg) {
    const int dim = cfg_dim(cfg, 3);
    const auto cutoffs = cfg_cutoffs(cfg, {8, 16});
    const double p = cfg_p(cfg, 1.9);
    const double q = cfg_q(cfg, 2.0);
    const int trials = cfg_trials(cfg, 100);

    const double pp = conjugate_exponent(p);
    require(dim > 2, "n > 2", "stated for dimensions n >= 3; got n=" + std::to_string(dim));
    require(p > 1.0 && p < 2.0, "1 < p < 2", "got p=" + fmt(p));
    require(q >= 1.0 && q <= pp, "1 <= q <= p'",
            "got q=" + fmt(q) + " with p'=" + fmt(pp));
    require(std::abs(1.0 / p - 0.5) < 1.0 / (dim * q), "|1/p - 1/2| < 1/(nq)",
            "got |1/p - 1/2| = " + fmt(std::abs(1.0 / p - 0.5)) + " with 1/(nq) = " +
                fmt(1.0 / (dim * q)));

    VerificationReport rep;
    rep.suite = "lplq";
    rep.tolerance = kStabilityFactor;
    rep.params = {{"dimension", dim}, {"cutoffs", cutoffs}, {"p", p}, {"q", q},
                  {"trials", trials}, {"seed", cfg.seed}};

    for (int L : cutoffs) {
        TrialFamily fam;
        fam.kind = cfg_family(cfg, TrialKind::RandomBandLimited);
        fam.dimension = dim;
        fam.cutoff = L;
        fam.seed = cfg.seed;
        fam.real_coefficients = cfg.real_coefficients;
        QuadratureGrid grid = default_grid(dim, L);
        std::span<const double> w(grid.weights);

        const std::size_t base = rep.trials.size();
        rep.trials.resize(base + trials);
        parallel_for(0, trials, [&](int t) {
            SpectralField f = fam.draw(t);
            LevelValues lv = level_synthesis(f, grid);
            double lhs = (q == 2.0) ? exact_l2t_lp(lv, w, pp)
                                    : quad_mixed_xt(lv, w, L, pp, q);
            auto vals = sum_levels(lv);
            double rhs = weighted_lp(std::span<const Complex>(vals), w, p);
            rep.trials[base + t] = {L, t, lhs, rhs, rhs == 0.0 ? 0.0 : lhs / rhs};
        });
    }
    attach_aggregate(rep);
    rep.pass = stability_verdict(rep.aggregate.c_hat_by_cutoff, rep.notes);
    return rep;
}

// =======================================================================
// lp-analogue: || f ||_{F^0_{p',2}} <= C || f ||_{L^p}, plus the exact
// lifting identity F^s_{p',2}(f) = F^0_{p',2}(H^s f).
// =======================================================================

VerificationReport suite_lp_analogue(const SuiteConfig& cfg) {
    const int dim = cfg_dim(cfg, 3);
    const auto cutoffs = cfg_cutoffs(cfg, {8, 16});
    const double p = cfg_p(cfg, 1.8);
    const double s = cfg_s(cfg, 0.5);
    const int trials = cfg_trials(cfg, 200);
    const double lift_tol = 1e-12;

    require(p > 1.0 && p < 2.0, "1 < p < 2", "got p=" + fmt(p));
    require(std::abs(1.0 / p - 0.5) < 1.0 / (2.0 * dim), "|1/p - 1/2| < 1/(2n)",
            "got |1/p - 1/2| = " + fmt(std::abs(1.0 / p - 0.5)) + " with 1/(2n) = " +
                fmt(1.0 / (2.0 * dim)));

    VerificationReport rep;
    rep.suite = "lp-analogue";
    rep.tolerance = kStabilityFactor;
    rep.params = {{"dimension", dim}, {"cutoffs", cutoffs}, {"p", p}, {"s", s},
                  {"trials", trials}, {"seed", cfg.seed}};

    const double pp = conjugate_exponent(p);
    double worst_lift = 0.0;
    bool lift_ok = true;
    for (int L : cutoffs) {
        TrialFamily fam;
        fam.kind = cfg_family(cfg, TrialKind::RandomBandLimited);
        fam.dimension = dim;
        fam.cutoff = L;
        fam.seed = cfg.seed;
        fam.real_coefficients = cfg.real_coefficients;
        QuadratureGrid grid = default_grid(dim, L);
        std::span<const double> w(grid.weights);

        const std::size_t base = rep.trials.size();
        rep.trials.resize(base + trials);
        std::vector<double> lift_dev(trials, 0.0);
        parallel_for(0, trials, [&](int t) {
            SpectralField f = fam.draw(t);
            LevelValues lv = level_synthesis(f, grid);
            double lhs = tl_norm_from_levels(lv, w, 0.0, pp, 2.0);
            auto vals = sum_levels(lv);
            double rhs = weighted_lp(std::span<const Complex>(vals), w, p);
            rep.trials[base + t] = {L, t, lhs, rhs, rhs == 0.0 ? 0.0 : lhs / rhs};

            // Lifting identity through two genuinely distinct pipelines:
            // weight the level decomposition of f, versus re-synthesize H^s f.
            double a = tl_norm_from_levels(lv, w, s, pp, 2.0);
            SpectralField hf = apply_h_power(f, s);
            LevelValues lvh = level_synthesis(hf, grid);
            double b = tl_norm_from_levels(lvh, w, 0.0, pp, 2.0);
            lift_dev[t] = (b == 0.0) ? 0.0 : std::abs(a / b - 1.0);
        });
        for (double d : lift_dev) worst_lift = std::max(worst_lift, d);
    }
    if (worst_lift > lift_tol) lift_ok = false;
    rep.notes.push_back("lifting identity F^s_{p',2}(f) = F^0_{p',2}(H^s f) at s=" + fmt(s) +
                        ": max relative deviation " + fmt(worst_lift) +
                        " (tolerance " + fmt(lift_tol) + ")");
    attach_aggregate(rep);
    bool stable = stability_verdict(rep.aggregate.c_hat_by_cutoff, rep.notes);
    rep.pass = stable && lift_ok;
    if (!lift_ok) rep.notes.push_back("lifting identity violated");
    return rep;
}

// =======================================================================
// dispersive: || e^{-itH} f ||_{p'} <= C t^{-n|1/p - 1/2|} || f ||_p for
// 0 < t <= pi/4; records the normalized constant per (trial, t).
// =======================================================================

VerificationReport suite_dispersive(const SuiteConfig& cfg) {
    const int dim = cfg_dim(cfg, 1);
    const auto cutoffs = cfg_cutoffs(cfg, {8, 16});
    const double p = cfg_p(cfg, 1.5);
    std::vector<double> t_list = cfg.t_list.empty()
        ? std::vector<double>{0.05, 0.1, 0.2, 0.4, kPi / 4.0}
        : cfg.t_list;
    const int trials = cfg_trials(cfg, 200);

    require(p > 1.0 && p < 2.0, "1 < p < 2", "got p=" + fmt(p));
    for (double t : t_list)
        require(t > 0.0 && t <= kPi / 4.0 + 1e-15, "0 < t <= pi/4", "got t=" + fmt(t));

    VerificationReport rep;
    rep.suite = "dispersive";
    rep.tolerance = kStabilityFactor;
    rep.params = {{"dimension", dim}, {"cutoffs", cutoffs}, {"p", p},
                  {"t_list", t_list}, {"trials", trials}, {"seed", cfg.seed}};

    const double pp = conjugate_exponent(p);
    const double expo = dim * std::abs(1.0 / p - 0.5);
    double sin_max = 0.0;
    for (int L : cutoffs) {
        TrialFamily fam;
        fam.kind = cfg_family(cfg, TrialKind::RandomBandLimited);
        fam.dimension = dim;
        fam.cutoff = L;
        fam.seed = cfg.seed;
        fam.real_coefficients = cfg.real_coefficients;
        QuadratureGrid grid = default_grid(dim, L);
        std::span<const double> w(grid.weights);

        const std::size_t base = rep.trials.size();
        rep.trials.resize(base + static_cast<std::size_t>(trials) * t_list.size());
        std::vector<double> sin_local(trials, 0.0);
        parallel_for(0, trials, [&](int t) {
            SpectralField f = fam.draw(t);
            LevelValues lv = level_synthesis(f, grid);
            auto vals = sum_levels(lv);
            double fp = weighted_lp(std::span<const Complex>(vals), w, p);
            for (std::size_t ti = 0; ti < t_list.size(); ++ti) {
                double tt = t_list[ti];
                auto ut = oscillator_values(lv, std::span<const double>(&tt, 1));
                double upp = weighted_lp(std::span<const Complex>(ut), w, pp);
                double ratio = fp == 0.0 ? 0.0 : upp * std::pow(tt, expo) / fp;
                double sin_ratio = fp == 0.0 ? 0.0
                    : upp * std::pow(0.5 * std::abs(std::sin(2.0 * tt)), expo) / fp;
                sin_local[t] = std::max(sin_local[t], sin_ratio);
                const std::size_t slot = base + static_cast<std::size_t>(t) * t_list.size() + ti;
                rep.trials[slot] = {L, static_cast<int>(t * t_list.size() + ti),
                                    upp * std::pow(tt, expo), fp, ratio};
            }
        });
        for (double d : sin_local) sin_max = std::max(sin_max, d);
    }
    rep.notes.push_back("trial index = draw * |t_list| + t index");
    rep.notes.push_back("max constant with the sharper (|sin 2t|/2)^e time factor: " + fmt(sin_max));
    attach_aggregate(rep);
    rep.pass = stability_verdict(rep.aggregate.c_hat_by_cutoff, rep.notes);
    return rep;
}

// =======================================================================
// wainger: periodic fractional-integration embedding. F has Fourier
// coefficients a_l on 1 <= |l| <= D; G has |l|^{-alpha} a_l with
// alpha = 1/r - 1/q; then ||G||_{L^q(0,2pi)} <= C ||F||_{L^r(0,2pi)}.
// =======================================================================

VerificationReport suite_wainger(const SuiteConfig& cfg) {
    const double q = cfg_q(cfg, 6.0);
    const double r = cfg.r ? *cfg.r : 2.0;
    const auto degrees = cfg_cutoffs(cfg, {32, 64});
    const int trials = cfg_trials(cfg, 200);

    require(r > 1.0 && r <= q && !std::isinf(q), "1 < r <= q < inf",
            "got r=" + fmt(r) + ", q=" + fmt(q));

    VerificationReport rep;
    rep.suite = "wainger";
    rep.tolerance = kStabilityFactor;
    rep.params = {{"degrees", degrees}, {"q", q}, {"r", r},
                  {"trials", trials}, {"seed", cfg.seed}};

    const double alpha = 1.0 / r - 1.0 / q;
    for (int D : degrees) {
        const int nt = D * std::max(8, static_cast<int>(std::ceil(q)) + 2);
        TimeGrid tg = TimeGrid::periodic_uniform(kTwoPi, nt);
        const std::size_t base = rep.trials.size();
        rep.trials.resize(base + trials);
        parallel_for(0, trials, [&](int t) {
            TrialRng rng(cfg.seed, static_cast<std::uint64_t>(t));
            // Frequencies ordered +1, -1, +2, -2, ..., +D, -D so that a draw
            // at degree D is a prefix of the draw at degree 2D.
            std::vector<int> freqs;
            std::vector<Complex> a;
            double l2 = 0.0;
            for (int k = 1; k <= D; ++k) {
                for (int sgn : {+1, -1}) {
                    freqs.push_back(sgn * k);
                    Complex c = rng.complex_normal();
                    a.push_back(c);
                    l2 += std::norm(c);
                }
            }
            double inv = 1.0 / std::sqrt(l2);
            for (auto& c : a) c *= inv;

            double sum_f = 0.0, sum_g = 0.0;
            for (std::size_t j = 0; j < tg.nodes.size(); ++j) {
                double theta = tg.nodes[j];
                Complex F{0.0, 0.0}, G{0.0, 0.0};
                for (std::size_t m = 0; m < freqs.size(); ++m) {
                    Complex e = std::polar(1.0, freqs[m] * theta);
                    F += a[m] * e;
                    G += a[m] * std::pow(std::abs(static_cast<double>(freqs[m])), -alpha) * e;
                }
                sum_f += tg.weights[j] * std::pow(std::abs(F), r);
                sum_g += tg.weights[j] * std::pow(std::abs(G), q);
            }
            double rhs = std::pow(sum_f, 1.0 / r);
            double lhs = std::pow(sum_g, 1.0 / q);
            rep.trials[base + t] = {D, t, lhs, rhs, rhs == 0.0 ? 0.0 : lhs / rhs};
        });
    }
    rep.notes.push_back("cutoff column holds the Fourier degree D; alpha = 1/r - 1/q = " + fmt(alpha));
    attach_aggregate(rep);
    rep.pass = stability_verdict(rep.aggregate.c_hat_by_cutoff, rep.notes);
    return rep;
}

// =======================================================================
// mixed-orderings: Minkowski's integral inequality between the two mixed
// norms of the oscillator evolution.
// =======================================================================

VerificationReport suite_mixed_orderings(const SuiteConfig& cfg) {
    const int dim = cfg_dim(cfg, 1);
    const auto cutoffs = cfg_cutoffs(cfg, {12});
    const int L = cutoffs.front();
    std::vector<double> p_list = cfg.p_list.empty() ? std::vector<double>{4.0, 2.0, 3.0}
                                                    : cfg.p_list;
    std::vector<double> q_list = cfg.q_list.empty() ? std::vector<double>{2.0, 4.0, 3.0}
                                                    : cfg.q_list;
    require(p_list.size() == q_list.size(), "|p_list| = |q_list|",
            "exponent lists must pair up; got " + std::to_string(p_list.size()) + " and " +
                std::to_string(q_list.size()));
    const int trials = cfg_trials(cfg, 200);
    const double tol = cfg_tol(cfg, 1e-10);

    VerificationReport rep;
    rep.suite = "mixed-orderings";
    rep.tolerance = tol;
    rep.params = {{"dimension", dim}, {"cutoff", L}, {"p_list", p_list},
                  {"q_list", q_list}, {"trials", trials}, {"seed", cfg.seed}};

    TrialFamily fam;
    fam.kind = cfg_family(cfg, TrialKind::RandomBandLimited);
    fam.dimension = dim;
    fam.cutoff = L;
    fam.seed = cfg.seed;
    fam.real_coefficients = cfg.real_coefficients;
    QuadratureGrid grid = default_grid(dim, L);
    TimeGrid tg = TimeGrid::periodic_uniform(kTwoPi, 8 * std::max(L, 1));

    rep.trials.resize(static_cast<std::size_t>(trials) * p_list.size());
    std::vector<int> violations(trials, 0);
    parallel_for(0, trials, [&](int t) {
        SpectralField f = fam.draw(t);
        SpaceTimeField u = evolve_oscillator(f, tg, grid);
        for (std::size_t k = 0; k < p_list.size(); ++k) {
            double p = p_list[k], q = q_list[k];
            double xt = mixed_norm_xt(u, p, q);
            double tx = mixed_norm_tx(u, q, p);
            double ratio = tx == 0.0 ? 1.0 : xt / tx;
            const std::size_t slot = static_cast<std::size_t>(t) * p_list.size() + k;
            rep.trials[slot] = {L, static_cast<int>(t * p_list.size() + k), xt, tx, ratio};
            bool ok;
            if (q < p) ok = ratio <= 1.0 + tol;
            else if (p < q) ok = ratio >= 1.0 - tol;
            else ok = std::abs(ratio - 1.0) <= tol;
            if (!ok) violations[t]++;
        }
    });
    int total_violations = std::accumulate(violations.begin(), violations.end(), 0);
    rep.notes.push_back("trial index = draw * |p_list| + pair index; ratio = "
                        "L^p_x L^q_t norm over L^q_t L^p_x norm; the inner-exponent-larger "
                        "ordering dominates");
    if (total_violations > 0)
        rep.notes.push_back(std::to_string(total_violations) + " ordering violations");
    rep.pass = total_violations == 0;
    attach_aggregate(rep);
    return rep;
}

// =======================================================================
// corollary-l2: || e^{-itH} f ||_{L^p_x L^q_t(0,2pi)} <= C || f ||_{L^2}
// on the scaling line 1/q = (n/2)(1/2 - 1/p).
// =======================================================================

VerificationReport suite_corollary_l2(const SuiteConfig& cfg) {
    const int dim = cfg_dim(cfg, 3);
    const auto cutoffs = cfg_cutoffs(cfg, {8, 16});
    const double p = cfg_p(cfg, 3.0);
    const double q = cfg_q(cfg, 4.0);
    const int trials = cfg_trials(cfg, 200);

    require(std::abs(1.0 / q - 0.5 * dim * (0.5 - 1.0 / p)) <= 1e-9,
            "1/q = (n/2)(1/2 - 1/p)",
            "exponents off the scaling line: p=" + fmt(p) + ", q=" + fmt(q) +
                ", n=" + std::to_string(dim));
    require(q > 1.0 && !std::isinf(q), "1 < q < inf", "got q=" + fmt(q));
    require(p >= 2.0, "2 <= p", "got p=" + fmt(p));
    if (dim >= 3)
        require(p < 2.0 * dim / (dim - 2.0), "p < 2n/(n-2)",
                "got p=" + fmt(p) + " with 2n/(n-2)=" + fmt(2.0 * dim / (dim - 2.0)));
    else
        require(!std::isinf(p) || dim == 1, "p < inf",
                "in two dimensions the endpoint p = inf is excluded");

    VerificationReport rep;
    rep.suite = "corollary-l2";
    rep.tolerance = kStabilityFactor;
    rep.params = {{"dimension", dim}, {"cutoffs", cutoffs}, {"p", p}, {"q", q},
                  {"trials", trials}, {"seed", cfg.seed}};

    for (int L : cutoffs) {
        TrialFamily fam;
        fam.kind = cfg_family(cfg, TrialKind::RandomBandLimited);
        fam.dimension = dim;
        fam.cutoff = L;
        fam.seed = cfg.seed;
        fam.real_coefficients = cfg.real_coefficients;
        QuadratureGrid grid = default_grid(dim, L);
        std::span<const double> w(grid.weights);

        const std::size_t base = rep.trials.size();
        rep.trials.resize(base + trials);
        parallel_for(0, trials, [&](int t) {
            SpectralField f = fam.draw(t);
            LevelValues lv = level_synthesis(f, grid);
            double lhs = (q == 2.0) ? exact_l2t_lp(lv, w, p)
                                    : quad_mixed_xt(lv, w, L, p, q);
            double rhs = coefficient_l2(f);
            rep.trials[base + t] = {L, t, lhs, rhs, rhs == 0.0 ? 0.0 : lhs / rhs};
        });
    }
    attach_aggregate(rep);
    rep.pass = stability_verdict(rep.aggregate.c_hat_by_cutoff, rep.notes);
    return rep;
}

// =======================================================================
// lemma-t1: two-sided comparison of the mixed norm with the F^s_{p,2}
// norms: upper bound by F^{s_q}_{p,2}, lower bound by F^0_{p,2}, and the
// exact sqrt(2pi) collapse when q = 2, s = 0.
// =======================================================================

VerificationReport suite_lemma_t1(const SuiteConfig& cfg) {
    const int dim = cfg_dim(cfg, 1);
    const auto cutoffs = cfg_cutoffs(cfg, {8, 16});
    const double p = cfg_p(cfg, 4.0);
    const double q = cfg_q(cfg, 4.0);
    const double s_q = 0.5 - 1.0 / q;
    const double s = cfg_s(cfg, s_q);
    const int trials = cfg_trials(cfg, 100);

    require(p > 0.0, "0 < p <= inf", "got p=" + fmt(p));
    require(q >= 2.0 && !std::isinf(q), "2 <= q < inf", "got q=" + fmt(q));
    require(s >= s_q - 1e-12, "s >= s_q = 1/2 - 1/q",
            "got s=" + fmt(s) + " below s_q=" + fmt(s_q));

    VerificationReport rep;
    rep.suite = "lemma-t1";
    rep.tolerance = kStabilityFactor;
    rep.params = {{"dimension", dim}, {"cutoffs", cutoffs}, {"p", p}, {"q", q},
                  {"s", s}, {"trials", trials}, {"seed", cfg.seed}};

    const bool exact_case = (q == 2.0 && s == 0.0);
    std::map<int, double> lower_min;
    double worst_exact = 0.0;
    for (int L : cutoffs) {
        TrialFamily fam;
        fam.kind = cfg_family(cfg, TrialKind::RandomBandLimited);
        fam.dimension = dim;
        fam.cutoff = L;
        fam.seed = cfg.seed;
        fam.real_coefficients = cfg.real_coefficients;
        QuadratureGrid grid = std::isinf(p) ? sup_grid(dim, L) : default_grid(dim, L);
        std::span<const double> w(grid.weights);

        const std::size_t base = rep.trials.size();
        rep.trials.resize(base + trials);
        std::vector<double> lower(trials, 0.0), exact_dev(trials, 0.0);
        parallel_for(0, trials, [&](int t) {
            SpectralField f = fam.draw(t);
            LevelValues lv = level_synthesis(f, grid);
            double mixed = (q == 2.0) ? exact_l2t_lp(lv, w, p)
                                      : quad_mixed_xt(lv, w, L, p, q);
            double upper = tl_norm_from_levels(lv, w, s, p, 2.0);
            double floor0 = tl_norm_from_levels(lv, w, 0.0, p, 2.0);
            rep.trials[base + t] = {L, t, mixed, upper, upper == 0.0 ? 0.0 : mixed / upper};
            lower[t] = floor0 == 0.0 ? 0.0 : mixed / floor0;
            if (exact_case)
                exact_dev[t] = floor0 == 0.0 ? 0.0
                    : std::abs(mixed / (std::sqrt(kTwoPi) * floor0) - 1.0);
        });
        double mn = std::numeric_limits<double>::infinity();
        for (double v : lower) mn = std::min(mn, v);
        lower_min[L] = mn;
        for (double d : exact_dev) worst_exact = std::max(worst_exact, d);
    }
    attach_aggregate(rep);
    bool upper_ok = stability_verdict(rep.aggregate.c_hat_by_cutoff, rep.notes);

    // Lower bound: mixed norm / F^0_{p,2} must stay bounded away from zero
    // as the cutoff doubles (reverse stability).
    bool lower_ok = true;
    for (const auto& [L, mn] : lower_min) {
        auto it = lower_min.find(2 * L);
        if (it == lower_min.end()) continue;
        if (it->second < mn / kStabilityFactor) {
            lower_ok = false;
            rep.notes.push_back("lower-bound constant decayed from cutoff " + std::to_string(L) +
                                " (" + fmt(mn) + ") to cutoff " + std::to_string(2 * L) + " (" +
                                fmt(it->second) + ")");
        }
    }
    {
        std::string s_lower = "min mixed / F^0_{p,2} ratio by cutoff:";
        for (const auto& [L, mn] : lower_min) s_lower += " " + std::to_string(L) + ":" + fmt(mn);
        rep.notes.push_back(s_lower);
    }

    bool exact_ok = true;
    if (exact_case) {
        exact_ok = worst_exact <= 1e-10;
        rep.notes.push_back("q=2, s=0 collapse to sqrt(2pi) * F^0_{p,2}: max relative deviation " +
                            fmt(worst_exact));
    }
    rep.pass = upper_ok && lower_ok && exact_ok;
    return rep;
}

// =======================================================================
// mehler-oracle: closed-form oscillator heat kernel against its spectral
// partial sum, and selection between the two bracketing variants.
// =======================================================================

VerificationReport suite_mehler_oracle(const SuiteConfig& cfg) {
    std::vector<double> t_list = cfg.t_list.empty()
        ? std::vector<double>{0.25, 0.5, 1.0, 2.0}
        : cfg.t_list;
    const int degree = cfg.cutoffs.empty() ? 60 : cfg.cutoffs.front();
    const double tol = cfg_tol(cfg, 1e-6);
    for (double t : t_list)
        require(t > 0.0, "t > 0", "heat flow requires positive time; got t=" + fmt(t));

    VerificationReport rep;
    rep.suite = "mehler-oracle";
    rep.tolerance = tol;
    rep.params = {{"t_list", t_list}, {"max_degree", degree}};

    HeatKernelSelection sel = select_heat_kernel_variant(t_list, degree);
    rep.notes.push_back(std::string("selected kernel variant: ") +
                        (sel.variant == HeatKernelVariant::Symmetric ? "symmetric" : "as-printed"));
    rep.notes.push_back("max deviation from spectral sum: symmetric " + fmt(sel.symmetric_deviation) +
                        ", as-printed " + fmt(sel.printed_deviation));

    bool pass = true;
    for (std::size_t ti = 0; ti < t_list.size(); ++ti) {
        const double t = t_list[ti];
        double dev = 0.0, scale = 0.0;
        for (double x = -3.0; x <= 3.0 + 1e-12; x += 0.5) {
            for (double y = -3.0; y <= 3.0 + 1e-12; y += 0.5) {
                std::span<const double> xs(&x, 1), ys(&y, 1);
                double sum = heat_kernel_spectral_sum(t, xs, ys, degree);
                double closed = heat_kernel(t, xs, ys, sel.variant);
                dev = std::max(dev, std::abs(closed - sum));
                scale = std::max(scale, std::abs(sum));
            }
        }
        double ratio = scale == 0.0 ? 0.0 : dev / scale;
        rep.trials.push_back({degree, static_cast<int>(ti), dev, scale, ratio});
        if (ratio > tol) {
            pass = false;
            rep.notes.push_back("kernel mismatch at t=" + fmt(t) + ": relative deviation " + fmt(ratio));
        }
    }
    rep.notes.push_back("lhs = max |closed form - spectral sum| over [-3,3]^2, rhs = max |spectral sum|");
    rep.pass = pass;
    attach_aggregate(rep);
    return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {
        "identity-sqrt2pi", "multiplier-norm", "sjogren-torrea", "main-theorem",
        "lplq",             "lp-analogue",     "dispersive",     "wainger",
        "mixed-orderings",  "corollary-l2",    "lemma-t1",       "mehler-oracle",
    };
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    using Runner = VerificationReport (*)(const SuiteConfig&);
    static const std::map<std::string, Runner> registry = {
        {"identity-sqrt2pi", &suite_identity_sqrt2pi},
        {"multiplier-norm", &suite_multiplier_norm},
        {"sjogren-torrea", &suite_sjogren_torrea},
        {"main-theorem", &suite_main_theorem},
        {"lplq", &suite_lplq},
        {"lp-analogue", &suite_lp_analogue},
        {"dispersive", &suite_dispersive},
        {"wainger", &suite_wainger},
        {"mixed-orderings", &suite_mixed_orderings},
        {"corollary-l2", &suite_corollary_l2},
        {"lemma-t1", &suite_lemma_t1},
        {"mehler-oracle", &suite_mehler_oracle},
    };
    auto it = registry.find(name);
    if (it == registry.end()) {
        std::string known;
        for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unknown suite '" + name + "'; known suites: " + known);
    }
    return it->second(cfg);
}

}  // namespace hosc
