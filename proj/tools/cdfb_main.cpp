// cdfb: evaluate Marcum / noncentral beta distributions, compute the bound
// families with optional oracle margins, run the grid verification suites,
// and bracket central beta quantiles.
//
// Exit codes: 0 success, 2 usage/domain error, 3 numeric error (convergence
// failure, singular denominator, bracket unavailable).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdfbounds/beta_nc.hpp"
#include "cdfbounds/errors.hpp"
#include "cdfbounds/kummer_ratios.hpp"
#include "cdfbounds/marcum.hpp"
#include "cdfbounds/quantile.hpp"
#include "cdfbounds/specfun.hpp"
#include "cdfbounds/verify.hpp"

namespace {

using namespace cdfbounds;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Output {
    std::string path;  // empty -> stdout
    std::string text;

    void line(const std::string& s) { text += s + "\n"; }
    void flush() const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::domain_error("cannot open output file: " + path);
        f << text;
    }
};

struct BoundRow {
    std::string family;
    std::string target;
    Side side;
    double value;
    std::optional<double> oracle;
    bool valid;
    std::string note;
};

std::string config_echo(const EvalConfig& cfg) {
    return "# rel_tol=" + fmt(cfg.rel_tol) + " max_terms=" + std::to_string(cfg.max_terms) +
           " validity_mode=" +
           (cfg.validity_mode == ValidityMode::proven ? "proven" : "conjectured");
}

nlohmann::json config_json(const EvalConfig& cfg) {
    return {{"rel_tol", cfg.rel_tol},
            {"max_terms", cfg.max_terms},
            {"validity_mode",
             cfg.validity_mode == ValidityMode::proven ? "proven" : "conjectured"}};
}

void emit_rows(Output& out, const std::vector<BoundRow>& rows, const std::string& format,
               const EvalConfig& cfg) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j;
            j["family"] = r.family;
            j["target"] = r.target;
            j["side"] = to_string(r.side);
            j["value"] = r.value;
            if (r.oracle) {
                j["oracle"] = *r.oracle;
                j["margin"] = r.side == Side::upper ? r.value - *r.oracle
                                                    : *r.oracle - r.value;
            }
            j["valid"] = r.valid;
            if (!r.note.empty()) j["note"] = r.note;
            arr.push_back(j);
        }
        out.line(nlohmann::json{{"config", config_json(cfg)}, {"rows", arr}}.dump());
        return;
    }
    out.line(config_echo(cfg));
    out.line("family,target,side,value,oracle,margin,valid");
    for (const auto& r : rows) {
        std::string oracle_s, margin_s;
        if (r.oracle) {
            oracle_s = fmt(*r.oracle);
            margin_s = fmt(r.side == Side::upper ? r.value - *r.oracle
                                                 : *r.oracle - r.value);
        }
        out.line(r.family + "," + r.target + "," + to_string(r.side) + "," + fmt(r.value) +
                 "," + oracle_s + "," + margin_s + "," + (r.valid ? "true" : "false"));
    }
}

void push_bound(std::vector<BoundRow>& rows, const std::string& family, const BoundValue& b,
                std::optional<double> oracle) {
    rows.push_back({family, b.target, b.side, b.value, oracle, b.valid, b.validity_note});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp bounds for noncentral gamma (Marcum) and beta distributions"};
    app.require_subcommand(1);
    app.fallthrough();

    EvalConfig cfg;
    std::string validity_mode = "proven";
    std::string format = "csv";
    std::string out_path;
    app.add_option("--rel-tol", cfg.rel_tol, "relative tolerance (default 1e-12)");
    app.add_option("--max-terms", cfg.max_terms, "series term cap (default 10000)");
    app.add_option("--validity-mode", validity_mode, "proven|conjectured")
        ->check(CLI::IsMember({"proven", "conjectured"}));
    app.add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a distribution");
    std::string dist;
    double e_mu = 1, e_a = 1, e_b = 1, e_x = 0, e_y = 0;
    eval->add_option("--dist", dist, "marcum|beta-nc")
        ->required()
        ->check(CLI::IsMember({"marcum", "beta-nc"}));
    eval->add_option("--mu", e_mu, "order (marcum)");
    eval->add_option("--a", e_a, "shape a (beta-nc)");
    eval->add_option("--b", e_b, "shape b (beta-nc)");
    eval->add_option("--x", e_x, "noncentrality")->required();
    eval->add_option("--y", e_y, "argument")->required();

    // bound
    auto* bound = app.add_subcommand("bound", "compute a bound family");
    std::string family;
    double b_mu = 1, b_nu = 1, b_a = 1, b_b = 1, b_x = 1, b_y = 0.5, b_rho = 0,
           b_aa = 1, b_bb = 1, b_z = 1;
    int b_n = 10;
    bool with_oracle = false;
    bound->add_option("--family", family,
                      "c-ratio|recurrence|order-shift|erf|incgamma|series|"
                      "beta-recurrence|beta-central-uu|beta-ratio|beta-series|"
                      "central-factor|kummer-sandwich")
        ->required();
    bound->add_option("--mu", b_mu, "order mu");
    bound->add_option("--nu", b_nu, "order nu");
    bound->add_option("--a", b_a, "beta shape a / kummer a");
    bound->add_option("--b", b_b, "beta shape b / kummer b");
    bound->add_option("--x", b_x, "noncentrality");
    bound->add_option("--y", b_y, "argument");
    bound->add_option("--z", b_z, "kummer argument");
    bound->add_option("--rho", b_rho, "noncentrality reduction factor in [0,1)");
    bound->add_option("--aa", b_aa, "erf-family variable a = sqrt(2x)");
    bound->add_option("--bb", b_bb, "erf-family variable b = sqrt(2y)");
    bound->add_option("--n", b_n, "series truncation N");
    bound->add_flag("--with-oracle", with_oracle, "also evaluate the oracle and margin");

    // verify
    auto* verify = app.add_subcommand("verify", "run the grid verification suites");
    std::string suite = "all";
    std::string grid = "default";
    std::string filter;
    verify->add_option("--suite", suite, "all|gamma|beta|kummer|quantile")
        ->check(CLI::IsMember({"all", "gamma", "beta", "kummer", "quantile"}));
    verify->add_option("--grid", grid, "default|dense")
        ->check(CLI::IsMember({"default", "dense"}));
    verify->add_option("--filter", filter, "only run families containing this substring");

    // quantile
    auto* quant = app.add_subcommand("quantile", "bracket and invert a central beta quantile");
    double q_a = 1, q_b = 1, q_beta = 0.01;
    quant->add_option("--a", q_a, "shape a")->required();
    quant->add_option("--b", q_b, "shape b")->required();
    quant->add_option("--beta", q_beta, "target probability")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.validity_mode =
        validity_mode == "conjectured" ? ValidityMode::conjectured : ValidityMode::proven;

    Output out;
    out.path = out_path;
    try {
        cfg.validate();
        if (eval->parsed()) {
            std::vector<BoundRow> rows;
            if (dist == "marcum") {
                const auto pq = marcum_pq({e_mu, e_x, e_y}, cfg);
                rows.push_back({"eval-marcum", "P_mu", Side::lower, pq.p, {}, true, ""});
                rows.push_back({"eval-marcum", "Q_mu", Side::lower, pq.q, {}, true, ""});
            } else {
                const auto bc = beta_nc_cdf({e_a, e_b, e_x, e_y}, cfg);
                rows.push_back({"eval-beta-nc", "B_ab", Side::lower, bc.b, {}, true, ""});
                rows.push_back({"eval-beta-nc", "Bbar_ab", Side::lower, bc.b_bar, {}, true, ""});
            }
            emit_rows(out, rows, format, cfg);
        } else if (bound->parsed()) {
            std::vector<BoundRow> rows;
            if (family == "c-ratio") {
                const auto cb = ratio_bound_c({b_mu, b_x, b_y}, cfg);
                std::optional<double> op, oq;
                if (with_oracle) {
                    const auto base = marcum_pq({b_mu, b_x, b_y}, cfg);
                    const auto next = marcum_pq({b_mu + 1.0, b_x, b_y}, cfg);
                    op = next.p / base.p;
                    oq = next.q / base.q;
                }
                push_bound(rows, family, cb.p_ratio_upper, op);
                push_bound(rows, family, cb.q_ratio_lower, oq);
            } else if (family == "recurrence") {
                const auto rb = recurrence_difference_bounds({b_mu, b_x, b_y}, cfg);
                std::optional<double> p0, p1, q0, q1;
                if (with_oracle) {
                    const auto base = marcum_pq({b_mu, b_x, b_y}, cfg);
                    const auto next = marcum_pq({b_mu + 1.0, b_x, b_y}, cfg);
                    p0 = base.p;
                    p1 = next.p;
                    q0 = base.q;
                    q1 = next.q;
                }
                push_bound(rows, family, rb.p_upper, p0);
                push_bound(rows, family, rb.p_next_upper, p1);
                push_bound(rows, family, rb.q_upper, q0);
                push_bound(rows, family, rb.q_next_upper, q1);
            } else if (family == "order-shift") {
                const auto os = order_shift_bound(b_nu, {b_mu, b_x, b_y}, cfg);
                std::optional<double> op, oq;
                if (with_oracle) {
                    const auto shifted = marcum_pq({b_nu, b_x, b_y}, cfg);
                    op = shifted.p;
                    oq = shifted.q;
                }
                push_bound(rows, family, os.p_upper, op);
                push_bound(rows, family, os.q_lower, oq);
            } else if (family == "erf") {
                const auto p = GammaParams::from_chi(b_nu, b_aa, b_bb);
                const auto set = erf_bounds(p, cfg);
                std::optional<double> qt;
                if (with_oracle) qt = marcum_pq(p, cfg).q;
                push_bound(rows, family, set.b1, qt);
                push_bound(rows, family, set.b2, qt);
                push_bound(rows, family, set.l1, qt);
                push_bound(rows, family, set.l2, qt);
            } else if (family == "incgamma") {
                const auto ib = incgamma_bounds({b_nu, b_x, b_y}, b_rho, cfg);
                std::optional<double> op, oq;
                if (with_oracle) {
                    const auto pq = marcum_pq({b_nu, b_x, b_y}, cfg);
                    op = pq.p;
                    oq = pq.q;
                }
                push_bound(rows, family, ib.p_upper, op);
                push_bound(rows, family, ib.q_lower, oq);
            } else if (family == "series") {
                const auto sb = series_lower_bound_p({b_mu, b_x, b_y}, b_n, cfg);
                std::optional<double> op, oq;
                if (with_oracle) {
                    const auto pq = marcum_pq({b_mu, b_x, b_y}, cfg);
                    op = pq.p;
                    oq = pq.q;
                }
                push_bound(rows, family, sb.p_lower, op);
                push_bound(rows, family, sb.q_lower, oq);
            } else if (family == "beta-recurrence" || family == "beta-central-uu") {
                const double x = family == "beta-central-uu" ? 0.0 : b_x;
                const auto rb = recurrence_difference_bounds_beta({b_a, b_b, x, b_y}, cfg);
                std::optional<double> ob, obn, obb, obbn;
                if (with_oracle) {
                    const auto full = beta_nc_cdf({b_a, b_b, x, b_y}, cfg);
                    const auto next = beta_nc_cdf({b_a + 1.0, b_b, x, b_y}, cfg);
                    ob = full.b;
                    obn = next.b;
                    obb = full.b_bar;
                    obbn = next.b_bar;
                }
                if (rb.b_upper.valid) {
                    push_bound(rows, family, rb.b_upper, ob);
                    push_bound(rows, family, rb.b_next_upper, obn);
                } else {
                    push_bound(rows, family, rb.bbar_upper, obb);
                    push_bound(rows, family, rb.bbar_next_upper, obbn);
                }
            } else if (family == "beta-ratio") {
                const auto rb = ratio_bound_a({b_a, b_b, b_x, b_y}, cfg);
                std::optional<double> oratio;
                if (with_oracle)
                    oratio = beta_nc_cdf({b_a + 1.0, b_b, b_x, b_y}, cfg).b /
                             beta_nc_cdf({b_a, b_b, b_x, b_y}, cfg).b;
                push_bound(rows, family, rb.kummer_form, oratio);
                push_bound(rows, family, rb.closed_form, oratio);
            } else if (family == "beta-series") {
                const auto sb = series_lower_bound_beta({b_a, b_b, b_x, b_y}, b_n, cfg);
                std::optional<double> ob, obb;
                if (with_oracle) {
                    const auto full = beta_nc_cdf({b_a, b_b, b_x, b_y}, cfg);
                    ob = full.b;
                    obb = full.b_bar;
                }
                push_bound(rows, family, sb.b_lower, ob);
                push_bound(rows, family, sb.bbar_lower, obb);
            } else if (family == "central-factor") {
                const auto cf = central_factor_bounds({b_a, b_b, b_x, b_y}, b_rho, cfg);
                std::optional<double> ob, obb;
                if (with_oracle) {
                    const auto full = beta_nc_cdf({b_a, b_b, b_x, b_y}, cfg);
                    ob = full.b;
                    obb = full.b_bar;
                }
                push_bound(rows, family, cf.b_upper, ob);
                push_bound(rows, family, cf.bbar_lower, obb);
                rows.push_back({family, "curious_margin", Side::lower, cf.curious_margin,
                                with_oracle ? std::optional<double>(0.0) : std::nullopt,
                                true, ""});
            } else if (family == "kummer-sandwich") {
                const auto d = ratio_h_diag(b_a, b_b, b_z, cfg);
                rows.push_back({family, "M'/M", Side::lower, d.d_lower,
                                std::optional<double>(d.g), true, "D(a,b,z)"});
                rows.push_back({family, "M'/M", Side::upper, d.d_upper,
                                std::optional<double>(d.g), true, "D(a,b-1,z)"});
                const auto s = shifted_ratio_bound(b_a, b_b, b_z, cfg);
                rows.push_back({family, "M(a+1,b,z)/M(a,b,z)", Side::upper, s.lambda_plus,
                                std::optional<double>(s.ratio), true, "lambda_plus"});
            } else {
                throw std::domain_error("unknown bound family: " + family);
            }
            emit_rows(out, rows, format, cfg);
        } else if (verify->parsed()) {
            auto reports = run_suite(suite, cfg, grid == "dense");
            if (!filter.empty()) {
                std::vector<SweepReport> kept;
                for (auto& r : reports)
                    if (r.family.find(filter) != std::string::npos) kept.push_back(std::move(r));
                reports = std::move(kept);
            }
            int total_cells = 0;
            bool all_pass = true;
            for (const auto& r : reports) {
                out.line(to_json(r));
                total_cells += r.cells_total;
                all_pass = all_pass && r.pass();
            }
            out.flush();
            if (reports.empty() || total_cells == 0) {
                std::cerr << "verify: empty grid (no families or cells matched)\n";
                return 2;
            }
            return all_pass ? 0 : 1;
        } else if (quant->parsed()) {
            const auto br = beta_quantile_bracket(q_a, q_b, q_beta, cfg);
            if (!br.converged) {
                std::cerr << "quantile: bracket iteration did not converge\n";
                return 3;
            }
            const double yq = beta_quantile_in(q_a, q_b, q_beta, br.y_l, br.y_u, cfg);
            if (format == "json") {
                nlohmann::json j;
                j["config"] = config_json(cfg);
                j["a"] = q_a;
                j["b"] = q_b;
                j["beta"] = q_beta;
                j["y_l"] = br.y_l;
                j["y_u"] = br.y_u;
                j["y_beta"] = yq;
                j["iterations_l"] = br.iterations_l;
                j["iterations_u"] = br.iterations_u;
                j["converged"] = br.converged;
                out.line(j.dump());
            } else {
                out.line(config_echo(cfg));
                out.line("a,b,beta,y_l,y_beta,y_u,iterations_l,iterations_u,converged");
                out.line(fmt(q_a) + "," + fmt(q_b) + "," + fmt(q_beta) + "," + fmt(br.y_l) +
                         "," + fmt(yq) + "," + fmt(br.y_u) + "," +
                         std::to_string(br.iterations_l) + "," +
                         std::to_string(br.iterations_u) + ",true");
            }
        }
        out.flush();
        return 0;
    } catch (const ConvergenceError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const SingularDenominatorError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const BracketUnavailableError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const NoCrossingError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
