// qsurf command-line front end: code inspection, single decodes, exhaustive
// beta enumeration, closed-form curves, thresholds, Monte Carlo sweeps, and
// one-shot reproduction of the reference tables and figure data.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli_util.hpp"
#include "json.hpp"
#include "qsurf/analysis.hpp"
#include "qsurf/enumeration.hpp"
#include "qsurf/montecarlo.hpp"
#include "reproduce.hpp"

using namespace qsurf;
using nlohmann::json;

namespace {

struct CommonCode {
    std::string spec = "3,3";
    bool xzzx = false;
};

void add_code_options(CLI::App* cmd, CommonCode& cc) {
    cmd->add_option("--code", cc.spec, "code distances dX,dZ (dZ defaults to dX)");
    cmd->add_flag("--xzzx", cc.xzzx, "build the xzzx variant");
}

std::vector<double> make_grid(double lo, double hi, int points, const std::string& spacing) {
    if (points < 2) return {lo};
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) {
        if (spacing == "log")
            g[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (points - 1));
        else
            g[i] = lo + (hi - lo) * i / (points - 1);
    }
    return g;
}

int run_describe(const CommonCode& cc, const std::string& out_path) {
    SurfaceCode code = qcli::make_code(cc.spec, cc.xzzx);
    json j;
    j["provenance"] = qcli::provenance_json();
    j["n"] = code.n;
    j["k"] = code.k;
    j["d_x"] = code.dx;
    j["d_z"] = code.dz;
    j["variant"] = code.variant == Variant::xzzx ? "xzzx" : "css";
    j["id"] = code.id();
    json gens = json::array();
    for (const Pauli& g : code.generators) gens.push_back(to_string(g));
    j["generators"] = gens;
    j["logical_x"] = to_string(code.logical_x);
    j["logical_z"] = to_string(code.logical_z);
    qcli::emit(out_path, j.dump(2) + "\n");
    return 0;
}

int run_decode(const CommonCode& cc, const std::string& decoder, const std::string& error_text,
               const std::string& bias_text, double rho, double px, double py, double pz,
               const std::string& out_path) {
    SurfaceCode code = qcli::make_code(cc.spec, cc.xzzx);
    Decoder dec = qcli::parse_decoder(decoder);
    Channel ch;
    bool have_channel = false;
    if (rho >= 0) {
        ch = channel_from_bias(rho, qcli::parse_bias(bias_text));
        have_channel = true;
    } else if (px >= 0 || py >= 0 || pz >= 0) {
        ch = channel_from_probs(std::max(px, 0.0), std::max(py, 0.0), std::max(pz, 0.0));
        have_channel = true;
    }
    Pauli err = parse_pauli(code.n, error_text);
    DecodeOutcome out = decode_and_judge(code, have_channel ? &ch : nullptr, dec, err);
    json j;
    j["provenance"] = qcli::provenance_json();
    j["code"] = code.id();
    j["decoder"] = decoder;
    j["error"] = to_string(err);
    std::string syn;
    Syndrome s = syndrome(code, err);
    for (int i = 0; i < s.m; ++i) syn += s.bits.test(i) ? '1' : '0';
    j["syndrome"] = syn;
    j["correction"] = to_string(out.correction);
    j["residual_class"] = std::string(1, to_char(out.residual_class));
    j["success"] = out.success;
    qcli::emit(out_path, j.dump(2) + "\n");
    return 0;
}

int run_enumerate(const CommonCode& cc, const std::string& decoder, int max_weight,
                  uint64_t budget, double rho, const std::string& bias_text, int workers,
                  bool table1, const std::string& out_path) {
    SurfaceCode code = qcli::make_code(cc.spec, cc.xzzx);
    Decoder dec = qcli::parse_decoder(decoder);
    Channel ch;
    const Channel* chp = nullptr;
    if (dec == Decoder::ml) {
        ch = channel_from_bias(rho < 0 ? 0.1 : rho, qcli::parse_bias(bias_text));
        chp = &ch;
    }
    BetaTable table = enumerate_beta(code, dec, chp, max_weight, budget, workers);
    if (!table1) {
        qcli::emit(out_path, qcli::with_provenance(beta_table_to_json(table)));
        return 0;
    }
    std::ostringstream out;
    out << qcli::provenance_comment();
    for (const BetaRow& row : table.rows) {
        if (row.weight < 2) continue;
        out << "code,1-beta_" << row.weight << ",1-beta_" << row.weight << "^Z";
        for (const ClassCount& c : row.classes) out << ',' << c.cls.label();
        out << '\n';
        out << '"' << table.code_id << '"' << ',' << row.one_minus_beta << ','
            << row.one_minus_beta_z;
        for (const ClassCount& c : row.classes) out << ',' << c.fraction();
        out << '\n';
    }
    qcli::emit(out_path, out.str());
    return 0;
}

int run_analytic(const std::string& formula, int n, int t, int eg, int ez,
                 const std::string& bias_text, int exponent, double one_minus_beta,
                 std::vector<double> betas, int beta_start, std::vector<double> rhos,
                 double rho_min, double rho_max, int points, const std::string& spacing,
                 const std::string& out_path) {
    if (rhos.empty()) rhos = make_grid(rho_min, rho_max, points, spacing);
    double bias = qcli::parse_bias(bias_text);

    std::function<double(double)> f;
    if (formula == "bounded") {
        f = [=](double r) { return logical_error_bounded(n, t, r); };
    } else if (formula == "asym") {
        f = [=](double r) {
            double pz = std::isinf(bias) ? r : bias * r / (bias + 2.0);
            return logical_error_asym(n, eg, ez, pz, r);
        };
    } else if (formula == "alpha") {
        f = [=](double r) { return logical_error_alpha_form(n, eg, ez, r, bias); };
    } else if (formula == "beta") {
        BetaVector bv{beta_start > 0 ? beta_start : t + 1, betas};
        f = [=](double r) { return logical_error_beta(n, t, r, bv); };
    } else if (formula == "beta-z") {
        BetaVector bv{beta_start > 0 ? beta_start : t + 1, betas};
        f = [=](double r) { return logical_error_beta_z(n, t, r, bv); };
    } else if (formula == "asymptote") {
        f = [=](double r) { return asymptotic_logical_error(n, exponent, r, one_minus_beta); };
    } else {
        throw std::invalid_argument("unknown formula: " + formula);
    }

    std::ostringstream out;
    out << qcli::provenance_comment() << "rho,rho_L\n";
    for (double r : rhos) out << r << ',' << f(r) << '\n';
    qcli::emit(out_path, out.str());
    return 0;
}

int run_threshold(int n, int t, double gamma, double one_minus_beta, std::vector<double> betas,
                  int beta_start, const std::string& out_path) {
    json j;
    j["provenance"] = qcli::provenance_json();
    j["n"] = n;
    j["t"] = t;
    j["gamma"] = gamma;
    double omb = one_minus_beta;
    if (!betas.empty()) {
        BetaVector bv{beta_start > 0 ? beta_start : t + 1, betas};
        if (omb < 0) omb = 1.0 - bv.beta(t + 1);
        Threshold ex = code_effective_threshold_exact(
            [&](double r) { return logical_error_beta(n, t, r, bv); }, gamma);
        j["exact"] = {{"found", ex.found}, {"rho_thr", ex.found ? ex.value : 0.0}};
    }
    if (omb < 0) throw std::invalid_argument("need --one-minus-beta or --betas");
    j["approx"] = {{"rho_thr", code_effective_threshold_approx(n, t, omb, gamma)},
                   {"one_minus_beta_next", omb}};
    qcli::emit(out_path, j.dump(2) + "\n");
    return 0;
}

int run_simulate(const CommonCode& cc, const std::string& decoder, std::vector<double> rhos,
                 const std::string& bias_text, uint64_t trials, uint64_t seed, int workers,
                 const std::string& out_path) {
    SurfaceCode code = qcli::make_code(cc.spec, cc.xzzx);
    Decoder dec = qcli::parse_decoder(decoder);
    double bias = qcli::parse_bias(bias_text);
    std::vector<SimEstimate> pts = sweep(code, dec, rhos, bias, trials, seed, workers);
    std::ostringstream out;
    out << qcli::provenance_comment() << "rho,A,trials,failures,p_hat,ci_lo,ci_hi\n";
    for (const SimEstimate& e : pts) {
        out << e.rho << ',' << qcli::bias_label(e.bias) << ',' << e.trials << ',' << e.failures
            << ',' << e.p_hat << ',' << e.ci_lo << ',' << e.ci_hi << '\n';
    }
    qcli::emit(out_path, out.str());
    return 0;
}

// points.csv -> gnuplot script; curve files plot as lines, point files with
// error bars. Empty inputs produce a script with no plot lines and a warning.
int run_plot_emit(const std::vector<std::string>& points, const std::vector<std::string>& curves,
                  bool with_uncoded, const std::string& out_path) {
    auto has_data = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot read " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            if (line.find_first_of("0123456789") != std::string::npos &&
                line.rfind("rho", 0) != 0)
                return true;
        }
        return false;
    };
    std::ostringstream gp;
    gp << qcli::provenance_comment();
    gp << "set datafile separator ','\n"
       << "set logscale xy\nset xlabel 'rho'\nset ylabel 'rho_L'\nset key left top\n";
    std::vector<std::string> plots;
    for (const std::string& p : points) {
        if (!has_data(p)) {
            std::cerr << "warning: no data rows in " << p << ", skipping\n";
            continue;
        }
        plots.push_back("'" + p + "' using 1:5:6:7 with yerrorbars title '" + p + "'");
    }
    for (const std::string& c : curves) {
        if (!has_data(c)) {
            std::cerr << "warning: no data rows in " << c << ", skipping\n";
            continue;
        }
        plots.push_back("'" + c + "' using 1:2 with lines title '" + c + "'");
    }
    if (with_uncoded) plots.push_back("x with lines lc 'black' title 'uncoded'");
    if (plots.empty()) {
        gp << "# nothing to plot\n";
    } else {
        gp << "plot ";
        for (size_t i = 0; i < plots.size(); ++i) gp << (i ? ", \\\n     " : "") << plots[i];
        gp << "\n";
    }
    qcli::emit(out_path, gp.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    qcli::capture_command(argc, argv);
    CLI::App app{"surface code construction, decoding and performance analysis"};
    app.require_subcommand(1);
    int workers = default_workers();
    app.add_option("--workers", workers, "worker thread count (default: QSURF_WORKERS or cores)");

    // describe
    CommonCode dcc;
    std::string dout;
    auto* cmd_desc = app.add_subcommand("describe", "print code structure as JSON");
    add_code_options(cmd_desc, dcc);
    cmd_desc->add_option("--out", dout, "output path (default stdout)");

    // decode
    CommonCode ccc;
    std::string cdec = "mwpm", cerr_text = "I", cbias = "1", cout_path;
    double crho = -1, cpx = -1, cpy = -1, cpz = -1;
    auto* cmd_dec = app.add_subcommand("decode", "decode one error and judge the outcome");
    add_code_options(cmd_dec, ccc);
    cmd_dec->add_option("--decoder", cdec, "mwpm | ml");
    cmd_dec->add_option("--error", cerr_text, "error in text form, e.g. 'Z2 Z3'")->required();
    cmd_dec->add_option("--rho", crho, "channel error probability");
    cmd_dec->add_option("--bias", cbias, "channel bias A >= 1 or inf");
    cmd_dec->add_option("--px", cpx, "explicit X probability");
    cmd_dec->add_option("--py", cpy, "explicit Y probability");
    cmd_dec->add_option("--pz", cpz, "explicit Z probability");
    cmd_dec->add_option("--out", cout_path, "output path (default stdout)");

    // enumerate-beta
    CommonCode ecc;
    std::string edec = "mwpm", ebias = "1", eout;
    int emax = 3;
    uint64_t ebudget = kDefaultBudget;
    double erho = -1;
    bool etable1 = false;
    auto* cmd_enum = app.add_subcommand("enumerate-beta",
                                        "exhaustive per-class non-correctable fractions");
    add_code_options(cmd_enum, ecc);
    cmd_enum->add_option("--decoder", edec, "mwpm | ml");
    cmd_enum->add_option("--max-weight", emax, "largest error weight to enumerate");
    cmd_enum->add_option("--budget", ebudget, "max decodes per class");
    cmd_enum->add_option("--rho", erho, "channel rho (ml decoder only)");
    cmd_enum->add_option("--bias", ebias, "channel bias (ml decoder only)");
    cmd_enum->add_flag("--table1", etable1, "emit the class-percentage table layout as CSV");
    cmd_enum->add_option("--out", eout, "output path (default stdout)");

    // analytic
    std::string aformula = "bounded", abias = "1", aspacing = "log", aout;
    int an = 13, at = 1, aeg = 1, aez = 0, aexp = 2, abeta_start = -1, apoints = 30;
    double aomb = 1.0, armin = 1e-3, armax = 0.2;
    std::vector<double> abetas, arhos;
    auto* cmd_ana = app.add_subcommand("analytic", "evaluate closed-form curves to CSV");
    cmd_ana->add_option("--formula", aformula, "bounded|asym|alpha|beta|beta-z|asymptote");
    cmd_ana->add_option("--n", an, "block length");
    cmd_ana->add_option("--t", at, "correction radius (also t_Z for beta-z)");
    cmd_ana->add_option("--eg", aeg, "generic-error capability");
    cmd_ana->add_option("--ez", aez, "extra Z capability");
    cmd_ana->add_option("--bias", abias, "channel bias A or inf");
    cmd_ana->add_option("--exponent", aexp, "asymptote exponent");
    cmd_ana->add_option("--one-minus-beta", aomb, "asymptote prefactor");
    cmd_ana->add_option("--betas", abetas, "beta values from --beta-start upward")
        ->delimiter(',');
    cmd_ana->add_option("--beta-start", abeta_start, "first weight in --betas (default t+1)");
    cmd_ana->add_option("--rho", arhos, "explicit rho values")->delimiter(',');
    cmd_ana->add_option("--rho-min", armin, "grid start");
    cmd_ana->add_option("--rho-max", armax, "grid end");
    cmd_ana->add_option("--points", apoints, "grid size");
    cmd_ana->add_option("--spacing", aspacing, "log | lin");
    cmd_ana->add_option("--out", aout, "output path (default stdout)");

    // threshold
    int tn = 13, tt = 1, tbeta_start = -1;
    double tgamma = 0.0, tomb = -1;
    std::vector<double> tbetas;
    std::string tout;
    auto* cmd_thr = app.add_subcommand("threshold", "code-effective threshold (exact + approx)");
    cmd_thr->add_option("--n", tn, "block length");
    cmd_thr->add_option("--t", tt, "correction radius (use eg+ez for phase-flip)");
    cmd_thr->add_option("--gamma", tgamma, "performance-boost exponent");
    cmd_thr->add_option("--one-minus-beta", tomb, "1 - beta_{t+1} for the approximation");
    cmd_thr->add_option("--betas", tbetas, "beta values for the exact bisection")->delimiter(',');
    cmd_thr->add_option("--beta-start", tbeta_start, "first weight in --betas (default t+1)");
    cmd_thr->add_option("--out", tout, "output path (default stdout)");

    // simulate
    CommonCode scc;
    std::string sdec = "mwpm", sbias = "1", sout;
    std::vector<double> srhos;
    uint64_t strials = 100000, sseed = 1;
    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo logical error rate sweep");
    add_code_options(cmd_sim, scc);
    cmd_sim->add_option("--decoder", sdec, "mwpm | ml");
    cmd_sim->add_option("--rho", srhos, "rho values")->required()->delimiter(',');
    cmd_sim->add_option("--bias", sbias, "channel bias A or inf");
    cmd_sim->add_option("--trials", strials, "trials per point");
    cmd_sim->add_option("--seed", sseed, "master seed");
    cmd_sim->add_option("--out", sout, "output path (default stdout)");

    // reproduce
    qcli::ReproduceConfig rcfg;
    auto* cmd_rep = app.add_subcommand("reproduce",
                                       "regenerate the reference table and figure data");
    cmd_rep->add_option("--target", rcfg.target, "table1|fig2|fig3|fig4|fig5|all")->required();
    cmd_rep->add_option("--out-dir", rcfg.out_dir, "output directory")->required();
    cmd_rep->add_option("--trials", rcfg.trials, "trials per simulated point");
    cmd_rep->add_option("--seed", rcfg.seed, "master seed");
    cmd_rep->add_option("--budget", rcfg.budget, "enumeration budget per class");

    // plot-emit
    std::vector<std::string> ppoints, pcurves;
    std::string pout;
    bool puncoded = false;
    auto* cmd_plot = app.add_subcommand("plot-emit", "emit a gnuplot script for CSV data");
    cmd_plot->add_option("--points", ppoints, "simulation point CSVs");
    cmd_plot->add_option("--curves", pcurves, "analytic curve CSVs");
    cmd_plot->add_flag("--with-uncoded", puncoded, "include the uncoded rho_L = rho line");
    cmd_plot->add_option("--out", pout, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_desc) return run_describe(dcc, dout);
        if (*cmd_dec)
            return run_decode(ccc, cdec, cerr_text, cbias, crho, cpx, cpy, cpz, cout_path);
        if (*cmd_enum)
            return run_enumerate(ecc, edec, emax, ebudget, erho, ebias, workers, etable1, eout);
        if (*cmd_ana)
            return run_analytic(aformula, an, at, aeg, aez, abias, aexp, aomb, abetas,
                                abeta_start, arhos, armin, armax, apoints, aspacing, aout);
        if (*cmd_thr) return run_threshold(tn, tt, tgamma, tomb, tbetas, tbeta_start, tout);
        if (*cmd_sim) return run_simulate(scc, sdec, srhos, sbias, strials, sseed, workers, sout);
        if (*cmd_rep) {
            rcfg.workers = workers;
            qcli::run_reproduce(rcfg);
            return 0;
        }
        if (*cmd_plot) return run_plot_emit(ppoints, pcurves, puncoded, pout);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
