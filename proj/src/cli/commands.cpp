#include "todakdv/cli/commands.hpp"

#include "todakdv/bloch/discriminant.hpp"
#include "todakdv/cli/config.hpp"
#include "todakdv/lattice/asymptotic.hpp"
#include "todakdv/lattice/io.hpp"
#include "todakdv/solver/compare.hpp"
#include "todakdv/symbolic/conserved_series.hpp"
#include "todakdv/symbolic/extend.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace todakdv::cli {

namespace {

namespace fs = std::filesystem;
using lattice::fmt;

struct Options {
    // verify / expand / extend
    int flow = 2;
    int through = -1;
    int truncate_R = -1;
    std::string recursion = "staggered";
    std::string expr;
    int order = 5;
    bool constant_f = false;
    // simulate / conserved / spectrum
    int N = 64;
    double dt = 1e-3;
    double t_end = 1.0;
    std::string scheme = "cn";
    std::string init = "builtin:cos";
    std::string init_variant = "consistent";
    int output_every = 100;
    double newton_tol = 1e-12;
    int newton_max_iter = 25;
    int reference_grid = 256;
    std::string input;
    int depth = 3;
    std::string g = "builtin:zero";
    double lambda_max = 200;
    int samples = 2048;
    double tol = 1e-11;
    std::uint64_t seed = 1;
    std::string out;
    std::string config;
};

symbolic::Recursion parse_recursion(const std::string& s)
{
    if (s == "staggered")
        return symbolic::Recursion::staggered;
    if (s == "aligned")
        return symbolic::Recursion::aligned;
    throw CLI::ValidationError("--recursion", "expected staggered or aligned");
}

std::string resolve_builtin(std::string name, std::uint64_t seed)
{
    if (name == "random")
        name += ":" + std::to_string(seed);
    return name;
}

std::string strip_prefix(const std::string& s, const std::string& prefix)
{
    if (s.rfind(prefix, 0) != 0)
        throw std::invalid_argument("expected '" + prefix + "<...>', got '" + s + "'");
    return s.substr(prefix.size());
}

void prepare_out(const std::string& dir, const RunConfig& cfg)
{
    fs::create_directories(dir);
    cfg.save((fs::path(dir) / "config.txt").string());
}

std::ofstream open_out(const std::string& dir, const std::string& name)
{
    std::ofstream f(fs::path(dir) / name);
    if (!f)
        throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
    return f;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    auto R = symbolic::standard_R();
    if (o.truncate_R >= 0)
        for (int k = o.truncate_R + 1; k <= R.cap(); ++k)
            R.set_coeff(k, {});
    symbolic::Hierarchy h(R, diffpoly::kDefaultCap, parse_recursion(o.recursion));
    int through = o.through < 0 ? 8 : o.through;
    auto res = h.residual(o.flow, through);
    auto resA = h.residual_A(o.flow, through);
    out << "flow " << o.flow << " residual (B equation)\n" << res.str();
    out << "flow " << o.flow << " residual (A equation)\n" << resA.str();
    auto p = symbolic::first_nonzero(res);
    auto pA = symbolic::first_nonzero(resA);
    if (!p && !pA) {
        out << "flow " << o.flow << ": residual zero through eps^" << through << '\n';
        return kOk;
    }
    int first = std::min(p.value_or(1 << 30), pA.value_or(1 << 30));
    const auto& s = p && *p == first ? res : resA;
    out << "flow " << o.flow << ": first nonzero residual at eps^" << first << " : " << s.coeff(first).str() << '\n';
    return kVerifyFailed;
}

int cmd_expand(const Options& o, std::ostream& out)
{
    bool aligned = parse_recursion(o.recursion) == symbolic::Recursion::aligned;
    const std::string& e = o.expr;
    if (e == "R") {
        auto R = symbolic::standard_R();
        out << R.with_cap(o.through < 0 ? 5 : std::min(o.through, R.cap())).str();
        return kOk;
    }
    if (e.size() == 2 && e[0] == 'Z' && e[1] >= '1' && e[1] <= '4') {
        symbolic::Hierarchy h(symbolic::standard_R(), diffpoly::kDefaultCap, parse_recursion(o.recursion));
        auto Z = h.flow(e[1] - '0').Z;
        out << Z.with_cap(o.through < 0 ? 6 : std::min(o.through, Z.cap())).str();
        return kOk;
    }
    if (e == "C1" || e == "C2" || e == "C3") {
        auto cs = symbolic::conserved_series(aligned);
        const auto& s = e == "C1" ? cs.C1 : e == "C2" ? cs.C2 : cs.C3;
        std::string text = s.str(std::min(s.valuation(), s.cap()));
        if (o.through >= 0) {
            std::istringstream in(text);
            std::string line, kept;
            while (std::getline(in, line)) {
                int k = std::stoi(line.substr(4));
                if (k <= o.through)
                    kept += line + '\n';
            }
            text = kept;
        }
        out << text;
        return kOk;
    }
    throw CLI::ValidationError("expr", "expected R, Z1..Z4, C1, C2 or C3");
}

int cmd_extend(const Options& o, std::ostream& out)
{
    symbolic::ExtendOptions eo;
    eo.flow = o.flow;
    eo.constant_f = o.constant_f;
    eo.recursion = parse_recursion(o.recursion);
    auto R = symbolic::standard_R();
    for (int k = o.order + 1; k <= R.cap(); ++k)
        R.set_coeff(k, {});
    auto r = symbolic::extend_R(R, o.order, eo);
    out << r.report;
    if (!r.report.empty() && r.report.back() != '\n')
        out << '\n';
    if (r.ok)
        out << "eps^" << r.order << " : " << r.coefficient.str() << '\n';
    return r.ok ? kOk : kVerifyFailed;
}

lattice::LatticeState initial_state(const Options& o, std::optional<lattice::FourierProfile>& closed, std::ostream& err)
{
    auto variant = lattice::parse_init_variant(o.init_variant);
    if (o.init.rfind("builtin:", 0) == 0) {
        auto name = resolve_builtin(strip_prefix(o.init, "builtin:"), o.seed);
        auto p = lattice::sample_builtin(name, o.N);
        closed = p.closed_form;
        return lattice::init_from_profile(p, variant);
    }
    auto path = strip_prefix(o.init, "csv:");
    auto v = lattice::read_init_csv(path);
    if (auto* s = std::get_if<lattice::LatticeState>(&v)) {
        if (s->N != o.N)
            err << "note: using N = " << s->N << " from " << path << '\n';
        return *s;
    }
    auto& p = std::get<lattice::Profile>(v);
    if (p.N() != o.N)
        err << "note: using N = " << p.N() << " from " << path << '\n';
    return lattice::init_from_profile(p, variant);
}

int cmd_simulate(const Options& o, const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::optional<lattice::FourierProfile> closed;
    auto s0 = initial_state(o, closed, err);
    solver::SolverConfig sc;
    sc.dt = o.dt;
    sc.t_end = o.t_end;
    sc.scheme = solver::parse_scheme(o.scheme);
    sc.newton_tol = o.newton_tol;
    sc.newton_max_iter = o.newton_max_iter;
    sc.output_every = o.output_every;
    sc.validate();

    prepare_out(o.out, cfg);
    auto traj_csv = open_out(o.out, "trajectory.csv");
    auto cons_csv = open_out(o.out, "conserved.csv");
    lattice::write_trajectory_header(traj_csv);
    lattice::write_conserved_header(cons_csv);
    auto sink = [&](const solver::Snapshot& snap) {
        lattice::write_trajectory_rows(traj_csv, snap.t, snap.state);
        lattice::write_conserved_row(cons_csv, snap.conserved);
    };
    solver::Trajectory traj;
    try {
        traj = solver::run(s0, sc, sink);
    } catch (const solver::NumericalFailure& e) {
        err << "numerical failure at step " << e.step << ": " << e.what() << '\n';
        return kNumerical;
    }
    out << "steps " << traj.steps << ", snapshots " << traj.snapshots.size() << '\n';
    for (int i = 1; i <= 3; ++i)
        out << "max relative drift d" << i << " = " << fmt(traj.max_drift(i)) << '\n';
    if (closed) {
        solver::ReferenceOptions ro;
        ro.grid = o.reference_grid;
        const auto& last = traj.snapshots.back();
        auto cmp = solver::compare_state(last.state, *closed, last.t, ro);
        auto cmp_csv = open_out(o.out, "comparison.csv");
        solver::write_comparison_csv(cmp_csv, cmp);
        out << "t = " << fmt(last.t) << ": max error " << fmt(cmp.max_error) << ", rms error " << fmt(cmp.l2_error) << '\n';
    }
    return kOk;
}

int cmd_conserved(const Options& o, const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<lattice::TimedState> states;
    std::optional<lattice::FourierProfile> closed;
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in)
            throw std::invalid_argument("cannot open " + o.input);
        std::string header;
        std::getline(in, header);
        in.seekg(0);
        if (header.rfind("t,", 0) == 0)
            states = lattice::read_trajectory_csv(in);
        else
            states.push_back({0.0, lattice::read_state_csv(in)});
    } else {
        states.push_back({0.0, initial_state(o, closed, err)});
    }
    if (states.empty())
        throw std::invalid_argument("no states in input");

    std::vector<lattice::ConservedReport> reps;
    for (const auto& ts : states)
        reps.push_back(lattice::conserved_C(ts.state, ts.t));
    const auto& r0 = reps.front();
    std::ostringstream cons, drift;
    lattice::write_conserved_header(cons);
    drift << "t,drift_d1,drift_d2,drift_d3\n";
    long double worst[3] = {0, 0, 0};
    for (const auto& r : reps) {
        lattice::write_conserved_row(cons, r);
        long double d[3] = {r.dev1 - r0.dev1, r.dev2 - r0.dev2, r.dev3 - r0.dev3};
        drift << fmt(r.t) << ',' << fmt(d[0]) << ',' << fmt(d[1]) << ',' << fmt(d[2]) << '\n';
        for (int i = 0; i < 3; ++i)
            worst[i] = std::max(worst[i], std::fabs(d[i]));
    }
    out << cons.str();
    for (int i = 0; i < 3; ++i)
        out << "max |d" << i + 1 << "(t) - d" << i + 1 << "(0)| = " << fmt(worst[i]) << '\n';
    if (closed && !closed->is_constant()) {
        auto a = lattice::asymptotic_C(*closed, states.front().state.N, o.depth);
        out << "asymptotic C1 = " << fmt(a.C1) << ", C2 = " << fmt(a.C2) << ", C3 = " << fmt(a.C3)
            << " (golden C3 form " << fmt(a.C3_golden) << ")\n";
    }
    if (!o.out.empty()) {
        prepare_out(o.out, cfg);
        open_out(o.out, "conserved.csv") << cons.str();
        open_out(o.out, "drift.csv") << drift.str();
    }
    return kOk;
}

int cmd_spectrum(const Options& o, const RunConfig& cfg, std::ostream& out)
{
    auto g = lattice::builtin_profile(resolve_builtin(strip_prefix(o.g, "builtin:"), o.seed));
    if (o.N < 8)
        throw std::invalid_argument("N must be at least 8");
    auto samples = bloch::discriminant_scan(g, o.N, bloch::lambda_grid(o.lambda_max, o.samples), o.tol);
    auto bd = bloch::band_distance(samples, o.lambda_max);
    out << "band distance on [-" << fmt(o.lambda_max) << ", " << fmt(o.lambda_max) << "] = " << fmt(bd.distance)
        << (bd.coarse_grid ? " (warning: grid too coarse for some band)" : "") << '\n';
    if (o.out.empty())
        bloch::write_spectrum_csv(out, samples);
    else {
        prepare_out(o.out, cfg);
        auto f = open_out(o.out, "spectrum.csv");
        bloch::write_spectrum_csv(f, samples);
    }
    return kOk;
}

// Every option of the chosen subcommand, as given or defaulted, in declaration order.
RunConfig collect(const CLI::App& sub)
{
    RunConfig cfg;
    cfg.subcommand = sub.get_name();
    for (const CLI::Option* opt : sub.get_options()) {
        std::string name = opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front();
        if (name == "help" || name == "config")
            continue;
        if (opt->get_type_size() == 0) {
            cfg.set(name, opt->count() ? "true" : "false");
            continue;
        }
        std::string v = opt->count() ? opt->as<std::string>() : opt->get_default_str();
        if (!v.empty())
            cfg.set(name, v);
    }
    return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Toda lattice / KdV workbench"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "check that a flow satisfies the Toda equations through eps^8");
    verify->add_option("--flow", o.flow, "flow index")->check(CLI::Range(1, 4))->capture_default_str();
    verify->add_option("--through", o.through, "highest eps power checked (default 8)");
    verify->add_option("--truncate-R", o.truncate_R, "drop R coefficients above this eps power");
    verify->add_option("--recursion", o.recursion, "staggered|aligned")->capture_default_str();

    auto* expand = app.add_subcommand("expand", "print an expansion in canonical form");
    expand->add_option("expr,--expr", o.expr, "R, Z1..Z4, C1, C2, C3")->required();
    expand->add_option("--through", o.through, "highest eps power printed");
    expand->add_option("--recursion", o.recursion, "staggered|aligned")->capture_default_str();

    auto* extend = app.add_subcommand("extend", "solve for the next coefficient of R");
    extend->add_option("--order", o.order, "R is kept through this eps power")->check(CLI::Range(0, 7))->capture_default_str();
    extend->add_option("--flow", o.flow, "flow used for the fit")->check(CLI::Range(1, 4))->capture_default_str();
    extend->add_flag("--constant-f", o.constant_f, "restrict to constant f");
    extend->add_option("--recursion", o.recursion, "staggered|aligned")->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "integrate the lattice flow and compare against KdV");
    simulate->add_option("--N", o.N)->check(CLI::Range(8, 1 << 16))->capture_default_str();
    simulate->add_option("--dt", o.dt)->capture_default_str();
    simulate->add_option("--t-end", o.t_end)->capture_default_str();
    simulate->add_option("--scheme", o.scheme, "rk4|cn")->check(CLI::IsMember({"rk4", "cn"}))->capture_default_str();
    simulate->add_option("--init", o.init, "builtin:<name>|csv:<path>")->capture_default_str();
    simulate->add_option("--init-variant", o.init_variant, "paper|consistent")->capture_default_str();
    simulate->add_option("--output-every", o.output_every)->capture_default_str();
    simulate->add_option("--newton-tol", o.newton_tol)->capture_default_str();
    simulate->add_option("--newton-max-iter", o.newton_max_iter)->capture_default_str();
    simulate->add_option("--reference-grid", o.reference_grid)->capture_default_str();
    simulate->add_option("--seed", o.seed, "seed for builtin:random")->capture_default_str();
    simulate->add_option("--out", o.out, "output directory")->required();

    auto* conserved = app.add_subcommand("conserved", "conserved quantities of a state or trajectory");
    conserved->add_option("--input", o.input, "trajectory.csv or state CSV");
    conserved->add_option("--N", o.N)->check(CLI::Range(8, 1 << 16))->capture_default_str();
    conserved->add_option("--init", o.init, "builtin:<name>|csv:<path> when no --input")->capture_default_str();
    conserved->add_option("--init-variant", o.init_variant, "paper|consistent")->capture_default_str();
    conserved->add_option("--depth", o.depth, "terms of the asymptotic comparison")->check(CLI::Range(1, 3))->capture_default_str();
    conserved->add_option("--seed", o.seed, "seed for builtin:random")->capture_default_str();
    conserved->add_option("--out", o.out, "output directory");

    auto* spectrum = app.add_subcommand("spectrum", "discrete and continuous Floquet discriminants");
    spectrum->add_option("--g", o.g, "builtin:<name>")->capture_default_str();
    spectrum->add_option("--N", o.N)->capture_default_str();
    spectrum->add_option("--lambda-max", o.lambda_max)->capture_default_str();
    spectrum->add_option("--samples", o.samples)->check(CLI::NonNegativeNumber)->capture_default_str();
    spectrum->add_option("--tol", o.tol, "integrator tolerance")->capture_default_str();
    spectrum->add_option("--seed", o.seed, "seed for builtin:random")->capture_default_str();
    spectrum->add_option("--out", o.out, "output directory (CSV to stdout if absent)");

    auto* rerun = app.add_subcommand("rerun", "repeat a run from its config.txt");
    rerun->add_option("config", o.config)->required();
    rerun->add_option("--out", o.out, "replace the output directory");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (rerun->parsed()) {
            auto cfg = RunConfig::load(o.config);
            if (!o.out.empty())
                cfg.set("out", o.out);
            return run_cli(cfg.to_args(), out, err);
        }
        CLI::App* sub = app.get_subcommands().front();
        RunConfig cfg = collect(*sub);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (expand->parsed())
            return cmd_expand(o, out);
        if (extend->parsed())
            return cmd_extend(o, out);
        if (simulate->parsed())
            return cmd_simulate(o, cfg, out, err);
        if (conserved->parsed())
            return cmd_conserved(o, cfg, out, err);
        return cmd_spectrum(o, cfg, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
}

}  // namespace todakdv::cli
