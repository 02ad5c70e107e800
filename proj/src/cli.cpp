#include "pedal/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"

#include "pedal/emit.hpp"
#include "pedal/problems.hpp"

namespace pedal {

namespace {

Coeff coeff_arg(const std::string& text) {
    PowerSum ps = parse_power_sum(text);
    if (!ps.is_constant()) fail("SyntaxError", "expected a number, got '" + text + "'");
    return ps.constant_value();
}

Vec2 vec_arg(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        fail("SyntaxError", "expected 'x,y', got '" + text + "'");
    return {coeff_arg(text.substr(0, comma)).value(), coeff_arg(text.substr(comma + 1)).value()};
}

ConstTable const_table(const std::vector<std::string>& defs) {
    ConstTable t;
    for (const auto& d : defs) {
        auto eq = d.find('=');
        if (eq == std::string::npos)
            fail("SyntaxError", "constant binding must be name=value: '" + d + "'");
        t[d.substr(0, eq)] = coeff_arg(d.substr(eq + 1));
    }
    return t;
}

double env_tol(double fallback) {
    const char* v = std::getenv("PEDALCURVE_TOL");
    if (!v) return fallback;
    return std::strtod(v, nullptr);
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
    if (path.empty()) {
        out << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail("DomainError", "cannot open output file '" + path + "'");
    f << data;
}

nlohmann::ordered_json region_to_json(const RegionReport& rep) {
    nlohmann::ordered_json j;
    j["nu"] = rep.nu;
    j["N"] = rep.N;
    auto roots = nlohmann::ordered_json::array();
    for (const auto& r : rep.roots) roots.push_back(r.value);
    j["roots"] = std::move(roots);
    auto iv = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : rep.admissible)
        iv.push_back({lo, std::isinf(hi) ? -1.0 : hi});
    j["intervals"] = std::move(iv);
    return j;
}

int run_selftest(unsigned seed, std::ostream& out) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> small(-4, 4);
    std::uniform_int_distribution<int> expo(-2, 3);
    std::uniform_int_distribution<int> nz(1, 4);
    auto random_eq = [&]() {
        // random rational equation with integer exponents
        PowerSum n1, n0;
        for (int t = 0; t < 3; ++t) {
            n1.add_term(Rational(expo(rng)), Coeff(small(rng)));
            n0.add_term(Rational(expo(rng)), Coeff(small(rng)));
        }
        if (n1.is_zero()) n1 = PowerSum(Coeff(1));
        if (n0.is_zero()) n0 = PowerSum(Coeff(-1));
        return PedalEquation::linear(n1, n0);
    };
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        PedalEquation e = random_eq();
        Coeff k(Rational(nz(rng))), l(Rational(nz(rng)));
        auto Hk = named_transform(Tag::H, {k});
        auto Hl = named_transform(Tag::H, {l});
        auto Hkl = named_transform(Tag::H, {k * l});
        bool ok = apply_transform(compose({Hk, Hl}), e) == apply_transform(Hkl, e);
        auto I1 = named_transform(Tag::I, {Coeff(1)});
        ok = ok && apply_transform(compose({I1, I1}), e) == e;
        if (!ok) ++failures;
    }
    out << (failures == 0 ? "selftest: PASS (100 random identity checks)\n"
                          : "selftest: FAIL\n");
    return failures == 0 ? 0 : 1;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pedalcurve: plane curves, pedal coordinates and force problems"};
    app.require_subcommand(1);

    // transform
    auto* tcmd = app.add_subcommand("transform", "apply a transform pipeline to an equation");
    std::string t_eq, t_pipe;
    std::vector<std::string> t_consts;
    tcmd->add_option("--eq", t_eq, "pedal equation, e.g. \"1/p^2 = 2/r - 1\"")->required();
    tcmd->add_option("--pipe", t_pipe, "pipeline, e.g. \"H(2) * S(3)\"")->required();
    tcmd->add_option("--const", t_consts, "constant binding name=value");

    // force2pedal
    auto* fcmd = app.add_subcommand("force2pedal", "Theorem-2 map of (F, G, L, c)");
    std::string f_F = "0", f_G = "0", f_L, f_c;
    std::vector<std::string> f_consts;
    bool f_region = false;
    fcmd->add_option("--F", f_F, "central potential as a power sum in s = r^2");
    fcmd->add_option("--G", f_G, "Lorentz-like potential in s");
    fcmd->add_option("--L", f_L, "conserved L")->required();
    fcmd->add_option("--c", f_c, "conserved c")->required();
    fcmd->add_option("--const", f_consts, "constant binding name=value");
    fcmd->add_flag("--region", f_region, "also print the allowed-region report");

    // orbit
    auto* ocmd = app.add_subcommand("orbit", "integrate an orbit and export CSV");
    std::string o_F = "0", o_G = "0", o_x0, o_v0, o_out;
    std::vector<std::string> o_consts;
    double o_t = 10.0, o_tol = 1e-10;
    bool o_check = false;
    int o_spr = 512;
    ocmd->add_option("--F", o_F, "central potential in s");
    ocmd->add_option("--G", o_G, "Lorentz-like potential in s");
    ocmd->add_option("--x0", o_x0, "initial position x,y")->required();
    ocmd->add_option("--v0", o_v0, "initial velocity vx,vy")->required();
    ocmd->add_option("--t", o_t, "integration time");
    ocmd->add_option("--tol", o_tol, "local error tolerance");
    ocmd->add_option("--samples-per-rev", o_spr, "minimum samples per revolution");
    ocmd->add_option("--out", o_out, "CSV output path (stdout otherwise)");
    ocmd->add_flag("--check-eq", o_check, "verify the Theorem-2 pedal equation residual");
    ocmd->add_option("--const", o_consts, "constant binding name=value");

    // plot
    auto* pcmd = app.add_subcommand("plot", "reconstruct a polar curve from a pedal equation");
    std::string p_eq, p_out;
    std::vector<std::string> p_consts;
    double p_r0 = 1.0, p_rev = 1.0;
    int p_branch = 1, p_root = -1;
    pcmd->add_option("--eq", p_eq, "pedal equation")->required();
    pcmd->add_option("--r0", p_r0, "starting radius")->required();
    pcmd->add_option("--rev", p_rev, "revolutions to trace");
    pcmd->add_option("--branch", p_branch, "initial branch direction +-1");
    pcmd->add_option("--root", p_root, "q-root selector for degree > 1 equations");
    pcmd->add_option("--out", p_out, "output path, .svg or .csv")->required();
    pcmd->add_option("--const", p_consts, "constant binding name=value");

    // classify
    auto* ccmd = app.add_subcommand("classify", "classify an elliptic-spiral triple");
    std::string c_a, c_beta, c_gamma, c_alpha = "1";
    ccmd->add_option("--a", c_a)->required();
    ccmd->add_option("--beta", c_beta)->required();
    ccmd->add_option("--gamma", c_gamma)->required();
    ccmd->add_option("--alpha", c_alpha, "exponent alpha (rational)");

    // schwarzschild
    auto* scmd = app.add_subcommand("schwarzschild", "relativistic Kepler analysis");
    std::string s_rs, s_a, s_b;
    bool s_reduce = false;
    scmd->add_option("--rs", s_rs, "Schwarzschild radius")->required();
    scmd->add_option("--a", s_a, "L/(GMc)")->required();
    scmd->add_option("--b", s_b, "cL/E")->required();
    scmd->add_flag("--reduce", s_reduce, "include the elliptic-spiral reduction");

    // dark
    auto* dcmd = app.add_subcommand("dark", "dark Kepler problem");
    std::string d_M, d_F, d_omega, d_L, d_c;
    bool d_oval = false, d_reduce = false;
    dcmd->add_option("--M", d_M)->required();
    dcmd->add_option("--F", d_F)->required();
    dcmd->add_option("--omega", d_omega)->required();
    dcmd->add_option("--L", d_L)->required();
    dcmd->add_option("--c", d_c)->required();
    dcmd->add_flag("--oval", d_oval, "match the Cartesian oval");
    dcmd->add_flag("--reduce", d_reduce, "solve the reduction cubic");

    // catalog
    auto* kcmd = app.add_subcommand("catalog", "named-curve catalog");
    std::string k_name, k_params, k_out;
    int k_samples = 0;
    kcmd->add_option("--name", k_name, "curve name")->required();
    kcmd->add_option("--params", k_params, "comma-separated parameters");
    kcmd->add_option("--samples", k_samples, "emit this many (r, p) samples as CSV");
    kcmd->add_option("--out", k_out, "output path (stdout otherwise)");

    // selftest
    auto* xcmd = app.add_subcommand("selftest", "randomized identity checks");
    unsigned x_seed = 1;
    xcmd->add_option("--seed", x_seed, "random seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (tcmd->parsed()) {
        PedalEquation e = parse_pedal_equation(t_eq, const_table(t_consts));
        TransformSpec pipe = parse_pipeline(t_pipe);
        out << apply_transform(pipe, e).str() << "\n";
        return 0;
    }
    if (fcmd->parsed()) {
        ConstTable ct = const_table(f_consts);
        ForceSpec fs{parse_power_sum(f_F, ct, "s"), parse_power_sum(f_G, ct, "s")};
        PedalEquation e = force_to_pedal(fs, coeff_arg(f_L).value(), coeff_arg(f_c).value());
        out << e.str() << "\n";
        if (f_region) out << region_json(allowed_region(e));
        return 0;
    }
    if (ocmd->parsed()) {
        ConstTable ct = const_table(o_consts);
        ForceSpec fs{parse_power_sum(o_F, ct, "s"), parse_power_sum(o_G, ct, "s")};
        Vec2 x0 = vec_arg(o_x0), v0 = vec_arg(o_v0);
        IntegrateOptions opt;
        opt.samples_per_rev = o_spr;
        Trajectory tr = integrate_orbit(fs, x0, v0, o_t, o_tol, opt);
        PedalEquation eq;
        const PedalEquation* eqp = nullptr;
        OrbitConstants oc = conserved_quantities(x0, v0, fs);
        if (o_check) {
            eq = force_to_pedal(fs, oc.L, oc.c);
            eqp = &eq;
        }
        write_output(o_out, trajectory_csv(tr, eqp), out);
        if (o_check) {
            ResidualStats st = pedal_residual(tr, eq);
            double tol = env_tol(1e-6);
            out << "residual max_rel=" << fmt17(st.max_rel) << " rms=" << fmt17(st.rms)
                << " tol=" << fmt17(tol) << (st.max_rel <= tol ? " PASS" : " FAIL") << "\n";
            if (st.max_rel > tol) return 1;
        }
        return 0;
    }
    if (pcmd->parsed()) {
        PedalEquation e = parse_pedal_equation(p_eq, const_table(p_consts));
        ReconstructOptions opt;
        opt.q_root = p_root;
        PolarPath path = pedal_to_polar(e, p_r0, p_rev, p_branch, opt);
        bool svg = p_out.size() > 4 && p_out.substr(p_out.size() - 4) == ".svg";
        write_output(p_out, svg ? path_svg(path) : path_csv(path), out);
        out << "points=" << path.points.size() << " closed=" << (path.closed ? "true" : "false")
            << "\n";
        return 0;
    }
    if (ccmd->parsed()) {
        Coeff al = coeff_arg(c_alpha);
        if (!al.exact()) fail("InvalidFamilyParams", "alpha must be rational");
        EllipticTriple t{coeff_arg(c_a), coeff_arg(c_beta), coeff_arg(c_gamma), al.rat()};
        nlohmann::ordered_json j;
        j["schema"] = "pedalcurve/1";
        SpiralFamily fam = classify_spiral(t);
        j["family"] = family_name(fam);
        if (fam == SpiralFamily::Sn) {
            SnRecovery rec = recover_sn_params(t);
            j["recovered"] = {{"c", rec.c}, {"l2", rec.l2}, {"k", rec.k},
                              {"paper_l2", rec.paper_l2},
                              {"halved_form_validates", rec.halved_form_validates}};
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (scmd->parsed()) {
        SchwarzschildParams sp{coeff_arg(s_rs), coeff_arg(s_a), coeff_arg(s_b)};
        SchwarzschildResult res = schwarzschild_equation(sp);
        nlohmann::ordered_json j;
        j["schema"] = "pedalcurve/1";
        j["equation"] = res.equation.str();
        j["region"] = region_to_json(res.region);
        if (s_reduce) {
            SchwarzschildReduction red = schwarzschild_reduce(sp);
            j["gamma"] = red.gamma;
            j["reduced_equation"] = red.reduced.str();
            j["spiral_family"] = family_name(red.family);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (dcmd->parsed()) {
        Coeff w = coeff_arg(d_omega);
        DarkParams dp{coeff_arg(d_M), coeff_arg(d_F), w * w, coeff_arg(d_L), coeff_arg(d_c)};
        nlohmann::ordered_json j;
        j["schema"] = "pedalcurve/1";
        j["equation"] = dark_equation(dp).str();
        double FL = (dp.F * dp.L).value();
        double wM = -std::sqrt(dp.omega2.value()) * dp.M.value();
        j["constraint_residual"] = FL + wM;
        if (d_oval) {
            OvalParams ov = oval_match(dp);
            j["oval"] = {{"alpha2", ov.alpha2}, {"C", ov.C}, {"b2", ov.b2}, {"mu", ov.mu},
                         {"conic_degenerate", ov.conic_degenerate}};
        }
        if (d_reduce) j["reduce_alpha"] = dark_reduce(dp);
        out << j.dump(2) << "\n";
        return 0;
    }
    if (kcmd->parsed()) {
        std::vector<Coeff> params;
        std::string cur;
        for (char ch : k_params + ",") {
            if (ch == ',') {
                if (!cur.empty()) params.push_back(coeff_arg(cur));
                cur.clear();
            } else cur += ch;
        }
        CatalogEntry entry = catalog(k_name, params);
        out << entry.equation.str() << "\n";
        if (k_samples > 0) {
            if (!entry.sampler) fail("UnknownCurve", k_name + " has no parametric sampler");
            std::ostringstream csv;
            csv << "r,p\n";
            for (const RP& s : curve_to_pedal_samples(*entry.sampler, k_samples))
                csv << fmt17(s.r) << ',' << fmt17(s.p) << '\n';
            write_output(k_out, csv.str(), out);
        }
        return 0;
    }
    if (xcmd->parsed()) return run_selftest(x_seed, out);
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace pedal
