// magicdetune: command-line front end for the magic-detuning library.
// All frequencies (splittings, detunings, couplings) are in 2pi*MHz.

#include "magic/atomic_data.hpp"
#include "magic/cavity.hpp"
#include "magic/detunings.hpp"
#include "magic/errors.hpp"
#include "magic/optimizer.hpp"
#include "magic/polarizability.hpp"
#include "magic/report.hpp"
#include "magic/stark.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace magic;

namespace {

enum ExitCode { ok = 0, disagreement = 1, usage = 2, not_found = 3, capability = 4 };

// Thrown to leave a command with a specific exit code after printing a message.
struct Exit {
    int code;
    std::string message;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}
std::string g12(double v) { return fmt("%.12g", v); }

struct Globals {
    std::string atoms_file;
    std::string csv_path;
    double theta = std::numbers::pi / 4;
};

std::vector<AtomRecord> registry(const Globals& g) {
    std::vector<AtomRecord> out = builtin_registry();
    if (g.atoms_file.empty()) return out;
    std::ifstream in(g.atoms_file);
    if (!in) throw Exit{usage, "cannot read atom table '" + g.atoms_file + "'"};
    try {
        for (AtomRecord& r : load_atom_table(in)) {
            if (find_record(out, r.species, r.F))
                throw Exit{usage, g.atoms_file + ": duplicate record " + r.species + " F=" + r.F.str()};
            out.push_back(std::move(r));
        }
    } catch (const ParseError& e) {
        throw Exit{usage, g.atoms_file + ": " + e.what()};
    } catch (const RecordError& e) {
        throw Exit{usage, g.atoms_file + ": " + e.what()};
    }
    return out;
}

HalfInt parse_f(const std::string& text) {
    try {
        return HalfInt::parse(text);
    } catch (const std::exception&) {
        throw Exit{usage, "invalid F '" + text + "' (use an integer or n/2)"};
    }
}

AtomRecord lookup(const Globals& g, const std::string& species, const std::string& f_text,
                  bool require_magic = true) {
    HalfInt F = parse_f(f_text);
    auto records = registry(g);
    if (const AtomRecord* r = find_record(records, species, F)) {
        if (require_magic && !r->magic_capable())
            throw Exit{capability, species + " F=" + F.str() +
                                       " cannot have a magic detuning: a magic detuning needs nuclear "
                                       "spin I >= 1 so that three excited manifolds scatter (I=" +
                                       r->I.str() + ")"};
        return *r;
    }
    for (const SpinNote& n : nuclear_spin_notes())
        if (n.species == species)
            throw Exit{capability, species + " cannot have a magic detuning due to its nuclear spin (" +
                                       n.note + "); a magic detuning needs I >= 1"};
    bool species_known = false;
    for (const AtomRecord& r : records) species_known |= r.species == species;
    throw Exit{not_found, species_known ? "no record for " + species + " F=" + F.str()
                                        : "unknown species '" + species + "'"};
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Exit{usage, "cannot write '" + path + "'"};
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_atoms(const Globals& g) {
    auto records = registry(g);
    std::printf("%-8s %5s %5s %5s %5s %10s %10s %10s  %s\n", "species", "I", "J", "J'", "F", "zeta+",
                "zeta-", "B/A", "source");
    for (const AtomRecord& r : records)
        std::printf("%-8s %5s %5s %5s %5s %10s %10s %10s  %s\n", r.species.c_str(), r.I.str().c_str(),
                    r.J.str().c_str(), r.Jp.str().c_str(), r.F.str().c_str(),
                    format_decimal(r.zeta_plus).c_str(), format_decimal(r.zeta_minus).c_str(),
                    format_decimal(r.b_over_a).c_str(), r.source.c_str());
    std::printf("%zu records\n", records.size());
    return ok;
}

void print_residuals(const char* label, const ScatteringModel& model, double delta) {
    ConditionResiduals r = model.residuals(delta, default_pole_radius);
    std::printf("  %-14s %12s  | perp %.2e  parallel %.2e  circ-Raman %.2e  pi-Raman %.2e\n", label,
                fmt("%.4f", delta).c_str(), r.perp_residual, r.parallel_residual, r.raman_circ_residual,
                r.raman_pi_scalar_residual);
}

int cmd_detunings(const Globals& g, const std::string& species, const std::string& f) {
    AtomRecord atom = lookup(g, species, f);
    DetuningSet d = solve_detunings(atom);
    std::printf("%s F=%s  zeta+=%s  zeta-=%s  (2pi*MHz)\n", atom.species.c_str(), atom.F.str().c_str(),
                format_decimal(atom.zeta_plus).c_str(), format_decimal(atom.zeta_minus).c_str());
    std::printf("  delta_perp     %s, %s\n", fmt("%.4f", d.delta_perp.first).c_str(),
                fmt("%.4f", d.delta_perp.second).c_str());
    std::printf("  delta_parallel %s\n", fmt("%.4f", d.delta_parallel).c_str());
    std::printf("  delta_pi       %s\n", fmt("%.4f", d.delta_pi).c_str());
    std::printf("residuals (normalized by sum <F'>^2/|Delta_F'|):\n");
    ScatteringModel model(atom);
    print_residuals("delta_perp", model, d.delta_perp.first);
    print_residuals("delta_perp", model, d.delta_perp.second);
    print_residuals("delta_parallel", model, d.delta_parallel);
    print_residuals("delta_pi", model, d.delta_pi);
    return ok;
}

int cmd_optimize(const Globals& g, const std::string& species, const std::string& f) {
    AtomRecord atom = lookup(g, species, f);
    OptimizationResult r = optimize_detuning(atom, g.theta);
    std::printf("%s F=%s  theta=%s\n", atom.species.c_str(), atom.F.str().c_str(), g12(g.theta).c_str());
    std::printf("  bracket        [%s, %s]\n", fmt("%.4f", r.lo).c_str(), fmt("%.4f", r.hi).c_str());
    if (!r.delta_opt) {
        std::printf("  no interior minimum (M keeps decreasing toward the bracket edge)\n");
        return ok;
    }
    MagicComponents c = magic_components(atom, g.theta, *r.delta_opt);
    std::printf("  delta_opt      %s\n", fmt("%.4f", *r.delta_opt).c_str());
    std::printf("  M              %s\n", fmt("%.4e", *r.m_value).c_str());
    std::printf("    perp Rayleigh     %s\n", fmt("%.4e", c.perp_rayleigh).c_str());
    std::printf("    parallel Rayleigh %s\n", fmt("%.4e", c.par_rayleigh).c_str());
    std::printf("    circular Raman    %s\n", fmt("%.4e", c.raman_circ).c_str());
    std::printf("    pi Raman          %s\n", fmt("%.4e", c.raman_pi).c_str());
    return ok;
}

int cmd_table(const Globals& g, const std::string& which) {
    bool ions;
    if (which == "alkali")
        ions = false;
    else if (which == "ions")
        ions = true;
    else
        throw Exit{usage, "table must be 'alkali' or 'ions'"};

    std::vector<const PublishedRow*> rows;
    for (const PublishedRow& p : published_rows())
        if (p.ion == ions) rows.push_back(&p);

    std::vector<ReportRow> computed(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        const AtomRecord* atom = find_record(builtin_registry(), rows[i]->species, rows[i]->F);
        if (!atom) throw Exit{not_found, "no record for " + rows[i]->species};
        computed[i] = compute_report_row(*atom, g.theta);
    }

    std::vector<std::string> offending;
    std::printf("%-8s %4s  %-16s %-16s %-16s %-16s %-16s %-16s %-16s\n", "species", "F", "delta_perp_1",
                "delta_perp_2", "delta_parallel", "delta_pi", "delta_opt", "M", "");
    std::printf("%-8s %4s  %s\n", "", "", "(each cell: computed/published, '*' marks disagreement)");
    for (size_t i = 0; i < rows.size(); ++i) {
        auto cells = compare_with_published(computed[i], *rows[i]);
        std::printf("%-8s %4s ", computed[i].species.c_str(), computed[i].F.str().c_str());
        for (const CellCheck& c : cells) {
            std::string cell = c.computed + "/" + c.published + (c.ok ? "" : "*");
            std::printf(" %-16s", cell.c_str());
            if (!c.ok)
                offending.push_back(computed[i].species + " F=" + computed[i].F.str() + " " + c.column +
                                    ": computed " + c.computed + ", published " + c.published);
        }
        std::printf("\n");
    }

    if (!g.csv_path.empty()) {
        std::ofstream out = open_csv(g.csv_path);
        write_report_csv_header(out);
        for (const ReportRow& r : computed) write_report_csv_row(out, r);
    }

    if (offending.empty()) {
        std::printf("all %zu rows agree\n", rows.size());
        return ok;
    }
    std::printf("%zu disagreeing cells:\n", offending.size());
    for (const std::string& s : offending) std::printf("  %s\n", s.c_str());
    return disagreement;
}

int cmd_scan(const Globals& g, const std::string& species, const std::string& f, double lo, double hi,
             int n) {
    AtomRecord atom = lookup(g, species, f);
    if (n < 2) throw Exit{usage, "a scan needs at least two points"};
    if (!(lo < hi)) throw Exit{usage, "scan range must satisfy LO < HI"};
    MagicScan scan = scan_magic_distance(atom, g.theta, lo, hi, n);
    if (g.csv_path.empty()) {
        write_scan_csv(std::cout, scan);
    } else {
        std::ofstream out = open_csv(g.csv_path);
        write_scan_csv(out, scan);
        std::printf("wrote %d samples to %s\n", n, g.csv_path.c_str());
    }
    return ok;
}

int cmd_stark(const Globals& g, const std::string& species, const std::string& f, double delta,
              double intensity) {
    AtomRecord atom = lookup(g, species, f, false);
    std::printf("%s F=%s  delta=%s  theta=%s  intensity=%s (reduced units, hbar=1)\n", atom.species.c_str(),
                atom.F.str().c_str(), g12(delta).c_str(), g12(g.theta).c_str(), g12(intensity).c_str());
    for (int i = 0; i <= atom.F.twice(); ++i) {
        HalfInt m = half(2 * i - atom.F.twice());
        std::printf("  m=%-5s %s\n", m.str().c_str(),
                    fmt("% .10e", ac_stark_shift(atom, m, g.theta, delta, intensity)).c_str());
    }
    StarkDecomposition d = stark_decompose(atom, g.theta, delta);
    std::printf("per unit intensity: c0 + c1 m + c2 m^2\n");
    std::printf("  c0 (scalar) %s\n", fmt("% .10e", d.scalar).c_str());
    std::printf("  c1 (vector) %s\n", fmt("% .10e", d.vector_coeff).c_str());
    std::printf("  c2 (tensor) %s\n", fmt("% .10e", d.tensor_coeff).c_str());
    std::printf("  fit residual %s\n", fmt("%.2e", d.fit_residual).c_str());
    return ok;
}

struct CavityArgs {
    double g = 1, omega = 1, kappa = 1, delta_c = 0;
    std::vector<double> delta;  // empty: use the optimized detuning
    std::vector<double> phases;
    int in_phase = 0;
    int alternating = 0;
    bool compensate_shift = false;
};

int cmd_cavity(const Globals& gl, const std::string& species, const std::string& f, const CavityArgs& a) {
    if (!(a.kappa > 0)) throw Exit{usage, "kappa must be positive"};
    AtomRecord atom = lookup(gl, species, f, false);

    double delta;
    if (!a.delta.empty()) {
        delta = a.delta.front();
    } else {
        if (!atom.magic_capable())
            throw Exit{capability, "no magic detuning for " + species + "; pass --delta explicitly"};
        OptimizationResult r = optimize_detuning(atom, gl.theta);
        delta = r.delta_opt ? *r.delta_opt : solve_detunings(atom).delta_parallel;
    }

    CavityConfig cfg;
    cfg.g = a.g;
    cfg.omega_rabi = a.omega;
    cfg.kappa = a.kappa;
    cfg.delta_c = a.delta_c;
    cfg.theta = gl.theta;
    cfg.phases = a.phases;
    for (int j = 0; j < a.in_phase; ++j) cfg.phases.push_back(std::numbers::pi / 2);
    for (int j = 0; j < a.alternating; ++j)
        cfg.phases.push_back(j % 2 == 0 ? std::numbers::pi / 2 : -std::numbers::pi / 2);
    if (cfg.phases.empty()) cfg.phases = {std::numbers::pi / 2};

    EffectiveCavityParams p = effective_params(atom, cfg, delta);
    ParallelBasisParams par = parallel_basis_params(p, gl.theta);

    std::printf("%s F=%s  delta=%s  theta=%s  g=%s  Omega=%s  kappa=%s  delta_c=%s (2pi*MHz)\n",
                atom.species.c_str(), atom.F.str().c_str(), fmt("%.4f", delta).c_str(), g12(gl.theta).c_str(),
                g12(a.g).c_str(), g12(a.omega).c_str(), g12(a.kappa).c_str(), g12(a.delta_c).c_str());
    std::printf("%-6s %14s %14s %14s %14s %14s %14s %14s %14s\n", "m", "U_a", "U_b", "omega_m", "omega_tilde",
                "h", "eta_plus", "eta_minus", "eta_raman");
    for (size_t i = 0; i < p.U_a.size(); ++i) {
        HalfInt m = half(2 * static_cast<int>(i) - atom.F.twice());
        std::printf("%-6s", m.str().c_str());
        for (double v : {p.U_a[i], p.U_b[i], p.omega_m[i], p.omega_tilde[i], p.h[i], p.eta_plus_ray[i],
                         p.eta_minus_ray[i], p.eta_raman[i]})
            std::printf(" %14s", fmt("% .6e", v).c_str());
        std::printf("\n");
    }
    std::printf("parallel basis:\n%-6s %14s %14s %14s\n", "m", "U_par", "U_perp", "eta_par");
    for (size_t i = 0; i < par.U_par.size(); ++i) {
        HalfInt m = half(2 * static_cast<int>(i) - atom.F.twice());
        std::printf("%-6s %14s %14s %14s\n", m.str().c_str(), fmt("% .6e", par.U_par[i]).c_str(),
                    fmt("% .6e", par.U_perp[i]).c_str(), fmt("% .6e", par.eta_par[i]).c_str());
    }
    std::printf("m_spread %s\n", fmt("%.3e", par.m_spread).c_str());

    // the m-averaged reduced coefficients drive the shared parallel mode
    double U = 0, eta = 0;
    for (size_t i = 0; i < par.U_par.size(); ++i) {
        U += par.U_par[i];
        eta += par.eta_par[i];
    }
    U /= par.U_par.size();
    eta /= par.eta_par.size();

    CavityConfig single = cfg;
    single.phases = {std::numbers::pi / 2};
    MultiAtomResult one = multi_atom_steady_state(single, U, eta);

    CavityConfig many = cfg;
    if (a.compensate_shift) {
        // keep delta_c + shift_sum at its single-atom value
        double shift_n = 0;
        for (double ph : cfg.phases) shift_n += std::sin(ph) * std::sin(ph) * U;
        many.delta_c = cfg.delta_c + one.shift_sum - shift_n;
    }
    MultiAtomResult n = multi_atom_steady_state(many, U, eta);

    std::printf("atoms %zu%s\n", cfg.phases.size(), a.compensate_shift ? "  (cavity shift compensated)" : "");
    std::printf("  drive_sum      %s\n", fmt("% .10e", n.drive_sum).c_str());
    std::printf("  shift_sum      %s\n", fmt("% .10e", n.shift_sum).c_str());
    std::printf("  photon_number  %s\n", fmt("%.10e", n.photon_number).c_str());
    std::printf("  single atom    %s\n", fmt("%.10e", one.photon_number).c_str());
    if (one.photon_number > 0)
        std::printf("  ratio          %s\n", g12(n.photon_number / one.photon_number).c_str());
    if (p.validity_warning)
        std::printf("warning: Omega/|Delta_F'| = %s exceeds %s; adiabatic elimination is unreliable\n",
                    fmt("%.3g", p.saturation_ratio).c_str(), g12(saturation_warning_threshold).c_str());
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Magic detunings for state-insensitive light scattering.\n"
                 "All frequencies are in 2pi*MHz."};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    Globals g;
    app.add_option("--atoms", g.atoms_file, "additional atom table (magicdetune-atoms v1)");
    app.add_option("--csv", g.csv_path, "write machine-readable output to PATH");
    app.add_option("--theta", g.theta, "drive ellipticity angle in radians (pi/4 = linear)")
        ->check(CLI::Range(0.0, std::numbers::pi / 2));

    std::string species, f, which;
    double lo = 0, hi = 0, delta = 0, intensity = 1;
    int n = 0;
    CavityArgs cav;
    std::function<int()> run;

    auto* atoms = app.add_subcommand("atoms", "list the atom registry");
    atoms->callback([&] { run = [&] { return cmd_atoms(g); }; });

    auto* det = app.add_subcommand("detunings", "closed-form condition detunings");
    det->add_option("species", species)->required();
    det->add_option("F", f)->required();
    det->callback([&] { run = [&] { return cmd_detunings(g, species, f); }; });

    auto* opt = app.add_subcommand("optimize", "minimize the magic distance");
    opt->add_option("species", species)->required();
    opt->add_option("F", f)->required();
    opt->callback([&] { run = [&] { return cmd_optimize(g, species, f); }; });

    auto* table = app.add_subcommand("table", "recompute a published table and compare");
    table->add_option("which", which, "alkali or ions")->required();
    table->callback([&] { run = [&] { return cmd_table(g, which); }; });

    auto* scan = app.add_subcommand("scan", "sample the magic distance and its components");
    scan->add_option("species", species)->required();
    scan->add_option("F", f)->required();
    scan->add_option("LO", lo)->required();
    scan->add_option("HI", hi)->required();
    scan->add_option("N", n)->required();
    scan->callback([&] { run = [&] { return cmd_scan(g, species, f, lo, hi, n); }; });

    auto* stark = app.add_subcommand("stark", "ac Stark shifts per Zeeman state");
    stark->add_option("species", species)->required();
    stark->add_option("F", f)->required();
    stark->add_option("DELTA", delta)->required();
    stark->add_option("--intensity", intensity, "drive intensity |E0|^2 (reduced units)");
    stark->callback([&] { run = [&] { return cmd_stark(g, species, f, delta, intensity); }; });

    auto* cavity = app.add_subcommand("cavity", "effective cavity-QED coefficients");
    cavity->add_option("species", species)->required();
    cavity->add_option("F", f)->required();
    cavity->add_option("--g", cav.g, "atom-cavity coupling");
    cavity->add_option("--omega", cav.omega, "drive Rabi frequency");
    cavity->add_option("--kappa", cav.kappa, "cavity linewidth");
    cavity->add_option("--delta-c", cav.delta_c, "drive-cavity detuning");
    cavity->add_option("--delta", cav.delta, "drive detuning (default: optimized magic detuning)")
        ->expected(1);
    cavity->add_option("--phases", cav.phases, "coupling phases phi_j, g_j = g sin(phi_j)")->delimiter(',');
    cavity->add_option("--in-phase", cav.in_phase, "add N atoms at phi = pi/2");
    cavity->add_option("--alternating", cav.alternating, "add N atoms alternating phi = +-pi/2");
    cavity->add_flag("--compensate-shift", cav.compensate_shift,
                     "retune delta_c so delta_c + shift_sum matches the single atom");
    cavity->callback([&] { run = [&] { return cmd_cavity(g, species, f, cav); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        return run();
    } catch (const Exit& e) {
        std::cerr << "magicdetune: " << e.message << '\n';
        return e.code;
    } catch (const CapabilityError& e) {
        std::cerr << "magicdetune: " << e.what() << '\n';
        return capability;
    } catch (const PoleError& e) {
        std::cerr << "magicdetune: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "magicdetune: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "magicdetune: " << e.what() << '\n';
        return usage;
    }
}
