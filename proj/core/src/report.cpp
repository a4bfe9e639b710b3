#include "magic/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace magic {

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s = buf;
    if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

std::string format_m(const std::optional<double>& v) {
    if (!v) return "N/A";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2g", *v);
    return buf;
}

ReportRow compute_report_row(const AtomRecord& atom, double theta, const OptimizerOptions& options) {
    DetuningSet d = solve_detunings(atom);
    OptimizationResult opt = optimize_detuning(atom, theta, options);

    ReportRow r;
    r.species = atom.species;
    r.F = atom.F;
    r.zeta_plus = atom.zeta_plus_mhz();
    r.zeta_minus = atom.zeta_minus_mhz();
    r.b_over_a = atom.b_over_a.convert_to<double>();
    r.delta_perp = d.delta_perp;
    r.delta_parallel = d.delta_parallel;
    r.delta_pi = d.delta_pi;
    r.delta_opt = opt.delta_opt;
    r.m_value = opt.m_value;
    // Cs reference values carry two decimals
    const PublishedRow* pub = find_published(atom.species, atom.F);
    r.decimals = pub && pub->tolerance < 0.05 ? 2 : 1;
    return r;
}

std::vector<CellCheck> compare_with_published(const ReportRow& row, const PublishedRow& p) {
    const double tol = p.tolerance * (1 + 1e-9);
    const int dec = p.tolerance < 0.05 ? 2 : 1;
    std::vector<CellCheck> out;

    auto near = [&](const std::string& col, double computed, double published) {
        out.push_back({col, format_fixed(computed, dec), format_fixed(published, dec),
                       std::abs(computed - published) <= tol});
    };

    // the pair is compared as a set
    double pub_lo = std::min(p.perp_first, p.perp_second), pub_hi = std::max(p.perp_first, p.perp_second);
    near("delta_perp_1", row.delta_perp.first, pub_lo);
    near("delta_perp_2", row.delta_perp.second, pub_hi);
    near("delta_parallel", row.delta_parallel, p.parallel);
    near("delta_pi", row.delta_pi, p.pi);

    if (p.optimized && row.delta_opt) {
        near("delta_opt", *row.delta_opt, *p.optimized);
    } else {
        out.push_back({"delta_opt", row.delta_opt ? format_fixed(*row.delta_opt, dec) : "N/A",
                       p.optimized ? format_fixed(*p.optimized, dec) : "N/A",
                       !p.optimized && !row.delta_opt});
    }
    bool m_ok;
    if (p.m_value && row.m_value)
        m_ok = std::abs(*row.m_value - *p.m_value) <= m_value_tolerance * std::abs(*p.m_value);
    else
        m_ok = !p.m_value && !row.m_value;
    out.push_back({"m_value", format_m(row.m_value), format_m(p.m_value), m_ok});
    return out;
}

void write_report_csv_header(std::ostream& out) {
    out << "species,F,zeta_plus,zeta_minus,b_over_a,delta_perp_1,delta_perp_2,delta_parallel,delta_pi,"
           "delta_opt,m_value\n";
}

void write_report_csv_row(std::ostream& out, const ReportRow& r) {
    const int d = r.decimals;
    char ba[32];
    std::snprintf(ba, sizeof ba, "%g", r.b_over_a);
    out << r.species << ',' << r.F.str() << ',' << format_fixed(r.zeta_plus, d) << ','
        << format_fixed(r.zeta_minus, d) << ',' << ba << ',' << format_fixed(r.delta_perp.first, d) << ','
        << format_fixed(r.delta_perp.second, d) << ',' << format_fixed(r.delta_parallel, d) << ','
        << format_fixed(r.delta_pi, d) << ',' << (r.delta_opt ? format_fixed(*r.delta_opt, d) : "N/A")
        << ',' << format_m(r.m_value) << '\n';
}

}  // namespace magic
