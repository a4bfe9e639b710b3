#include "magic/optimizer.hpp"

#include "magic/detunings.hpp"
#include "magic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

namespace magic {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

MagicComponents masked() { return {nan, nan, nan, nan}; }

MagicComponents evaluate(const ScatteringModel& model, double theta, double delta, double radius) {
    try {
        return model.components(theta, delta, radius);
    } catch (const PoleError&) {
        return masked();
    } catch (const std::domain_error&) {  // vanishing normalizer
        return masked();
    }
}

}  // namespace

double golden_section_minimize(const std::function<double(double)>& f, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? c : d;
}

std::pair<double, double> search_bracket(const AtomRecord& atom, double expansion) {
    DetuningSet d = solve_detunings(atom);
    double lo = std::min({d.delta_perp.first, d.delta_perp.second, d.delta_parallel, d.delta_pi});
    double hi = std::max({d.delta_perp.first, d.delta_perp.second, d.delta_parallel, d.delta_pi});
    double pad = expansion * (hi - lo);
    return {lo - pad, hi + pad};
}

OptimizationResult optimize_detuning(const AtomRecord& atom, double theta, const OptimizerOptions& options) {
    if (!atom.magic_capable())
        throw CapabilityError(atom.species + " F=" + atom.F.str() +
                              " cannot be magic: it needs I >= 1 and three excited manifolds");
    ScatteringModel model(atom);
    auto [lo, hi] = search_bracket(atom, options.expansion);

    OptimizationResult res;
    res.lo = lo;
    res.hi = hi;

    int n = std::max(options.min_points, static_cast<int>(std::ceil((hi - lo) * options.samples_per_mhz)));
    std::vector<double> xs(n + 1), ys(n + 1);
    for (int i = 0; i <= n; ++i) {
        xs[i] = lo + (hi - lo) * i / n;
        ys[i] = evaluate(model, theta, xs[i], options.pole_radius).total();
    }

    int best = -1;
    for (int i = 0; i <= n; ++i)
        if (std::isfinite(ys[i]) && (best < 0 || ys[i] < ys[best])) best = i;
    if (best < 0) return res;

    // the minimum sits on the bracket boundary: M keeps falling outward
    int first = 0, last = n;
    while (first <= n && !std::isfinite(ys[first])) ++first;
    while (last >= 0 && !std::isfinite(ys[last])) --last;
    if (best == first || best == last) return res;

    auto f = [&](double x) {
        double v = evaluate(model, theta, x, options.pole_radius).total();
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };
    double x = golden_section_minimize(f, xs[best - 1], xs[best + 1], options.tolerance);
    double fx = f(x);
    if (!(fx <= ys[best])) {
        x = xs[best];
        fx = ys[best];
    }
    res.status = OptimizationStatus::interior_minimum;
    res.delta_opt = x;
    res.m_value = fx;
    return res;
}

MagicScan scan_magic_distance(const AtomRecord& atom, double theta, double lo, double hi, int n_points,
                              double pole_radius) {
    if (n_points < 2) throw std::invalid_argument("a scan needs at least two points");
    if (!(lo < hi)) throw std::invalid_argument("scan range must satisfy lo < hi");
    ScatteringModel model(atom);
    MagicScan scan;
    scan.theta = theta;
    for (int i = 0; i < n_points; ++i) {
        double x = lo + (hi - lo) * i / (n_points - 1);
        MagicComponents c = evaluate(model, theta, x, pole_radius);
        scan.deltas.push_back(x);
        scan.components.push_back(c);
        scan.total.push_back(c.total());
    }
    return scan;
}

void write_scan_csv(std::ostream& out, const MagicScan& scan) {
    out << "delta_MHz,total,perp_rayleigh,par_rayleigh,raman_circ,raman_pi\n";
    auto old = out.precision(12);
    for (size_t i = 0; i < scan.deltas.size(); ++i) {
        const auto& c = scan.components[i];
        out << scan.deltas[i] << ',' << scan.total[i] << ',' << c.perp_rayleigh << ','
            << c.par_rayleigh << ',' << c.raman_circ << ',' << c.raman_pi << '\n';
    }
    out.precision(old);
}

PolarizationSensitivity polarization_sensitivity(const AtomRecord& atom, const OptimizerOptions& options) {
    PolarizationSensitivity s;
    constexpr double pi = std::numbers::pi;
    s.thetas = {0, pi / 8, pi / 4, 3 * pi / 8, pi / 2};
    for (double th : s.thetas) {
        OptimizationResult r = optimize_detuning(atom, th, options);
        if (!r.delta_opt) throw std::domain_error("no interior minimum at theta=" + std::to_string(th));
        s.optima.push_back(*r.delta_opt);
    }
    for (double v : s.optima) s.spread = std::max(s.spread, std::abs(v - s.optima[2]));

    int turns = 0;
    for (size_t i = 2; i < s.optima.size(); ++i) {
        double d1 = s.optima[i - 1] - s.optima[i - 2];
        double d2 = s.optima[i] - s.optima[i - 1];
        if (d1 * d2 < 0) ++turns;
    }
    s.smooth = turns <= 1;
    return s;
}

}  // namespace magic
