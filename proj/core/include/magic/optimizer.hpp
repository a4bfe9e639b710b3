#pragma once

#include "magic/polarizability.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace magic {

struct OptimizerOptions {
    double samples_per_mhz = 20;
    int min_points = 2000;
    double tolerance = 1e-3;  // golden-section bracket width, 2pi*MHz
    double pole_radius = default_pole_radius;
    double expansion = 0.5;   // bracket grows by this fraction of its width on each side
};

enum class OptimizationStatus { interior_minimum, no_interior_minimum };

struct OptimizationResult {
    OptimizationStatus status = OptimizationStatus::no_interior_minimum;
    std::optional<double> delta_opt;
    std::optional<double> m_value;
    double lo = 0;
    double hi = 0;
};

struct MagicScan {
    double theta = 0;
    std::vector<double> deltas;
    std::vector<MagicComponents> components;  // NaN where a sample sits on a pole
    std::vector<double> total;
};

// Hull of the condition detunings, expanded on both sides.
std::pair<double, double> search_bracket(const AtomRecord& atom, double expansion = 0.5);

OptimizationResult optimize_detuning(const AtomRecord& atom, double theta,
                                     const OptimizerOptions& options = {});

MagicScan scan_magic_distance(const AtomRecord& atom, double theta, double lo, double hi, int n_points,
                              double pole_radius = default_pole_radius);

void write_scan_csv(std::ostream& out, const MagicScan& scan);

struct PolarizationSensitivity {
    std::vector<double> thetas;
    std::vector<double> optima;
    double spread = 0;  // max |opt(theta) - opt(pi/4)|
    bool smooth = false;  // monotone or a single extremum over the theta grid
};
PolarizationSensitivity polarization_sensitivity(const AtomRecord& atom,
                                                 const OptimizerOptions& options = {});

// Golden-section search for a minimum of f on [a, b] down to width tol.
double golden_section_minimize(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace magic
