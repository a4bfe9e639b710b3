#pragma once

#include "magic/atomic_data.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace magic {

// a*Delta^2 + b*Delta + c = 0 for the perpendicular (ellipticity) condition.
struct QuadraticCoefficients {
    Rational a = 0;
    Rational b = 0;
    Rational c = 0;
    Rational discriminant() const { return b * b - 4 * a * c; }
};

enum class RootStatus { two_roots, degenerate_linear, no_real_root };

struct PerpSolution {
    RootStatus status = RootStatus::two_roots;
    std::vector<double> roots;  // ascending
    QuadraticCoefficients quadratic;
};

struct ParallelSolution {
    std::vector<double> roots;
    // true when the Delta^2 coefficient is nonzero (not a D2-type line); both
    // roots of the quadratic are then returned without interpretation
    bool quadratic = false;
    Rational delta_squared_coefficient = 0;
    std::optional<Rational> exact;  // the single root when !quadratic
};

struct DetuningSet {
    std::pair<double, double> delta_perp;  // ascending
    double delta_parallel = 0;
    double delta_pi = 0;
    double delta_perp_nearest = 0;  // the Delta_perp root closest to Delta_parallel
    QuadraticCoefficients quadratic;
};

// {J J' 1; F+offset F I}^2, zero when a triad fails.
Rational six_j_square(const AtomRecord& atom, int offset);

QuadraticCoefficients perp_quadratic(const AtomRecord& atom);
PerpSolution solve_delta_perp(const AtomRecord& atom);
ParallelSolution solve_delta_parallel(const AtomRecord& atom);
Rational solve_delta_pi_exact(const AtomRecord& atom);
double solve_delta_pi(const AtomRecord& atom);

// All condition detunings of a three-line record; CapabilityError otherwise.
DetuningSet solve_detunings(const AtomRecord& atom);

// 2F<F+1>^2 - (4F+2)<F>^2 + (2F+2)<F-1>^2, the Delta^2 coefficient of the
// amplitude condition up to a factor of two.
Rational amplitude_zero_coefficient(HalfInt J, HalfInt Jp, HalfInt F, HalfInt I);

// Two-line (D1-type, J' = J) records.
struct D1Detunings {
    double delta_perp = 0;
    double delta_parallel = 0;  // single-root closed form
    // Root of the m^2 amplitude condition evaluated from the dipole elements;
    // empty when the condition has no finite root.
    std::optional<double> parallel_condition_root;
};
D1Detunings solve_d1(const AtomRecord& atom);

struct MagicExistence {
    bool exists = false;
    Rational residual = 0;  // amplitude_zero_coefficient
};
// Only J' = J + 1 is supported (std::invalid_argument otherwise).
MagicExistence magic_exists(HalfInt J, HalfInt Jp, HalfInt F, HalfInt I);

struct DipoleLimitResult {
    double common_root = 0;     // 2pi*MHz
    double root_over_a = 0;     // common_root / A_hfs
    double discarded_perp_root = 0;
    Rational exact_root_over_a = 0;
};
// Synthesizes splittings from A_hfs alone and checks that all three
// conditions share a root (ConsistencyError otherwise).
DipoleLimitResult dipole_limit_detunings(const Rational& a_hfs, HalfInt F, HalfInt I, HalfInt J,
                                         HalfInt Jp);

}  // namespace magic
