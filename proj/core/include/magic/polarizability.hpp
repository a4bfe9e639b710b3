#pragma once

#include "magic/atomic_data.hpp"
#include "magic/dipole.hpp"

#include <array>
#include <numbers>
#include <vector>

namespace magic {

inline constexpr double default_pole_radius = 1e-6;

// Elliptical drive cos(theta) sigma+ + sin(theta) sigma- at detuning delta
// from the F'=F line (2pi*MHz).
struct DriveConfig {
    double theta = std::numbers::pi / 4;
    double delta = 0;
    double pole_radius = default_pole_radius;
};

// Output polarizations. parallel/perpendicular are anchored to the drive;
// plus/minus are the circular components they are built from.
enum class Output { parallel, perpendicular, pi, plus, minus };
inline constexpr int output_count = 5;

// alpha^{nm}_{mu,parallel}: final state n, initial state m, output mu.
class PolarizabilityTensor {
public:
    PolarizabilityTensor(HalfInt F, double theta, double delta);

    HalfInt F() const { return F_; }
    int size() const { return dim_; }
    double theta() const { return theta_; }
    double delta() const { return delta_; }

    double at(Output mu, HalfInt n, HalfInt m) const;
    double at_index(Output mu, int n, int m) const { return data_[offset(mu, n, m)]; }
    double& at_index(Output mu, int n, int m) { return data_[offset(mu, n, m)]; }

    int index_of(HalfInt m) const;
    HalfInt m_of(int index) const { return half(2 * index - F_.twice()); }

private:
    size_t offset(Output mu, int n, int m) const {
        return (static_cast<size_t>(mu) * dim_ + n) * dim_ + m;
    }

    HalfInt F_;
    int dim_;
    double theta_;
    double delta_;
    std::vector<double> data_;
};

// Left-hand sides of the three state-independence conditions, each divided by
// sum_F' {J J' 1; F' F I}^2 / |Delta_F'| so they are comparable across species.
struct ConditionResiduals {
    double perp_residual = 0;           // m-linear Rayleigh ellipticity
    double parallel_residual = 0;       // m^2 coefficient of the Rayleigh amplitude
    double raman_circ_residual = 0;     // sigma+ -> sigma- Raman amplitude
    double raman_pi_scalar_residual = 0;  // pi-Raman amplitude into the stretched state
};

// Contributions to the magic distance, grouped by imperfection.
struct MagicComponents {
    double perp_rayleigh = 0;
    double par_rayleigh = 0;
    double raman_circ = 0;
    double raman_pi = 0;
    double total() const { return perp_rayleigh + par_rayleigh + raman_circ + raman_pi; }
};

// Dipole elements of one record tabulated once, for repeated evaluation at
// many detunings.
class ScatteringModel {
public:
    explicit ScatteringModel(const AtomRecord& atom);

    const AtomRecord& atom() const { return atom_; }
    HalfInt F() const { return atom_.F; }
    int size() const { return dim_; }

    // Element out of the m-th state (index) to manifold F+offset; zero when absent.
    double element(DipoleKind kind, int offset, int m_index) const;
    // {J J' 1; F+offset F I}^2 as a double.
    double six_j_square(int offset) const { return six_sq_[offset + 1]; }

    // Delta_{F-1}, Delta_F, Delta_{F+1}; throws PoleError within radius of a
    // present resonance.
    std::array<double, 3> line_detunings(double delta, double pole_radius) const;

    // alpha^{nm}_{mu nu} for circular input nu and output mu in {plus, minus, pi}.
    double circular(Output mu, Output nu, int n, int m, const std::array<double, 3>& det) const;

    PolarizabilityTensor tensor(const DriveConfig& drive) const;
    ConditionResiduals residuals(double delta, double pole_radius = default_pole_radius) const;
    MagicComponents components(double theta, double delta,
                               double pole_radius = default_pole_radius) const;
    double magic_distance(double theta, double delta,
                          double pole_radius = default_pole_radius) const {
        return components(theta, delta, pole_radius).total();
    }

    // Index of the normalizing state: m=0, or m=1/2 for half-integer F.
    int reference_index() const { return (dim_ - 1) / 2 + (F().is_integer() ? 0 : 1); }

private:
    AtomRecord atom_;
    int dim_;
    std::array<bool, 3> present_{};
    std::array<double, 3> six_sq_{};
    // [kind][offset+1][m index]
    std::array<std::array<std::vector<double>, 3>, 3> elements_;
};

PolarizabilityTensor generalized_polarizability(const AtomRecord& atom, const DriveConfig& drive);
ConditionResiduals condition_residuals(const AtomRecord& atom, double delta,
                                       double pole_radius = default_pole_radius);
MagicComponents magic_components(const AtomRecord& atom, double theta, double delta,
                                 double pole_radius = default_pole_radius);
double magic_distance(const AtomRecord& atom, double theta, double delta,
                      double pole_radius = default_pole_radius);

}  // namespace magic
