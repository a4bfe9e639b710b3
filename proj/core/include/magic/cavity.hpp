#pragma once

#include "magic/polarizability.hpp"

#include <vector>

namespace magic {

// Cavity with two degenerate circular modes a (sigma+) and b (sigma-).
// All frequencies in 2pi*MHz.
struct CavityConfig {
    double g = 1;
    double omega_rabi = 1;
    double kappa = 1;
    double delta_c = 0;  // drive - cavity
    double theta = std::numbers::pi / 4;
    std::vector<double> phases;  // g_j = g sin(phase_j)
};

// Adiabatically eliminated coefficients, indexed by m (0 .. 2F).
// omega_tilde, h and eta_raman couple m and m+2 and are zero for the top two states.
struct EffectiveCavityParams {
    HalfInt F;
    std::vector<double> U_a, U_b;
    std::vector<double> omega_m, omega_tilde, h;
    std::vector<double> eta_plus_ray, eta_minus_ray, eta_raman;
    double saturation_ratio = 0;  // max Omega / |Delta_F'| over present lines
    bool validity_warning = false;  // saturation_ratio above 0.1
};

inline constexpr double saturation_warning_threshold = 0.1;

EffectiveCavityParams effective_params(const AtomRecord& atom, const CavityConfig& cfg, double delta,
                                       double pole_radius = default_pole_radius);

struct ParallelBasisParams {
    std::vector<double> U_par, U_perp, eta_par;  // per m
    double m_spread = 0;  // max relative deviation of U_par and eta_par from their m-average
};
ParallelBasisParams parallel_basis_params(const EffectiveCavityParams& params, double theta);

struct MultiAtomResult {
    double drive_sum = 0;
    double shift_sum = 0;
    double photon_number = 0;
};
// Steady state of the driven, damped parallel mode shared by the atoms in cfg.phases.
MultiAtomResult multi_atom_steady_state(const CavityConfig& cfg, double U_par, double eta_par);

}  // namespace magic
