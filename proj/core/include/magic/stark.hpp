#pragma once

#include "magic/polarizability.hpp"

namespace magic {

// Energy shift of |F,m> for drive intensity |E0|^2 (reduced units, hbar = 1):
//   sum_F' |E0|^2 / Delta_F' [ (r^2 + s^2) + (cos^2 - sin^2)(r^2 - s^2) ].
double ac_stark_shift(const AtomRecord& atom, HalfInt m, double theta, double delta, double intensity,
                      double pole_radius = default_pole_radius);

// Least-squares fit of the shift per unit intensity to c0 + c1 m + c2 m^2.
struct StarkDecomposition {
    double scalar = 0;        // c0
    double vector_coeff = 0;  // c1
    double tensor_coeff = 0;  // c2
    double fit_residual = 0;  // largest |fit - shift| over m
    double scale = 0;         // largest |shift| over m, for normalized comparisons
};
StarkDecomposition stark_decompose(const AtomRecord& atom, double theta, double delta,
                                   double pole_radius = default_pole_radius);

}  // namespace magic
