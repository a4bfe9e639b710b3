#pragma once

#include "magic/wigner.hpp"

#include <map>
#include <utility>

namespace magic {

// r: sigma+ (m -> m+1), s: sigma- (m -> m-1), t: pi (m -> m).
enum class DipoleKind { sigma_plus, sigma_minus, pi };

int polarization_index(DipoleKind kind);  // q = +1, -1, 0

// <F',m+q| d_q |F,m> in units where the reduced J-J' element, with the
// (-1)^{2F'+J+I} sqrt((2F+1)(2J+1)) factor, is one:
//   (-1)^m sqrt(2F'+1) {J J' 1; F' F I} (F 1 F'; m q -m-q).
// For half-integer m the phase is taken as (-1)^{m-F}, which only changes the
// overall sign of a manifold; products within one manifold are unaffected.
CouplingValue dipole_element_exact(DipoleKind kind, HalfInt m, HalfInt F, HalfInt Fp, HalfInt I,
                                   HalfInt J, HalfInt Jp);
double dipole_element(DipoleKind kind, HalfInt m, HalfInt F, HalfInt Fp, HalfInt I, HalfInt J,
                      HalfInt Jp);

// All elements out of |F,m> for F' in {F-1, F, F+1}; keyed by (kind, F'-F).
std::map<std::pair<DipoleKind, int>, double> dipole_row(HalfInt F, HalfInt m, HalfInt I, HalfInt J,
                                                        HalfInt Jp);

}  // namespace magic
