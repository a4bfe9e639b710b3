#include "magic/dipole.hpp"

#include <cstdlib>
#include <stdexcept>

namespace magic {

int polarization_index(DipoleKind kind) {
    switch (kind) {
        case DipoleKind::sigma_plus: return 1;
        case DipoleKind::sigma_minus: return -1;
        case DipoleKind::pi: return 0;
    }
    return 0;
}

CouplingValue dipole_element_exact(DipoleKind kind, HalfInt m, HalfInt F, HalfInt Fp, HalfInt I,
                                   HalfInt J, HalfInt Jp) {
    if (F.twice() < 0 || Fp.twice() < 0) throw std::invalid_argument("negative F");
    if ((F.twice() - m.twice()) % 2 != 0 || std::abs(m.twice()) > F.twice())
        throw std::invalid_argument("projection " + m.str() + " invalid for F=" + F.str());
    if ((F.twice() - Fp.twice()) % 2 != 0) return {};

    HalfInt q(polarization_index(kind));
    HalfInt target = m + q;
    if (std::abs(target.twice()) > Fp.twice()) return {};

    CouplingValue six = wigner_6j(J, Jp, HalfInt(1), Fp, F, I);
    CouplingValue three = wigner_3j(F, HalfInt(1), Fp, m, q, -target);
    CouplingValue v = six * three;
    if (v.is_zero()) return {};

    int phase = m.is_integer() ? parity_sign(m.twice()) : parity_sign(m.twice() - F.twice());
    v.sign *= phase;
    v.square *= Fp.twice() + 1;
    return v;
}

double dipole_element(DipoleKind kind, HalfInt m, HalfInt F, HalfInt Fp, HalfInt I, HalfInt J,
                      HalfInt Jp) {
    return dipole_element_exact(kind, m, F, Fp, I, J, Jp).to_double();
}

std::map<std::pair<DipoleKind, int>, double> dipole_row(HalfInt F, HalfInt m, HalfInt I, HalfInt J,
                                                        HalfInt Jp) {
    std::map<std::pair<DipoleKind, int>, double> row;
    for (int offset = -1; offset <= 1; ++offset) {
        HalfInt Fp = F + HalfInt(offset);
        for (DipoleKind k : {DipoleKind::sigma_plus, DipoleKind::sigma_minus, DipoleKind::pi})
            row[{k, offset}] = Fp.twice() < 0 ? 0.0 : dipole_element(k, m, F, Fp, I, J, Jp);
    }
    return row;
}

}  // namespace magic
