#pragma once

#include "magic/atomic_data.hpp"
#include "../oracle/racah_oracle.hpp"

#include <doctest.h>

#include <string>
#include <vector>

namespace support {

inline oracle::Atom to_oracle(const magic::AtomRecord& a) {
    return {a.I.twice(), a.J.twice(), a.Jp.twice(), a.F.twice(), a.zeta_plus_mhz(), a.zeta_minus_mhz()};
}

// D2-type record with the given spins and splittings (2pi*MHz).
inline magic::AtomRecord d2_record(magic::HalfInt I, magic::HalfInt F, const std::string& zeta_plus,
                                   const std::string& zeta_minus) {
    magic::AtomRecord r;
    r.species = "test";
    r.I = I;
    r.J = magic::half(1);
    r.Jp = magic::half(3);
    r.F = F;
    r.zeta_plus = magic::parse_decimal(zeta_plus);
    r.zeta_minus = magic::parse_decimal(zeta_minus);
    return r;
}

inline const magic::AtomRecord& builtin(const std::string& species, magic::HalfInt F) {
    const magic::AtomRecord* r = magic::find_record(magic::builtin_registry(), species, F);
    REQUIRE(r != nullptr);
    return *r;
}

inline std::string label(const magic::AtomRecord& a) { return a.species + " F=" + a.F.str(); }

// Valid nuclear spins (as twice values) for J = 1/2 and a given F.
inline std::vector<int> d2_spins(magic::HalfInt F) {
    std::vector<int> out;
    for (int tI : {F.twice() - 1, F.twice() + 1})
        if (tI >= 0) out.push_back(tI);
    return out;
}

}  // namespace support
