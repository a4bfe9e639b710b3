#pragma once

#include "magic/wigner.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace magic {

// One ground hyperfine manifold of one isotope on one optical line.
// Frequencies are in 2pi*MHz and kept as exact decimals.
struct AtomRecord {
    std::string species;
    HalfInt I;
    HalfInt J;
    HalfInt Jp;
    HalfInt F;
    Rational zeta_plus = 0;   // omega_F - omega_{F+1} of the excited manifolds
    Rational zeta_minus = 0;  // omega_F - omega_{F-1}
    Rational b_over_a = 0;    // diagnostic only
    std::string source;

    double zeta_plus_mhz() const { return zeta_plus.convert_to<double>(); }
    double zeta_minus_mhz() const { return zeta_minus.convert_to<double>(); }

    // Excited manifold F + offset exists and is dipole-coupled (offset in -1..1).
    bool has_line(int offset) const;
    int line_count() const;
    bool three_line() const { return line_count() == 3; }
    // I >= 1 and scattering through three excited manifolds.
    bool magic_capable() const;

    // Throws RecordError naming the first violated field.
    void validate() const;

    bool operator==(const AtomRecord&) const = default;
};

struct HyperfineConstants {
    Rational a_hfs = 0;
    std::optional<Rational> b_hfs;
};

// Tables I and II in table order: 13 alkali rows followed by 18 ion rows.
const std::vector<AtomRecord>& builtin_registry();

const AtomRecord* find_record(const std::vector<AtomRecord>& records, const std::string& species,
                              HalfInt F);

// Species known only by nuclear spin, kept so capability errors can be reported
// for isotopes without a table row.
struct SpinNote {
    std::string species;
    HalfInt I;
    std::string note;
};
const std::vector<SpinNote>& nuclear_spin_notes();

// Line-oriented "magicdetune-atoms v1" format.
std::vector<AtomRecord> load_atom_table(std::istream& in);
void write_atom_table(std::ostream& out, const std::vector<AtomRecord>& records);

// Excited-state splittings in the pure magnetic-dipole limit.
std::pair<Rational, Rational> zeta_from_dipole_constant(const HyperfineConstants& c, HalfInt F);

// Exact decimal parsing/formatting ("-0.00981" <-> -981/100000).
Rational parse_decimal(const std::string& text);
std::string format_decimal(const Rational& value);

// Reference detunings for a built-in row (Delta_perp pair in the reference
// order).
struct PublishedRow {
    std::string species;
    HalfInt F;
    bool ion = false;
    double perp_first = 0;
    double perp_second = 0;
    double parallel = 0;
    double pi = 0;
    std::optional<double> optimized;
    std::optional<double> m_value;
    double tolerance = 0.1;  // reference precision, 0.01 for Cs
};
const std::vector<PublishedRow>& published_rows();
const PublishedRow* find_published(const std::string& species, HalfInt F);

}  // namespace magic
