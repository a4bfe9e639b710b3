#include "magic/detunings.hpp"

#include "magic/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

namespace magic {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

Wide widen(const Rational& q) {
    return Wide(boost::multiprecision::numerator(q)) / Wide(boost::multiprecision::denominator(q));
}

// Per-line weights of the two conditions, in units of the squared 6-j symbol.
// Ellipticity: slope in m of r^2 - s^2; amplitude: m^2 coefficient of r^2 + s^2.
Rational perp_weight(const Rational& F, int offset) {
    switch (offset) {
        case 1: return 2 * F * (2 * F + 3);
        case 0: return -(4 * F + 2);
        default: return (1 - 2 * F) * (2 * F + 2);
    }
}

Rational parallel_weight(const Rational& F, int offset) {
    switch (offset) {
        case 1: return F;
        case 0: return -(2 * F + 1);
        default: return F + 1;
    }
}

Rational line_zeta(const AtomRecord& atom, int offset) {
    return offset == 0 ? Rational(0) : offset > 0 ? atom.zeta_plus : atom.zeta_minus;
}

// sum_l W_l / (Delta + zeta_l) = 0 over three lines, cleared of denominators.
QuadraticCoefficients three_line_quadratic(const AtomRecord& atom, Rational (*weight)(const Rational&, int)) {
    const Rational F = atom.F.rational();
    Rational A = weight(F, 1) * six_j_square(atom, 1);
    Rational B = weight(F, 0) * six_j_square(atom, 0);
    Rational C = weight(F, -1) * six_j_square(atom, -1);
    const Rational& zp = atom.zeta_plus;
    const Rational& zm = atom.zeta_minus;
    return {A + B + C, zm * A + (zm + zp) * B + zp * C, zm * zp * B};
}

std::vector<double> real_roots(const QuadraticCoefficients& q, RootStatus& status) {
    if (q.a == 0) {
        status = RootStatus::degenerate_linear;
        if (q.b == 0) return {};
        return {Rational(-q.c / q.b).convert_to<double>()};
    }
    Rational disc = q.discriminant();
    if (disc < 0) {
        status = RootStatus::no_real_root;
        return {};
    }
    status = RootStatus::two_roots;
    Wide sd = sqrt(widen(disc));
    Wide b = widen(q.b);
    Wide half_q = b >= 0 ? Wide(-(b + sd) / 2) : Wide(-(b - sd) / 2);
    Wide r1, r2;
    if (half_q == 0) {
        r1 = r2 = 0;  // b = c = 0
    } else {
        r1 = half_q / widen(q.a);
        r2 = widen(q.c) / half_q;
    }
    std::vector<double> out = {r1.convert_to<double>(), r2.convert_to<double>()};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Rational six_j_square(const AtomRecord& atom, int offset) {
    HalfInt Fp = atom.F + HalfInt(offset);
    if (Fp.twice() < 0) return 0;
    return wigner_6j(atom.J, atom.Jp, HalfInt(1), Fp, atom.F, atom.I).square;
}

QuadraticCoefficients perp_quadratic(const AtomRecord& atom) {
    return three_line_quadratic(atom, perp_weight);
}

PerpSolution solve_delta_perp(const AtomRecord& atom) {
    PerpSolution s;
    s.quadratic = perp_quadratic(atom);
    s.roots = real_roots(s.quadratic, s.status);
    return s;
}

ParallelSolution solve_delta_parallel(const AtomRecord& atom) {
    QuadraticCoefficients q = three_line_quadratic(atom, parallel_weight);
    ParallelSolution s;
    s.delta_squared_coefficient = q.a;
    if (q.a != 0) {
        s.quadratic = true;
        RootStatus st;
        s.roots = real_roots(q, st);
        return s;
    }
    if (q.b == 0) throw std::domain_error("amplitude condition has no finite root");
    s.exact = Rational(-q.c / q.b);
    s.roots = {s.exact->convert_to<double>()};
    return s;
}

Rational solve_delta_pi_exact(const AtomRecord& atom) {
    Rational up = six_j_square(atom, 1);
    Rational mid = six_j_square(atom, 0);
    if (up == mid) throw std::domain_error("pi-Raman closed form is singular: <F+1>^2 = <F>^2");
    return atom.zeta_plus * mid / (up - mid);
}

double solve_delta_pi(const AtomRecord& atom) {
    return solve_delta_pi_exact(atom).convert_to<double>();
}

DetuningSet solve_detunings(const AtomRecord& atom) {
    if (!atom.three_line())
        throw CapabilityError(atom.species + " F=" + atom.F.str() +
                              " scatters through fewer than three excited manifolds");
    PerpSolution perp = solve_delta_perp(atom);
    if (perp.status != RootStatus::two_roots)
        throw std::domain_error("ellipticity condition does not have two real roots");
    ParallelSolution par = solve_delta_parallel(atom);
    if (par.quadratic)
        throw std::domain_error("amplitude condition is quadratic for this line; use solve_delta_parallel");

    DetuningSet d;
    d.quadratic = perp.quadratic;
    d.delta_perp = {perp.roots[0], perp.roots[1]};
    d.delta_parallel = par.roots[0];
    d.delta_pi = solve_delta_pi(atom);
    d.delta_perp_nearest = std::abs(perp.roots[0] - d.delta_parallel) <=
                                   std::abs(perp.roots[1] - d.delta_parallel)
                               ? perp.roots[0]
                               : perp.roots[1];
    return d;
}

Rational amplitude_zero_coefficient(HalfInt J, HalfInt Jp, HalfInt F, HalfInt I) {
    auto six = [&](int off) -> Rational {
        HalfInt Fp = F + HalfInt(off);
        if (Fp.twice() < 0) return 0;
        return wigner_6j(J, Jp, HalfInt(1), Fp, F, I).square;
    };
    Rational f = F.rational();
    return 2 * f * six(1) - (4 * f + 2) * six(0) + (2 * f + 2) * six(-1);
}

D1Detunings solve_d1(const AtomRecord& atom) {
    if (atom.J != atom.Jp) throw std::invalid_argument("D1-type records need J' = J");
    const bool lower = atom.has_line(0) && atom.has_line(1) && !atom.has_line(-1);
    const bool upper = atom.has_line(-1) && atom.has_line(0) && !atom.has_line(1);
    if (!lower && !upper)
        throw std::invalid_argument("D1-type records need exactly the lines {F, F+1} or {F-1, F}");

    const Rational F = atom.F.rational();
    const Rational s0 = six_j_square(atom, 0);
    D1Detunings d;
    if (lower) {
        const Rational s1 = six_j_square(atom, 1);
        const Rational& z = atom.zeta_plus;
        d.delta_perp = Rational(z * (2 * F + 1) * s0 / (F * (2 * F + 3) * s1 - (2 * F + 1) * s0))
                           .convert_to<double>();
        d.delta_parallel =
            Rational(z * (4 * F + 2) * s0 / (2 * F * s1 - (2 * F + 1) * s0)).convert_to<double>();
    } else {
        const Rational sm = six_j_square(atom, -1);
        const Rational& z = atom.zeta_minus;
        d.delta_perp =
            Rational(z * (2 * F + 1) * s0 / ((1 - 2 * F) * (F + 1) * sm - (2 * F + 1) * s0))
                .convert_to<double>();
        d.delta_parallel =
            Rational(z * (4 * F + 2) * s0 / ((2 * F + 2) * sm - (2 * F + 1) * s0)).convert_to<double>();
    }

    // the same two-line condition built from the per-line weights
    const int other = lower ? 1 : -1;
    Rational w0 = parallel_weight(F, 0) * s0;
    Rational w1 = parallel_weight(F, other) * six_j_square(atom, other);
    Rational z = line_zeta(atom, other);
    // w1 * Delta + w0 * (Delta + z) = 0
    if (w0 + w1 != 0) d.parallel_condition_root = Rational(-w0 * z / (w0 + w1)).convert_to<double>();
    return d;
}

MagicExistence magic_exists(HalfInt J, HalfInt Jp, HalfInt F, HalfInt I) {
    if (Jp != J + HalfInt(1))
        throw std::invalid_argument("magic-existence classification is derived only for J' = J + 1");
    if (!triangle(I, J, F)) throw std::invalid_argument("F is not a valid coupling of I and J");
    MagicExistence m;
    m.residual = amplitude_zero_coefficient(J, Jp, F, I);
    m.exists = m.residual == 0;
    return m;
}

DipoleLimitResult dipole_limit_detunings(const Rational& a_hfs, HalfInt F, HalfInt I, HalfInt J,
                                         HalfInt Jp) {
    if (!magic_exists(J, Jp, F, I).exists)
        throw CapabilityError("the amplitude condition does not reduce to a single root here");

    AtomRecord atom;
    atom.species = "dipole-limit";
    atom.I = I;
    atom.J = J;
    atom.Jp = Jp;
    atom.F = F;
    auto [zp, zm] = zeta_from_dipole_constant({a_hfs, std::nullopt}, F);
    atom.zeta_plus = zp;
    atom.zeta_minus = zm;
    if (!atom.three_line()) throw CapabilityError("dipole limit needs three excited manifolds");

    PerpSolution perp = solve_delta_perp(atom);
    ParallelSolution par = solve_delta_parallel(atom);
    Rational pi = solve_delta_pi_exact(atom);
    if (perp.status != RootStatus::two_roots || par.quadratic)
        throw ConsistencyError("dipole-limit conditions are not in the two-root/single-root form");

    const double parallel = par.roots[0];
    const bool first = std::abs(perp.roots[0] - parallel) <= std::abs(perp.roots[1] - parallel);
    const double near = first ? perp.roots[0] : perp.roots[1];
    const double far = first ? perp.roots[1] : perp.roots[0];

    auto rel = [](double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); };
    if (rel(near, parallel) > 1e-9 || rel(pi.convert_to<double>(), parallel) > 1e-9)
        throw ConsistencyError("condition detunings do not coincide in the dipole limit");

    DipoleLimitResult r;
    r.common_root = parallel;
    r.exact_root_over_a = *par.exact / a_hfs;
    r.root_over_a = r.exact_root_over_a.convert_to<double>();
    r.discarded_perp_root = far;
    return r;
}

}  // namespace magic
