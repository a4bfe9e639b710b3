#include "magic/polarizability.hpp"

#include "magic/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace magic {

namespace {

constexpr DipoleKind kinds[] = {DipoleKind::sigma_plus, DipoleKind::sigma_minus, DipoleKind::pi};

int kind_slot(DipoleKind k) { return static_cast<int>(k); }

// Circular output -> the element that connects the final state n to the
// excited state, and the projection change n -> excited.
struct Leg {
    DipoleKind kind;
    int q;
};

Leg leg_of(Output mu) {
    switch (mu) {
        case Output::plus: return {DipoleKind::sigma_plus, 1};
        case Output::minus: return {DipoleKind::sigma_minus, -1};
        case Output::pi: return {DipoleKind::pi, 0};
        default: throw std::invalid_argument("not a circular polarization");
    }
}

}  // namespace

PolarizabilityTensor::PolarizabilityTensor(HalfInt F, double theta, double delta)
    : F_(F), dim_(F.twice() + 1), theta_(theta), delta_(delta),
      data_(static_cast<size_t>(output_count) * dim_ * dim_, 0.0) {}

int PolarizabilityTensor::index_of(HalfInt m) const {
    int i2 = m.twice() + F_.twice();
    if (i2 < 0 || i2 > 2 * F_.twice() || i2 % 2 != 0)
        throw std::out_of_range("projection " + m.str() + " outside F=" + F_.str());
    return i2 / 2;
}

double PolarizabilityTensor::at(Output mu, HalfInt n, HalfInt m) const {
    return at_index(mu, index_of(n), index_of(m));
}

ScatteringModel::ScatteringModel(const AtomRecord& atom) : atom_(atom), dim_(atom.F.twice() + 1) {
    atom.validate();
    for (int off = -1; off <= 1; ++off) {
        present_[off + 1] = atom.has_line(off);
        HalfInt Fp = atom.F + HalfInt(off);
        if (present_[off + 1])
            six_sq_[off + 1] =
                wigner_6j(atom.J, atom.Jp, HalfInt(1), Fp, atom.F, atom.I).square.convert_to<double>();
        for (DipoleKind k : kinds) {
            auto& v = elements_[kind_slot(k)][off + 1];
            v.assign(dim_, 0.0);
            if (!present_[off + 1]) continue;
            for (int i = 0; i < dim_; ++i)
                v[i] = dipole_element(k, half(2 * i - atom.F.twice()), atom.F, Fp, atom.I, atom.J,
                                      atom.Jp);
        }
    }
}

double ScatteringModel::element(DipoleKind kind, int offset, int m_index) const {
    if (m_index < 0 || m_index >= dim_) return 0.0;
    return elements_[kind_slot(kind)][offset + 1][m_index];
}

std::array<double, 3> ScatteringModel::line_detunings(double delta, double pole_radius) const {
    std::array<double, 3> det = {delta + atom_.zeta_minus_mhz(), delta, delta + atom_.zeta_plus_mhz()};
    for (int i = 0; i < 3; ++i)
        if (present_[i] && std::abs(det[i]) < pole_radius)
            throw PoleError((atom_.F + HalfInt(i - 1)).str(), delta);
    return det;
}

double ScatteringModel::circular(Output mu, Output nu, int n, int m,
                                 const std::array<double, 3>& det) const {
    Leg in = leg_of(nu);
    Leg out = leg_of(mu);
    if (in.q == 0) throw std::invalid_argument("the drive has no pi component");
    // excited projection index (twice-units cancel: indices shift by q)
    if (n + out.q != m + in.q) return 0.0;
    double sum = 0;
    for (int off = -1; off <= 1; ++off) {
        if (!present_[off + 1]) continue;
        sum -= element(in.kind, off, m) * element(out.kind, off, n) / det[off + 1];
    }
    return sum;
}

PolarizabilityTensor ScatteringModel::tensor(const DriveConfig& drive) const {
    if (!(drive.theta >= 0 && drive.theta <= std::numbers::pi / 2 + 1e-15))
        throw std::invalid_argument("theta must lie in [0, pi/2]");
    auto det = line_detunings(drive.delta, drive.pole_radius);
    const double c = std::cos(drive.theta), s = std::sin(drive.theta);

    PolarizabilityTensor t(F(), drive.theta, drive.delta);
    for (int m = 0; m < dim_; ++m) {
        for (int n = 0; n < dim_; ++n) {
            double ap = c * circular(Output::plus, Output::plus, n, m, det) +
                        s * circular(Output::plus, Output::minus, n, m, det);
            double am = c * circular(Output::minus, Output::plus, n, m, det) +
                        s * circular(Output::minus, Output::minus, n, m, det);
            double api = c * circular(Output::pi, Output::plus, n, m, det) +
                         s * circular(Output::pi, Output::minus, n, m, det);
            t.at_index(Output::plus, n, m) = ap;
            t.at_index(Output::minus, n, m) = am;
            t.at_index(Output::pi, n, m) = api;
            t.at_index(Output::parallel, n, m) = c * ap + s * am;
            t.at_index(Output::perpendicular, n, m) = s * ap - c * am;
        }
    }
    return t;
}

ConditionResiduals ScatteringModel::residuals(double delta, double pole_radius) const {
    auto det = line_detunings(delta, pole_radius);
    double scale = 0;
    for (int i = 0; i < 3; ++i)
        if (present_[i]) scale += six_sq_[i] / std::abs(det[i]);

    auto line_sum = [&](auto&& term) {
        double s = 0;
        for (int off = -1; off <= 1; ++off)
            if (present_[off + 1]) s += term(off) / det[off + 1];
        return s;
    };
    using K = DipoleKind;
    ConditionResiduals r;
    const int top = dim_ - 1;

    for (int m = 0; m < dim_; ++m) {
        double perp = line_sum([&](int off) {
            double a = element(K::sigma_plus, off, m), b = element(K::sigma_minus, off, m);
            return a * a - b * b;
        });
        r.perp_residual = std::max(r.perp_residual, std::abs(perp) / scale);
        if (m + 2 < dim_) {
            double circ = line_sum([&](int off) {
                return element(K::sigma_plus, off, m) * element(K::sigma_minus, off, m + 2);
            });
            r.raman_circ_residual = std::max(r.raman_circ_residual, std::abs(circ) / scale);
        }
    }

    if (top >= 2) {
        // Rayleigh sum is c0 + c2 m^2; difference of the two outermost states
        auto amp = [&](int m) {
            return line_sum([&](int off) {
                double a = element(K::sigma_plus, off, m), b = element(K::sigma_minus, off, m);
                return a * a + b * b;
            });
        };
        double mt = 0.5 * F().twice(), mt1 = mt - 1;
        r.parallel_residual = std::abs((amp(top) - amp(top - 1)) / (mt * mt - mt1 * mt1)) / scale;
    }
    if (top >= 1) {
        double pi = line_sum([&](int off) {
            return element(K::sigma_plus, off, top - 1) * element(K::pi, off, top);
        });
        r.raman_pi_scalar_residual = std::abs(pi) / scale;
    }
    return r;
}

MagicComponents ScatteringModel::components(double theta, double delta, double pole_radius) const {
    PolarizabilityTensor t = tensor({theta, delta, pole_radius});
    const int ref = reference_index();
    const double norm = t.at_index(Output::parallel, ref, ref);
    if (norm == 0.0) throw std::domain_error("vanishing normalizing polarizability");

    MagicComponents c;
    for (int m = 0; m < dim_; ++m) {
        for (int n = 0; n < dim_; ++n) {
            double par = t.at_index(Output::parallel, n, m) / norm;
            double perp = t.at_index(Output::perpendicular, n, m) / norm;
            double pi = t.at_index(Output::pi, n, m) / norm;
            if (n == m) {
                c.perp_rayleigh += perp * perp;
                c.par_rayleigh += (par - 1) * (par - 1);
            } else {
                c.raman_circ += par * par + perp * perp;
            }
            c.raman_pi += pi * pi;
        }
    }
    return c;
}

PolarizabilityTensor generalized_polarizability(const AtomRecord& atom, const DriveConfig& drive) {
    return ScatteringModel(atom).tensor(drive);
}

ConditionResiduals condition_residuals(const AtomRecord& atom, double delta, double pole_radius) {
    return ScatteringModel(atom).residuals(delta, pole_radius);
}

MagicComponents magic_components(const AtomRecord& atom, double theta, double delta,
                                 double pole_radius) {
    return ScatteringModel(atom).components(theta, delta, pole_radius);
}

double magic_distance(const AtomRecord& atom, double theta, double delta, double pole_radius) {
    return magic_components(atom, theta, delta, pole_radius).total();
}

}  // namespace magic
