#include "magic/stark.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace magic {

namespace {

double shift(const ScatteringModel& model, int m, double c, double s, const std::array<double, 3>& det,
             double intensity) {
    double e = 0;
    for (int off = -1; off <= 1; ++off) {
        double r = model.element(DipoleKind::sigma_plus, off, m);
        double sm = model.element(DipoleKind::sigma_minus, off, m);
        if (r == 0 && sm == 0) continue;
        e += intensity / det[off + 1] * ((r * r + sm * sm) + (c * c - s * s) * (r * r - sm * sm));
    }
    return e;
}

}  // namespace

double ac_stark_shift(const AtomRecord& atom, HalfInt m, double theta, double delta, double intensity,
                      double pole_radius) {
    if (intensity < 0) throw std::invalid_argument("intensity must be nonnegative");
    ScatteringModel model(atom);
    PolarizabilityTensor probe(atom.F, theta, delta);
    auto det = model.line_detunings(delta, pole_radius);
    return shift(model, probe.index_of(m), std::cos(theta), std::sin(theta), det, intensity);
}

StarkDecomposition stark_decompose(const AtomRecord& atom, double theta, double delta, double pole_radius) {
    ScatteringModel model(atom);
    auto det = model.line_detunings(delta, pole_radius);
    const int n = model.size();
    const int cols = n >= 3 ? 3 : n;

    Eigen::MatrixXd A(n, cols);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        double m = 0.5 * (2 * i - atom.F.twice());
        for (int k = 0; k < cols; ++k) A(i, k) = std::pow(m, k);
        y(i) = shift(model, i, std::cos(theta), std::sin(theta), det, 1.0);
    }
    Eigen::VectorXd coef = A.colPivHouseholderQr().solve(y);

    StarkDecomposition d;
    d.scalar = coef(0);
    d.vector_coeff = cols > 1 ? coef(1) : 0.0;
    d.tensor_coeff = cols > 2 ? coef(2) : 0.0;
    d.fit_residual = (A * coef - y).cwiseAbs().maxCoeff();
    d.scale = y.cwiseAbs().maxCoeff();
    return d;
}

}  // namespace magic
