#include "magic/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace magic {

EffectiveCavityParams effective_params(const AtomRecord& atom, const CavityConfig& cfg, double delta,
                                       double pole_radius) {
    if (!(cfg.kappa > 0)) throw std::invalid_argument("kappa must be positive");
    ScatteringModel model(atom);
    auto det = model.line_detunings(delta, pole_radius);
    const int n = model.size();
    const double c = std::cos(cfg.theta), s = std::sin(cfg.theta);
    const double g2 = cfg.g * cfg.g, W2 = cfg.omega_rabi * cfg.omega_rabi, Wg = cfg.omega_rabi * cfg.g;

    EffectiveCavityParams p;
    p.F = atom.F;
    for (auto* v : {&p.U_a, &p.U_b, &p.omega_m, &p.omega_tilde, &p.h, &p.eta_plus_ray, &p.eta_minus_ray,
                    &p.eta_raman})
        v->assign(n, 0.0);

    for (int off = -1; off <= 1; ++off) {
        if (!atom.has_line(off)) continue;
        const double d = det[off + 1];
        p.saturation_ratio = std::max(p.saturation_ratio, std::abs(cfg.omega_rabi / d));
        for (int m = 0; m < n; ++m) {
            double r = model.element(DipoleKind::sigma_plus, off, m);
            double sm = model.element(DipoleKind::sigma_minus, off, m);
            double rs = model.element(DipoleKind::sigma_plus, off, m) *
                        model.element(DipoleKind::sigma_minus, off, m + 2);
            p.U_a[m] += g2 * r * r / d;
            p.U_b[m] += g2 * sm * sm / d;
            p.omega_m[m] += W2 * (c * c * r * r + s * s * sm * sm) / (4 * d);
            p.omega_tilde[m] += c * s * W2 * rs / (4 * d);
            p.h[m] += g2 * rs / d;
            p.eta_plus_ray[m] += c * Wg * r * r / (2 * d);
            p.eta_minus_ray[m] += s * Wg * sm * sm / (2 * d);
            p.eta_raman[m] += Wg * rs / (2 * d);
        }
    }
    p.validity_warning = p.saturation_ratio > saturation_warning_threshold;
    return p;
}

ParallelBasisParams parallel_basis_params(const EffectiveCavityParams& params, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    ParallelBasisParams out;
    const size_t n = params.U_a.size();
    for (size_t m = 0; m < n; ++m) {
        out.U_par.push_back(c * c * params.U_a[m] + s * s * params.U_b[m]);
        out.U_perp.push_back(s * s * params.U_a[m] + c * c * params.U_b[m]);
        out.eta_par.push_back(c * params.eta_plus_ray[m] + s * params.eta_minus_ray[m]);
    }
    auto spread = [](const std::vector<double>& v) {
        double mean = 0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double worst = 0;
        for (double x : v) worst = std::max(worst, std::abs(x - mean));
        return mean == 0 ? worst : worst / std::abs(mean);
    };
    if (n > 0) out.m_spread = std::max(spread(out.U_par), spread(out.eta_par));
    return out;
}

MultiAtomResult multi_atom_steady_state(const CavityConfig& cfg, double U_par, double eta_par) {
    if (!(cfg.kappa > 0)) throw std::invalid_argument("kappa must be positive");
    MultiAtomResult r;
    for (double phi : cfg.phases) {
        const double w = std::sin(phi);
        r.drive_sum += w * eta_par;
        r.shift_sum += w * w * U_par;
    }
    const double detuning = cfg.delta_c + r.shift_sum;
    r.photon_number = r.drive_sum * r.drive_sum / (detuning * detuning + cfg.kappa * cfg.kappa);
    return r;
}

}  // namespace magic
