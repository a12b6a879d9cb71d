#include "nuforge/system.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "nuforge/errors.hpp"

namespace nuforge {

namespace {

constexpr int kFitSamples = 50;
constexpr double kSnapTolerance = 1e-12;

// Sample abscissae covering the bulk of the domain where every basis
// function is well scaled; `offset` shifts to an interleaved check set.
std::vector<double> sample_points(const Transformation& t, double offset) {
    std::vector<double> r(kFitSamples);
    if (t.kind() == MapKind::Cosine) {
        const double len = std::numbers::pi / t.scale();
        for (int i = 0; i < kFitSamples; ++i)
            r[static_cast<std::size_t>(i)] = len * (0.05 + 0.9 * (i + offset) / kFitSamples);
        return r;
    }
    // Geometric spacing over [L/4, 4L] with L the natural length of the map.
    const double len = 1.0 / t.scale();
    const double lo = std::log(0.25 * len);
    const double hi = std::log(4.0 * len);
    for (int i = 0; i < kFitSamples; ++i)
        r[static_cast<std::size_t>(i)] = std::exp(lo + (hi - lo) * (i + offset) / kFitSamples);
    return r;
}

bool same_potential(const PotentialExpr& a, const PotentialExpr& b) {
    const auto ta = a.terms();
    const auto tb = b.terms();
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i].basis != tb[i].basis || ta[i].scale != tb[i].scale) return false;
        const double scale = std::max({1.0, std::abs(ta[i].coefficient), std::abs(tb[i].coefficient)});
        if (std::abs(ta[i].coefficient - tb[i].coefficient) > 1e-10 * scale) return false;
    }
    return true;
}

}  // namespace

PotentialSplit fit_to_grammar(const std::function<double(double)>& target, const Transformation& t,
                              double tolerance) {
    const auto basis = t.candidate_basis();
    const auto nb = static_cast<Eigen::Index>(basis.size());
    const auto fit_r = sample_points(t, 0.0);
    const auto check_r = sample_points(t, 0.5);

    Eigen::MatrixXd m(kFitSamples, nb);
    Eigen::VectorXd rhs(kFitSamples);
    for (int i = 0; i < kFitSamples; ++i) {
        const double r = fit_r[static_cast<std::size_t>(i)];
        rhs(i) = target(r);
        for (Eigen::Index j = 0; j < nb; ++j) {
            const auto& b = basis[static_cast<std::size_t>(j)];
            m(i, j) = basis_value(b.basis, b.scale, r);
        }
    }
    if (!rhs.allFinite()) throw DecompositionError("target is not finite on the sample points");
    // Column scaling keeps r^2 and 1/r^2 columns comparable.
    Eigen::VectorXd colscale = m.colwise().lpNorm<Eigen::Infinity>().transpose();
    for (Eigen::Index j = 0; j < nb; ++j) m.col(j) /= colscale(j);
    Eigen::VectorXd coef = m.colPivHouseholderQr().solve(rhs);

    const double target_scale = std::max(rhs.lpNorm<Eigen::Infinity>(), 1e-300);
    for (Eigen::Index j = 0; j < nb; ++j) {
        // coef(j) is already the term's largest magnitude over the samples.
        if (std::abs(coef(j)) <= kSnapTolerance * target_scale) coef(j) = 0.0;
        coef(j) /= colscale(j);
    }

    PotentialExpr expr(t.domain());
    for (Eigen::Index j = 0; j < nb; ++j) {
        const auto& b = basis[static_cast<std::size_t>(j)];
        expr.add(coef(j), b.basis, b.scale);
    }

    double worst = 0.0;
    double scale = 0.0;
    for (double r : check_r) {
        const double v = target(r);
        worst = std::max(worst, std::abs(v - expr(r)));
        scale = std::max(scale, std::abs(v));
        for (const auto& term : expr.terms())
            scale = std::max(scale, std::abs(term.coefficient * basis_value(term.basis, term.scale, r)));
    }
    if (!(worst <= tolerance * std::max(scale, 1e-300)))
        throw DecompositionError(fmt::format(
            "function is not representable in the potential basis of {} (relative misfit {:.3g})", t.descriptor(),
            worst / std::max(scale, 1e-300)));

    PotentialSplit out;
    out.energy = -expr.constant_term();
    out.potential = expr.without_constant();
    return out;
}

PotentialSplit decompose_polynomial_part(const HypergeometricData& data, const Transformation& t) {
    auto target = [&](double r) {
        const MapJet j = t.jet(r);
        const double sg = data.sigma(j.s);
        return -data.sigma_tilde(j.s) * j.d1 * j.d1 / (sg * sg);
    };
    return fit_to_grammar(target, t);
}

PotentialSplit decompose_factor_part(const FactorF& f) {
    return fit_to_grammar([&](double r) { return f.second_over_value(r); }, f.transformation());
}

SolvableSystem::SolvableSystem(std::string name, PotentialExpr potential, EnergyFn energy,
                               std::string energy_formula, Provenance provenance, FactorF factor,
                               std::optional<int> fixed_level)
    : name_(std::move(name)),
      potential_(std::move(potential)),
      energy_(std::move(energy)),
      energy_formula_(std::move(energy_formula)),
      provenance_(std::move(provenance)),
      factor_(std::move(factor)),
      prefactor_(solution_prefactor(hypergeometric_data(provenance_.family, 0, provenance_.weighting))),
      fixed_level_(fixed_level) {}

void SolvableSystem::require_level(int n) const {
    if (!admits(n)) {
        if (fixed_level_)
            throw DomainError(fmt::format("{} only has level n = {}, requested {}", name_, *fixed_level_, n));
        throw DomainError(fmt::format("level index must be >= 0, got {}", n));
    }
}

EnergyLevel SolvableSystem::energy(int n) const {
    require_level(n);
    return energy_(n);
}

Jet SolvableSystem::wavefunction(int n, double r) const {
    require_level(n);
    if (!domain().contains(r))
        throw DomainError(fmt::format("r = {} is outside the open domain ({}, {}) of {}", r, domain().left,
                                      domain().right, name_));
    const MapJet m = provenance_.transformation.jet(r);
    const Jet y = eval_poly_jet(provenance_.family, n, m.s);
    const double w1 = prefactor_.log_first(m.s);
    const double w2 = prefactor_.log_second(m.s);
    // g = f(r) w(s(r)); Psi = g y(s(r))
    const double g1 = factor_.log_first(r) + w1 * m.d1;
    const double g2 = factor_.log_second(r) + w2 * m.d1 * m.d1 + w1 * m.d2;
    const double g = std::exp(factor_.log_value(r) + prefactor_.log_value(m.s));
    const double yv = y.value;
    const double y1 = y.first * m.d1;
    const double y2 = y.second * m.d1 * m.d1 + y.first * m.d2;
    return {g * yv, g * (g1 * yv + y1), g * ((g2 + g1 * g1) * yv + 2.0 * g1 * y1 + y2)};
}

SolvableSystem SolvableSystem::with_energy(EnergyFn energy, std::string formula, std::string name) const {
    SolvableSystem out = *this;
    out.energy_ = std::move(energy);
    out.energy_formula_ = std::move(formula);
    out.name_ = std::move(name);
    return out;
}

SolvableSystem assemble_system(const PolynomialFamily& family, LevelRange levels, const Transformation& t,
                               JacobiWeighting weighting) {
    if (levels.lowest < 0 || levels.highest < levels.lowest)
        throw ParameterDomainError(fmt::format("invalid level range [{}, {}]", levels.lowest, levels.highest));
    const HypergeometricData base = hypergeometric_data(family, levels.lowest, weighting);
    FactorF factor = build_factor_f(base, t);
    const PotentialSplit factor_split = decompose_factor_part(factor);

    const PotentialSplit first = decompose_polynomial_part(base, t);
    const bool single = levels.lowest == levels.highest;
    bool n_dependent = false;
    for (int n = levels.lowest + 1; n <= std::max(levels.highest, levels.lowest + 1); ++n) {
        const PotentialSplit split = decompose_polynomial_part(hypergeometric_data(family, n, weighting), t);
        if (!same_potential(split.potential, first.potential)) n_dependent = true;
    }
    if (n_dependent && !single)
        throw DecompositionError(fmt::format("the potential of {} under {} depends on n; assemble one level at a time",
                                             family.name(), t.descriptor()));

    PotentialExpr potential = first.potential + factor_split.potential;
    potential.set_domain(t.domain());
    const double e_factor = factor_split.energy;
    const PotentialExpr v_poly = first.potential;

    SolvableSystem::EnergyFn energy = [=](int n) {
        const PotentialSplit split = decompose_polynomial_part(hypergeometric_data(family, n, weighting), t);
        if (!same_potential(split.potential, v_poly))
            throw DecompositionError(fmt::format("level {} belongs to a different potential", n));
        return EnergyLevel{split.energy + e_factor, split.energy, e_factor};
    };
    std::string name = fmt::format("{} with {}", family.name(), t.descriptor());
    return SolvableSystem(std::move(name), std::move(potential), std::move(energy), "E_F(n) + E_f (decomposed)",
                          Provenance{family, weighting, t}, std::move(factor),
                          n_dependent ? std::optional<int>(levels.lowest) : std::nullopt);
}

Jet evaluate_wavefunction(const SolvableSystem& system, int n, double r) { return system.wavefunction(n, r); }

}  // namespace nuforge
