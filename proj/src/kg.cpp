#include "nuforge/kg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "nuforge/catalog.hpp"
#include "nuforge/errors.hpp"
#include "nuforge/orthopoly.hpp"

namespace nuforge {

namespace {

constexpr Interval kHalfLine{0.0, std::numeric_limits<double>::infinity()};

double coupling_scale(int n) {
    const double k = 2.0 * n + 1.0;
    return 16.0 / (k * k);
}

}  // namespace

KGPotential::KGPotential(double A, double B, double m) : A_(A), B_(B), m_(m) {
    if (!(m > 0.0) || !std::isfinite(m))
        throw ParameterDomainError(fmt::format("rest mass must be positive, got {}", m));
    if (!std::isfinite(A) || !std::isfinite(B)) throw ParameterDomainError("couplings must be finite");
}

KGPotential KGPotential::from_B(double B, int sign, double m) {
    if (sign != 1 && sign != -1) throw ParameterDomainError(fmt::format("sign must be +1 or -1, got {}", sign));
    return KGPotential(sign * std::sqrt(B * B + kKGConstraint), B, m);
}

PotentialExpr KGPotential::vector_potential() const { return PotentialExpr(kHalfLine).add(-A_, Basis::InvR); }

PotentialExpr KGPotential::scalar_potential() const { return PotentialExpr(kHalfLine).add(-B_, Basis::InvR); }

bool KGPotential::satisfies_constraint() const {
    return std::abs(A_ * A_ - B_ * B_ - kKGConstraint) <= 1e-12 * std::max(1.0, B_ * B_);
}

KGMapped kg_map(const PotentialExpr& scalar, const PotentialExpr& vector, double m, double epsilon) {
    KGMapped out;
    out.effective_potential = 2.0 * (m * scalar + epsilon * vector) + (scalar * scalar - vector * vector);
    out.effective_energy = epsilon * epsilon - m * m;
    return out;
}

KGSplit kg_decompose(const KGPotential& pot, double epsilon) {
    const PotentialExpr vs = pot.scalar_potential();
    const PotentialExpr vv = pot.vector_potential();
    const PotentialExpr quadratic = vs * vs - vv * vv;
    KGSplit out;
    out.nonrel_potential = 2.0 * (pot.mass() * vs + epsilon * vv);
    out.correction_potential = quadratic.without_constant();
    out.correction_energy = -quadratic.constant_term();
    return out;
}

double kg_quantization_residual(const KGPotential& pot, int n, double epsilon) {
    const double m = pot.mass();
    const double c = pot.mass() * pot.B() + epsilon * pot.A();
    return epsilon * epsilon - m * m + coupling_scale(n) * c * c;
}

std::vector<KGLevel> kg_admissible_levels(const KGPotential& pot, int n) {
    if (n < 0) throw ParameterDomainError(fmt::format("n must be >= 0, got {}", n));
    if (!pot.satisfies_constraint())
        throw ParameterDomainError(
            fmt::format("couplings must satisfy A^2 - B^2 = 3/16 (A = {}, B = {})", pot.A(), pot.B()));
    const double m = pot.mass();
    const double A = pot.A();
    const double B = pot.B();
    const double d = coupling_scale(n);
    // eps^2 (1 + D A^2) + 2 D A B m eps + m^2 (D B^2 - 1) = 0
    const double qa = 1.0 + d * A * A;
    const double qb = 2.0 * d * A * B * m;
    const double qc = m * m * (d * B * B - 1.0);
    const double disc = qb * qb - 4.0 * qa * qc;
    std::vector<double> roots;
    if (disc >= 0.0) {
        const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
        if (q != 0.0) {
            roots.push_back(q / qa);
            roots.push_back(qc / q);
        } else {
            roots.push_back(0.0);
        }
    }
    std::vector<KGLevel> out;
    for (double eps : roots) {
        for (int i = 0; i < 2; ++i) {
            const double g = kg_quantization_residual(pot, n, eps);
            const double dg = 2.0 * eps + 2.0 * d * A * (m * B + eps * A);
            if (dg != 0.0) eps -= g / dg;
        }
        const double a = 4.0 * (m * B + eps * A) / (2.0 * n + 1.0);
        if (!(std::abs(eps) < m) || !(a > 0.0)) continue;
        KGLevel level;
        level.n = n;
        level.epsilon = eps;
        level.a = a;
        level.epsilon_F = -a * a;
        level.epsilon_f = 0.0;
        out.push_back(level);
    }
    std::sort(out.begin(), out.end(), [](const KGLevel& x, const KGLevel& y) { return x.epsilon < y.epsilon; });
    return out;
}

KGLevel kg_spectrum(const KGPotential& pot, int n) {
    const auto levels = kg_admissible_levels(pot, n);
    if (levels.empty())
        throw NoBoundStateError(fmt::format("no root with |epsilon| < m and a > 0 for n = {} (A = {}, B = {}, m = {})",
                                            n, pot.A(), pot.B(), pot.mass()));
    return levels.back();
}

Jet kg_wavefunction_jet(const KGLevel& level, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError(fmt::format("r must be positive and finite, got {}", r));
    if (!(level.a > 0.0)) throw ParameterDomainError("level scale a must be positive");
    const double c = std::sqrt(2.0 * level.a);
    const double rt = std::sqrt(r);
    const double s = c * rt;
    const double s1 = c / (2.0 * rt);
    const double s2 = -c / (4.0 * r * rt);
    const Jet h = eval_poly_jet(PolynomialFamily::hermite(), level.n, s);
    // u(s) = p(s) H_n(s), p = s^(1/2) exp(-s^2/2)
    const double p = std::sqrt(s) * std::exp(-s * s / 2.0);
    const double l1 = 0.5 / s - s;
    const double l2 = -0.5 / (s * s) - 1.0;
    const double u = p * h.value;
    const double u1 = p * (l1 * h.value + h.first);
    const double u2 = p * ((l2 + l1 * l1) * h.value + 2.0 * l1 * h.first + h.second);
    return {u, u1 * s1, u2 * s1 * s1 + u1 * s2};
}

double kg_wavefunction(const KGLevel& level, double r) { return kg_wavefunction_jet(level, r).value; }

SolvableSystem kg_nonrel_system(const KGLevel& level) { return inversely_linear_nonrel(level.a, level.n); }

}  // namespace nuforge
