#include "nuforge/transformation.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "nuforge/errors.hpp"

namespace nuforge {

namespace {

void require_scale(double a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw ParameterDomainError(fmt::format("transformation scale must be positive and finite, got {}", a));
}

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::Principal: return "principal";
        case Branch::HyperbolicCosine: return "cosh";
        case Branch::HyperbolicSine: return "sinh";
        case Branch::HyperbolicTangent: return "tanh";
        case Branch::HyperbolicCotangent: return "coth";
    }
    return {};
}

}  // namespace

Transformation Transformation::cosine(double a) {
    require_scale(a);
    return {MapKind::Cosine, a};
}

Transformation Transformation::quadratic(double a) {
    require_scale(a);
    return {MapKind::Quadratic, a};
}

Transformation Transformation::sqrt_map(double a) {
    require_scale(a);
    return {MapKind::Sqrt, a};
}

Interval Transformation::domain() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (kind_ == MapKind::Cosine) return {0.0, std::numbers::pi / a_};
    return {0.0, inf};
}

Interval Transformation::s_range() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (kind_ == MapKind::Cosine) return {-1.0, 1.0};
    return {0.0, inf};
}

MapJet Transformation::jet(double r) const {
    const double a = a_;
    switch (kind_) {
        case MapKind::Cosine: {
            const double c = std::cos(a * r);
            const double sn = std::sin(a * r);
            return {c, -a * sn, -a * a * c, a * a * a * sn};
        }
        case MapKind::Quadratic:
            return {a * a * r * r / 4.0, a * a * r / 2.0, a * a / 2.0, 0.0};
        case MapKind::Sqrt: {
            const double c = std::sqrt(2.0 * a);
            const double rt = std::sqrt(r);
            return {c * rt, c / (2.0 * rt), -c / (4.0 * r * rt), 3.0 * c / (8.0 * r * r * rt)};
        }
    }
    return {0.0, 0.0, 0.0, 0.0};
}

double Transformation::constraint_value(double r) const {
    const MapJet j = jet(r);
    switch (kind_) {
        case MapKind::Cosine: return j.d1 * j.d1 / (1.0 - j.s * j.s);
        case MapKind::Quadratic: return j.d1 * j.d1 / j.s;
        case MapKind::Sqrt: return j.d1 * j.d1 * j.s * j.s;
    }
    return 0.0;
}

std::vector<PotentialTerm> Transformation::candidate_basis() const {
    if (kind_ == MapKind::Cosine)
        return {{1.0, Basis::Const, 0.0}, {1.0, Basis::CscSq, a_}, {1.0, Basis::CscCot, a_}};
    return {{1.0, Basis::Const, 0.0}, {1.0, Basis::InvR, 0.0}, {1.0, Basis::InvR2, 0.0}, {1.0, Basis::RSquared, 0.0}};
}

std::string Transformation::descriptor() const {
    switch (kind_) {
        case MapKind::Cosine: return fmt::format("s = cos({:.10g} r)", a_);
        case MapKind::Quadratic: return fmt::format("s = {:.10g} r^2", a_ * a_ / 4.0);
        case MapKind::Sqrt: return fmt::format("s = sqrt({:.10g} r)", 2.0 * a_);
    }
    return {};
}

Transformation solve_transformation_constraint(const PolynomialFamily& family, double constant, Branch branch) {
    if (!(constant > 0.0) || !std::isfinite(constant))
        throw ParameterDomainError(fmt::format("transformation constant must be positive, got {}", constant));
    const double a = std::sqrt(constant);
    if (branch != Branch::Principal)
        throw BranchNotImplementedError(fmt::format("the {} branch of the {} constraint is not implemented",
                                                    branch_name(branch), family.name()));
    switch (family.kind()) {
        case FamilyKind::Jacobi: return Transformation::cosine(a);
        case FamilyKind::Laguerre: return Transformation::quadratic(a);
        case FamilyKind::Hermite: return Transformation::sqrt_map(a);
    }
    throw BranchNotImplementedError("unknown family");
}

}  // namespace nuforge
