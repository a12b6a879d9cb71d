#include "nuforge/potential.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "nuforge/errors.hpp"

namespace nuforge {

namespace {

bool is_trig(Basis b) { return b == Basis::CscSq || b == Basis::CscCot; }

std::optional<int> power_of(Basis b) {
    switch (b) {
        case Basis::Const: return 0;
        case Basis::InvR: return -1;
        case Basis::InvR2: return -2;
        case Basis::RSquared: return 2;
        default: return std::nullopt;
    }
}

std::optional<Basis> basis_of_power(int p) {
    switch (p) {
        case 0: return Basis::Const;
        case -1: return Basis::InvR;
        case -2: return Basis::InvR2;
        case 2: return Basis::RSquared;
        default: return std::nullopt;
    }
}

Interval intersect(const Interval& a, const Interval& b) {
    if (a.left == 0.0 && a.right == 0.0) return b;
    if (b.left == 0.0 && b.right == 0.0) return a;
    return {std::max(a.left, b.left), std::min(a.right, b.right)};
}

}  // namespace

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::Const: return "1";
        case Basis::InvR: return "1/r";
        case Basis::InvR2: return "1/r^2";
        case Basis::RSquared: return "r^2";
        case Basis::CscSq: return "csc^2(ar)";
        case Basis::CscCot: return "csc(ar)cot(ar)";
    }
    return {};
}

double basis_value(Basis b, double scale, double r) {
    switch (b) {
        case Basis::Const: return 1.0;
        case Basis::InvR: return 1.0 / r;
        case Basis::InvR2: return 1.0 / (r * r);
        case Basis::RSquared: return r * r;
        case Basis::CscSq: {
            const double sn = std::sin(scale * r);
            return 1.0 / (sn * sn);
        }
        case Basis::CscCot: {
            const double sn = std::sin(scale * r);
            return std::cos(scale * r) / (sn * sn);
        }
    }
    return 0.0;
}

PotentialExpr& PotentialExpr::add(double coefficient, Basis basis, double scale) {
    if (is_trig(basis)) {
        if (!(scale > 0.0)) throw ParameterDomainError("trigonometric basis terms need a positive scale");
    } else {
        scale = 0.0;
    }
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const PotentialTerm& t) { return t.basis == basis && t.scale == scale; });
    if (it == terms_.end()) {
        if (coefficient == 0.0) return *this;
        terms_.push_back({coefficient, basis, scale});
        std::sort(terms_.begin(), terms_.end(), [](const PotentialTerm& x, const PotentialTerm& y) {
            if (x.basis != y.basis) return x.basis < y.basis;
            return x.scale < y.scale;
        });
        return *this;
    }
    it->coefficient += coefficient;
    if (it->coefficient == 0.0) terms_.erase(it);
    return *this;
}

double PotentialExpr::operator()(double r) const {
    double v = 0.0;
    for (const auto& t : terms_) v += t.coefficient * basis_value(t.basis, t.scale, r);
    return v;
}

double PotentialExpr::coefficient(Basis basis, double scale) const {
    if (!is_trig(basis)) scale = 0.0;
    for (const auto& t : terms_)
        if (t.basis == basis && t.scale == scale) return t.coefficient;
    return 0.0;
}

PotentialExpr PotentialExpr::without_constant() const {
    PotentialExpr out(domain_);
    for (const auto& t : terms_)
        if (t.basis != Basis::Const) out.add(t.coefficient, t.basis, t.scale);
    return out;
}

std::string PotentialExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        const double mag = std::abs(t.coefficient);
        if (out.empty())
            out += t.coefficient < 0 ? "-" : "";
        else
            out += t.coefficient < 0 ? " - " : " + ";
        std::string name = basis_name(t.basis);
        if (is_trig(t.basis)) {
            const std::string a = fmt::format("{:.10g}", t.scale);
            const auto pos = name.find("ar");
            name.replace(pos, 2, a + "r");
            if (const auto pos2 = name.find("ar"); pos2 != std::string::npos) name.replace(pos2, 2, a + "r");
        }
        if (t.basis == Basis::Const)
            out += fmt::format("{:.10g}", mag);
        else
            out += fmt::format("{:.10g}*{}", mag, name);
    }
    return out;
}

PotentialExpr& PotentialExpr::operator+=(const PotentialExpr& other) {
    domain_ = intersect(domain_, other.domain_);
    for (const auto& t : other.terms_) add(t.coefficient, t.basis, t.scale);
    return *this;
}

PotentialExpr& PotentialExpr::operator*=(double c) {
    if (c == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coefficient *= c;
    return *this;
}

PotentialExpr operator*(const PotentialExpr& a, const PotentialExpr& b) {
    PotentialExpr out(intersect(a.domain_, b.domain_));
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            const double c = x.coefficient * y.coefficient;
            if (x.basis == Basis::Const) {
                out.add(c, y.basis, y.scale);
                continue;
            }
            if (y.basis == Basis::Const) {
                out.add(c, x.basis, x.scale);
                continue;
            }
            const auto px = power_of(x.basis);
            const auto py = power_of(y.basis);
            const auto prod = (px && py) ? basis_of_power(*px + *py) : std::nullopt;
            if (!prod)
                throw DecompositionError(fmt::format("product {} * {} is outside the potential basis",
                                                     basis_name(x.basis), basis_name(y.basis)));
            out.add(c, *prod);
        }
    }
    return out;
}

}  // namespace nuforge
