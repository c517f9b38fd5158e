#ifndef PPINV_CYCLOTOMIC_HPP
#define PPINV_CYCLOTOMIC_HPP

// Three families of two-class cyclotomic permutations of F_{3^n}, each fixing
// 0 and applying a cubic tau*(x^3 + lambda x^2 + lambda^2 x) = tau x (x - lambda)^2
// or a monomial tau x^t on each coset:
//
//   l5:  alpha-cubic(gamma) on C_0,  beta-cubic(theta) on C_1
//   l6:  alpha x^t on C_0,           beta-cubic(theta) on C_1
//   l7:  alpha-cubic(gamma) on C_0,  beta x^t on C_1
//
// with permutation criteria in terms of the quadratic character and closed
// forms for the inverses.

#include <ppinv/binom.hpp>
#include <ppinv/gf.hpp>
#include <ppinv/piecewise.hpp>
#include <ppinv/polyring.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ppinv {

enum class Family { l5, l6, l7 };

constexpr std::string_view to_string(Family f) {
    switch (f) {
    case Family::l5: return "l5";
    case Family::l6: return "l6";
    default: return "l7";
    }
}

struct FamilyParams {
    Family family = Family::l5;
    FieldPtr field;
    Elem alpha, beta;
    std::optional<Elem> gamma;  // l5, l7
    std::optional<Elem> theta;  // l5, l6
    std::optional<std::uint64_t> t;  // l6, l7

    void validate() const {
        if (!field) throw std::invalid_argument("family parameters need a field");
        if (field->characteristic() != 3) throw std::invalid_argument("cyclotomic families need characteristic 3");
        auto nonzero = [&](std::optional<Elem> e, const char* name, bool wanted) {
            if (wanted && !e) throw std::invalid_argument(std::string("missing parameter ") + name);
            if (!wanted && e) throw std::invalid_argument(std::string("parameter ") + name + " not used by this family");
            if (e && (!field->contains(*e) || e->index == 0))
                throw std::invalid_argument(std::string("parameter ") + name + " must be a nonzero field element");
        };
        nonzero(alpha, "alpha", true);
        nonzero(beta, "beta", true);
        nonzero(gamma, "gamma", family != Family::l6);
        nonzero(theta, "theta", family != Family::l7);
        const bool wants_t = family != Family::l5;
        if (wants_t && (!t || *t < 1)) throw std::invalid_argument("family needs a positive exponent t");
        if (!wants_t && t) throw std::invalid_argument("parameter t not used by this family");
    }
};

struct CriterionResult {
    bool holds = false;
    std::string reason;  // first failing clause, empty when holds
};

/// Permutation criterion of each family.
inline CriterionResult criterion(const FamilyParams& prm) {
    prm.validate();
    const Field& F = *prm.field;
    const std::uint64_t h = (F.order() - 1) / 2;
    const int eta_a = F.quadratic_character(prm.alpha), eta_b = F.quadratic_character(prm.beta);
    if (prm.family != Family::l5 && std::gcd(*prm.t, h) != 1) return {false, "gcd(t, (q-1)/2) ≠ 1"};
    if (prm.family != Family::l6 && F.quadratic_character(*prm.gamma) != -1) return {false, "η(γ) ≠ −1"};
    if (prm.family != Family::l7 && F.quadratic_character(*prm.theta) != 1) return {false, "η(θ) ≠ 1"};
    if (prm.family == Family::l7) {
        const int sign = (*prm.t + 1) % 2 == 0 ? 1 : -1;
        if (eta_a != eta_b * sign) return {false, "η(α) ≠ η(β)(−1)^(t+1)"};
    } else if (eta_a != eta_b) {
        return {false, "η(α) ≠ η(β)"};
    }
    return {true, {}};
}

/// tau (x^3 + lambda x^2 + lambda^2 x)
inline Poly cubic_branch(const FieldPtr& field, Elem tau, Elem lambda) {
    const Field& F = *field;
    return Poly(field, {F.zero(), F.mul(tau, F.mul(lambda, lambda)), F.mul(tau, lambda), tau});
}

/// The family's BranchedPP regardless of whether the criterion holds.
inline BranchedPP build_branches(const FamilyParams& prm) {
    prm.validate();
    const FieldPtr& field = prm.field;
    switch (prm.family) {
    case Family::l5:
        return BranchedPP(cubic_branch(field, prm.alpha, *prm.gamma), cubic_branch(field, prm.beta, *prm.theta));
    case Family::l6:
        return BranchedPP(Poly::monomial(field, prm.alpha, *prm.t), cubic_branch(field, prm.beta, *prm.theta));
    default:
        return BranchedPP(cubic_branch(field, prm.alpha, *prm.gamma), Poly::monomial(field, prm.beta, *prm.t));
    }
}

/// As build_branches, but only for parameters meeting the criterion.
inline BranchedPP build_pp(const FamilyParams& prm) {
    const auto verdict = criterion(prm);
    if (!verdict.holds) throw std::domain_error("criterion fails: " + verdict.reason);
    return build_branches(prm);
}

struct BezoutPair {
    std::int64_t s = 0;
    std::int64_t r = 0;
};

/// s, r with s*t + r*M = 1 and 1 <= s < M.
inline BezoutPair bezout_inverse(std::uint64_t t, std::uint64_t modulus) {
    if (modulus <= 1) throw std::invalid_argument("Bezout modulus must exceed 1");
    if (t < 1) throw std::invalid_argument("exponent must be positive");
    if (std::gcd(t, modulus) != 1) throw std::invalid_argument("exponent is not invertible modulo M");
    // extended Euclid on (t mod M, M) for the coefficient of t
    __int128 old_r = static_cast<__int128>(t % modulus), r = modulus;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 quot = old_r / r;
        const __int128 tmp_r = old_r - quot * r;
        old_r = r;
        r = tmp_r;
        const __int128 tmp_s = old_s - quot * s;
        old_s = s;
        s = tmp_s;
    }
    const __int128 m = modulus;
    const __int128 sv = ((old_s % m) + m) % m;
    const __int128 rv = (1 - sv * static_cast<__int128>(t)) / m;
    return {static_cast<std::int64_t>(sv), static_cast<std::int64_t>(rv)};
}

/// sum_{0 <= j,k <= n-1} lambda (tau^{-1} lambda^{-3} x)^{(3^j+3^k)/2}; with
/// (tau, lambda) = (alpha, gamma) this is u(x), with (beta, theta) it is v(x).
inline Poly cubic_inverse_sum(const FieldPtr& field, Elem tau, Elem lambda) {
    const Field& F = *field;
    if (tau.index == 0 || lambda.index == 0) throw std::invalid_argument("parameters must be nonzero");
    const Elem z = F.mul(F.inv(tau), F.pow(lambda, -3));
    std::vector<std::pair<Elem, std::uint64_t>> terms;
    for (unsigned j = 0; j < F.degree(); ++j) {
        for (unsigned k = 0; k < F.degree(); ++k) {
            const std::uint64_t e = (detail::ipow(3, j) + detail::ipow(3, k)) / 2;
            terms.emplace_back(F.mul(lambda, F.pow(z, static_cast<std::int64_t>(e))), e);
        }
    }
    return Poly::from_terms(field, terms);
}

inline Poly u_poly(Elem alpha, Elem gamma, const FieldPtr& field) { return cubic_inverse_sum(field, alpha, gamma); }
inline Poly v_poly(Elem beta, Elem theta, const FieldPtr& field) { return cubic_inverse_sum(field, beta, theta); }

/// Closed-form inverse of a family member:
///     -u(x) (1 + (-1)^m x^h) - v(x) (1 + (-1)^{m+1} x^h),  eta(alpha) = (-1)^m,
/// where a monomial branch tau x^t is inverted by (tau^{-1} x)^s, with
/// s t = 1 mod h, times (-1)^r on the non-squares.
inline Poly closed_form_inverse(const FamilyParams& prm) {
    const auto verdict = criterion(prm);
    if (!verdict.holds) throw std::domain_error("criterion fails: " + verdict.reason);
    const FieldPtr& field = prm.field;
    const Field& F = *field;
    if (F.order() == 3) {
        // the map is x or -x, its own inverse
        const BranchedPP bpp = build_branches(prm);
        return Poly::monomial(field, bpp.f0.eval(F.one()), 1);
    }
    const std::uint64_t h = (F.order() - 1) / 2;
    const int m = F.quadratic_character(prm.alpha) == 1 ? 0 : 1;

    Poly u(field), v(field);
    if (prm.family == Family::l6) {
        const auto bz = bezout_inverse(*prm.t, h);
        u = Poly::monomial(field, F.pow(F.inv(prm.alpha), bz.s), static_cast<std::uint64_t>(bz.s));
    } else {
        u = u_poly(prm.alpha, *prm.gamma, field);
    }
    if (prm.family == Family::l7) {
        const auto bz = bezout_inverse(*prm.t, h);
        const Elem sign = F.from_int(bz.r % 2 == 0 ? 1 : -1);
        v = Poly::monomial(field, F.mul(sign, F.pow(F.inv(prm.beta), bz.s)), static_cast<std::uint64_t>(bz.s));
    } else {
        v = v_poly(prm.beta, *prm.theta, field);
    }
    const Elem one = F.one();
    const Poly sel_u = Poly::from_terms(field, {{one, 0}, {F.from_int(m == 0 ? 1 : -1), h}});
    const Poly sel_v = Poly::from_terms(field, {{one, 0}, {F.from_int(m == 0 ? -1 : 1), h}});
    return -(u * sel_u) - v * sel_v;
}

} // namespace ppinv

#endif // PPINV_CYCLOTOMIC_HPP
