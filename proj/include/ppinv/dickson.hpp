#ifndef PPINV_DICKSON_HPP
#define PPINV_DICKSON_HPP

// Dickson and reversed Dickson polynomials, Hou's permutation
//     f(x) = (x - x^2 - x^3) x^{(3^n-1)/2} - x + x^2   of F_{3^n}, n even,
// and its closed-form compositional inverse.

#include <ppinv/binom.hpp>
#include <ppinv/gf.hpp>
#include <ppinv/piecewise.hpp>
#include <ppinv/polyring.hpp>

#include <cstdint>
#include <stdexcept>

namespace ppinv {

struct DicksonSpec {
    std::uint64_t index = 1;
    Elem a;
    bool reversed = false;
};

/// (n/(n-i)) C(n-i, i) mod p, computed as C(n-i, i) + C(n-i-1, i-1) so that
/// nothing is ever divided by n - i.
inline std::uint64_t dickson_coefficient_mod_p(std::uint64_t n, std::uint64_t i, std::uint64_t p) {
    if (n < 1 || 2 * i > n) throw std::invalid_argument("need n >= 1 and 0 <= i <= n/2");
    if (i == 0) return 1 % p;
    return (binom_mod_p(n - i, i, p) + binom_mod_p(n - i - 1, i - 1, p)) % p;
}

/// D_n(x, a) = sum_i (n/(n-i)) C(n-i,i) (-a)^i x^{n-2i}, or the reversed
/// D_n(a, x) = sum_i (n/(n-i)) C(n-i,i) (-1)^i a^{n-2i} x^i.
inline Poly dickson_poly(const DicksonSpec& spec, const FieldPtr& field) {
    if (spec.index < 1) throw std::invalid_argument("Dickson index must be at least 1");
    const Field& F = *field;
    const std::uint64_t n = spec.index, p = F.characteristic();
    std::vector<std::pair<Elem, std::uint64_t>> terms;
    for (std::uint64_t i = 0; 2 * i <= n; ++i) {
        const std::uint64_t k = dickson_coefficient_mod_p(n, i, p);
        if (k == 0) continue;
        const Elem coef = F.from_int(static_cast<std::int64_t>(k));
        const Elem sign = F.from_int(i % 2 == 0 ? 1 : -1);
        if (spec.reversed) {
            const Elem apow = F.pow(spec.a, static_cast<std::int64_t>(n - 2 * i));
            terms.emplace_back(F.mul(coef, F.mul(sign, apow)), i);
        } else {
            const Elem apow = F.pow(spec.a, static_cast<std::int64_t>(i));
            terms.emplace_back(F.mul(coef, F.mul(sign, apow)), n - 2 * i);
        }
    }
    return Poly::from_terms(field, terms);
}

namespace detail {

inline void require_hou_field(const Field& F) {
    if (F.characteristic() != 3) throw std::invalid_argument("Hou's permutation needs characteristic 3");
    if (F.degree() % 2 != 0) throw std::invalid_argument("Hou's permutation needs an even extension degree");
}

} // namespace detail

/// Hou's permutation polynomial of F_{3^n}, n even.
inline Poly hou_pp(const FieldPtr& field) {
    detail::require_hou_field(*field);
    const Field& F = *field;
    const std::uint64_t h = (F.order() - 1) / 2;
    const Elem one = F.one(), minus_one = F.from_int(-1);
    return Poly::from_terms(field, {{one, h + 1}, {minus_one, h + 2}, {minus_one, h + 3}, {minus_one, 1}, {one, 2}});
}

/// Branch view of hou_pp: -x^3 on squares, x(x+1)^2 on non-squares.
inline BranchedPP hou_branches(const FieldPtr& field) {
    detail::require_hou_field(*field);
    const Field& F = *field;
    const Elem one = F.one(), two = F.from_int(2);
    return BranchedPP(Poly::monomial(field, F.from_int(-1), 3), Poly(field, {F.zero(), one, two, one}));
}

/// sum_{0 <= j,k <= n-1} (-1)^{j+k} x^{(3^j+3^k)/2}: the inverse of x(x+1)^2
/// on the non-squares, folded to degree < (q-1)/2.
inline Poly hou_branch1_inverse(const FieldPtr& field) {
    detail::require_hou_field(*field);
    const Field& F = *field;
    const unsigned n = F.degree();
    std::vector<std::pair<Elem, std::uint64_t>> terms;
    for (unsigned j = 0; j < n; ++j)
        for (unsigned k = 0; k < n; ++k)
            terms.emplace_back(F.from_int((j + k) % 2 == 0 ? 1 : -1), (detail::ipow(3, j) + detail::ipow(3, k)) / 2);
    return Poly::from_terms(field, terms);
}

/// Closed-form inverse of hou_pp:
///     x^{3^{n-1}} (x^h + 1) + g_1(x) (x^h - 1),  h = (3^n-1)/2,
/// with g_1 = hou_branch1_inverse.  Assembled symbolically.
inline Poly theorem1_inverse(const FieldPtr& field) {
    detail::require_hou_field(*field);
    const Field& F = *field;
    const std::uint64_t h = (F.order() - 1) / 2;
    const Elem one = F.one(), minus_one = F.from_int(-1);
    const Poly lead = Poly::monomial(field, one, detail::ipow(3, F.degree() - 1));
    const Poly plus = Poly::from_terms(field, {{one, h}, {one, 0}});
    const Poly minus = Poly::from_terms(field, {{one, h}, {minus_one, 0}});
    return lead * plus + hou_branch1_inverse(field) * minus;
}

/// D_{3^n+5}(1, x) through the identity D_{3^n+5}(1, x) = f(1 - x) - 1.
inline Poly reversed_dickson_3n5(const FieldPtr& field) {
    const Field& F = *field;
    const Poly f = hou_pp(field);
    const Poly one_minus_x(field, {F.one(), F.from_int(-1)});
    return compose(f, one_minus_x) - Poly::constant(field, F.one());
}

/// Inverse of x -> D_{3^n+5}(1, x), namely 1 - f^{-1}(x + 1).
inline Poly reversed_dickson_inverse_3n5(const FieldPtr& field) {
    const Field& F = *field;
    const Poly finv = theorem1_inverse(field);
    const Poly x_plus_one(field, {F.one(), F.one()});
    return Poly::constant(field, F.one()) - compose(finv, x_plus_one);
}

} // namespace ppinv

#endif // PPINV_DICKSON_HPP
