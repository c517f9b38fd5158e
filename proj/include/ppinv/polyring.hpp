#ifndef PPINV_POLYRING_HPP
#define PPINV_POLYRING_HPP

// Dense univariate polynomials over a Field, kept canonical modulo x^q - x.

#include <ppinv/gf.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ppinv {

class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {
        if (!field_) throw std::invalid_argument("null field");
    }

    /// coeffs[k] is the coefficient of x^k.  The result is reduced mod x^q - x.
    Poly(FieldPtr field, std::vector<Elem> coeffs) : Poly(std::move(field)) {
        for (auto c : coeffs)
            if (!field_->contains(c)) throw std::invalid_argument("coefficient outside the field");
        coeffs_ = std::move(coeffs);
        fold();
    }

    static Poly constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }
    static Poly x(FieldPtr field) {
        auto one = field->one();
        return monomial(std::move(field), one, 1);
    }

    /// c * x^e with e folded into [1, q-1] when e >= 1.
    static Poly monomial(FieldPtr field, Elem c, std::uint64_t e) {
        Poly r(std::move(field));
        if (c == r.field_->zero()) return r;
        const auto deg = r.fold_exponent(e);
        r.coeffs_.assign(deg + 1, r.field_->zero());
        r.coeffs_[deg] = c;
        return r;
    }

    /// Monomials from (coefficient, exponent) pairs, summed.
    static Poly from_terms(FieldPtr field, const std::vector<std::pair<Elem, std::uint64_t>>& terms) {
        Poly r(field);
        r.coeffs_.assign(field->order(), field->zero());
        for (auto [c, e] : terms) {
            auto& slot = r.coeffs_[r.fold_exponent(e)];
            slot = field->add(slot, c);
        }
        r.trim();
        return r;
    }

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial (degree -infinity).
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    Elem coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : field_->zero(); }

    Elem operator()(Elem c) const { return eval(c); }

    Elem eval(Elem c) const {
        const Field& F = *field_;
        if (!F.contains(c)) throw std::invalid_argument("evaluation point outside the field");
        Elem acc = F.zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = F.add(F.mul(acc, c), *it);
        return acc;
    }

    /// Values at every field element, in index order.
    std::vector<Elem> tabulate() const {
        std::vector<Elem> out;
        out.reserve(field_->order());
        for (auto c : field_->elements()) out.push_back(eval(c));
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = field_->neg(c);
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.require_same(b);
        const Field& F = *a.field_;
        Poly r = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
        const Poly& s = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) r.coeffs_[i] = F.add(r.coeffs_[i], s.coeffs_[i]);
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same(b);
        const Field& F = *a.field_;
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        std::vector<Elem> prod(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].index == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] = F.add(prod[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return Poly(a.field_, std::move(prod));
    }

    Poly scaled(Elem c) const {
        Poly r(field_);
        if (c == field_->zero()) return r;
        r.coeffs_ = coeffs_;
        for (auto& v : r.coeffs_) v = field_->mul(v, c);
        return r;
    }

private:
    void require_same(const Poly& o) const {
        if (!field_->same_as(*o.field_)) throw std::invalid_argument("polynomials over different fields");
    }

    std::size_t fold_exponent(std::uint64_t e) const {
        const std::uint64_t q = field_->order();
        if (e == 0) return 0;
        return static_cast<std::size_t>((e - 1) % (q - 1) + 1);
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().index == 0) coeffs_.pop_back();
    }

    // x^e -> x^{((e-1) mod (q-1)) + 1} for e >= 1
    void fold() {
        const std::size_t q = field_->order();
        if (coeffs_.size() > q) {
            const Field& F = *field_;
            for (std::size_t e = q; e < coeffs_.size(); ++e) {
                if (coeffs_[e].index == 0) continue;
                auto& slot = coeffs_[fold_exponent(e)];
                slot = F.add(slot, coeffs_[e]);
            }
            coeffs_.resize(q);
        }
        trim();
    }

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

/// Canonical representative modulo x^q - x, from raw (unreduced) coefficients.
inline Poly reduce_qx(const FieldPtr& field, std::vector<Elem> raw) { return Poly(field, std::move(raw)); }

inline bool equal_mod_qx(const Poly& f, const Poly& g) { return f == g; }

namespace detail {

// The unique canonical polynomial with the given value table (index order).
// Coefficient of x^i, 1 <= i <= q-1, is -sum_a y_a a^{q-1-i}; constant is y_0.
inline Poly interpolate_table(const FieldPtr& field, const std::vector<Elem>& values) {
    const Field& F = *field;
    const std::size_t q = F.order();
    std::vector<Elem> acc(q, F.zero());
    acc[0] = values[0];
    acc[q - 1] = F.neg(values[0]);
    for (std::uint32_t a = 1; a < q; ++a) {
        const Elem y = values[a];
        if (y.index == 0) continue;
        // walk i = q-1 down to 1 with power a^{q-1-i}
        Elem pw = F.one();
        for (std::size_t i = q - 1; i >= 1; --i) {
            acc[i] = F.sub(acc[i], F.mul(y, pw));
            pw = F.mul(pw, Elem{a});
        }
    }
    return Poly(field, std::move(acc));
}

} // namespace detail

/// Unique polynomial of degree < #points through the points.  Over the full
/// field this is the canonical representative mod x^q - x.
inline Poly lagrange_interpolate(const FieldPtr& field, const std::vector<std::pair<Elem, Elem>>& points) {
    const Field& F = *field;
    const std::size_t q = F.order();
    std::vector<char> seen(q, 0);
    for (auto [xv, yv] : points) {
        if (!F.contains(xv) || !F.contains(yv)) throw std::invalid_argument("point outside the field");
        if (seen[xv.index]) throw std::invalid_argument("duplicate abscissa in interpolation");
        seen[xv.index] = 1;
    }
    if (points.size() == q) {
        std::vector<Elem> values(q);
        for (auto [xv, yv] : points) values[xv.index] = yv;
        return detail::interpolate_table(field, values);
    }
    // Newton divided differences.
    const std::size_t m = points.size();
    std::vector<Elem> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = F.div(F.sub(dd[i], dd[i - 1]), F.sub(points[i].first, points[i - level].first));
    Poly result(field);
    for (std::size_t i = m; i-- > 0;) {
        Poly lin(field, {F.neg(points[i].first), F.one()});
        result = result * lin + Poly::constant(field, dd[i]);
    }
    return result;
}

/// f(g(x)) mod x^q - x, via the value table of the composite.
inline Poly compose(const Poly& f, const Poly& g) {
    if (!f.field()->same_as(*g.field())) throw std::invalid_argument("polynomials over different fields");
    auto gv = g.tabulate();
    for (auto& v : gv) v = f.eval(v);
    return detail::interpolate_table(f.field(), gv);
}

/// f^k mod x^q - x by square-and-multiply.
inline Poly powmod(const Poly& f, std::uint64_t k) {
    Poly result = Poly::constant(f.field(), f.field()->one());
    Poly base = f;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

/// Table of f on F_q, or nullopt if f is not a permutation.
inline std::optional<std::vector<Elem>> permutation_table(const Poly& f) {
    auto values = f.tabulate();
    std::vector<char> hit(values.size(), 0);
    for (auto v : values) {
        if (hit[v.index]) return std::nullopt;
        hit[v.index] = 1;
    }
    return values;
}

inline bool is_permutation(const Poly& f) { return permutation_table(f).has_value(); }

/// Brute-force compositional inverse: invert the value table and interpolate.
inline Poly invert_by_interpolation(const Poly& f) {
    auto table = permutation_table(f);
    if (!table) throw std::domain_error("polynomial is not a permutation of the field");
    std::vector<Elem> inverse(table->size());
    for (std::uint32_t c = 0; c < table->size(); ++c) inverse[(*table)[c].index] = Elem{c};
    return detail::interpolate_table(f.field(), inverse);
}

} // namespace ppinv

#endif // PPINV_POLYRING_HPP
