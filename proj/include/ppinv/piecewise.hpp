#ifndef PPINV_PIECEWISE_HPP
#define PPINV_PIECEWISE_HPP

// Two-class piecewise permutations of F_q (q odd).
//
// F_q^* splits into the squares C_0 and the non-squares C_1.  A BranchedPP
// sends 0 to 0 and applies f_s on C_s; as a single polynomial it is
//
//     f(x) = 1/2 f_0(x) (1 + x^h) + 1/2 f_1(x) (1 - x^h),   h = (q-1)/2.
//
// When each branch maps its coset bijectively onto a coset, the branch
// inverses can be read off from power sums over C_s, and the full inverse is
// glued back together with the same indicator polynomials.

#include <ppinv/gf.hpp>
#include <ppinv/polyring.hpp>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace ppinv {

/// Partition of F_q^* into squares (class 0) and non-squares (class 1).
class CyclotomicClasses {
public:
    explicit CyclotomicClasses(FieldPtr field) : field_(std::move(field)) {
        const auto q = field_->order();
        membership_.assign(q, -1);
        members_[0].reserve((q - 1) / 2);
        members_[1].reserve((q - 1) / 2);
        for (std::uint32_t i = 1; i < q; ++i) {
            const int s = field_->quadratic_character(Elem{i}) == 1 ? 0 : 1;
            membership_[i] = static_cast<std::int8_t>(s);
            members_[s].push_back(Elem{i});
        }
    }

    const FieldPtr& field() const noexcept { return field_; }

    /// 0 for squares, 1 for non-squares.
    int classify(Elem e) const {
        if (!field_->contains(e)) throw std::out_of_range("element does not belong to this field");
        if (e.index == 0) throw std::domain_error("zero belongs to neither cyclotomic class");
        return membership_[e.index];
    }

    const std::vector<Elem>& members(int s) const {
        if (s != 0 && s != 1) throw std::invalid_argument("class index must be 0 or 1");
        return members_[s];
    }

private:
    FieldPtr field_;
    std::vector<std::int8_t> membership_;
    std::array<std::vector<Elem>, 2> members_;
};

inline CyclotomicClasses classes(const FieldPtr& field) { return CyclotomicClasses(field); }

/// Piecewise map: 0 -> 0, c in C_0 -> f0(c), c in C_1 -> f1(c).
struct BranchedPP {
    Poly f0;
    Poly f1;

    BranchedPP(Poly branch0, Poly branch1) : f0(std::move(branch0)), f1(std::move(branch1)) {
        if (!f0.field()->same_as(*f1.field())) throw std::invalid_argument("branches over different fields");
    }

    const FieldPtr& field() const noexcept { return f0.field(); }
    const Poly& branch(int s) const { return s == 0 ? f0 : f1; }

    Elem operator()(const CyclotomicClasses& cls, Elem c) const {
        if (c.index == 0) return field()->zero();
        return branch(cls.classify(c)).eval(c);
    }
};

enum class CosetTarget { c0, c1, mixed };
enum class PiecewiseCase { same, swapped, neither };

constexpr std::string_view to_string(PiecewiseCase c) {
    switch (c) {
    case PiecewiseCase::same: return "same";
    case PiecewiseCase::swapped: return "swapped";
    default: return "none";
    }
}

struct BranchInfo {
    bool injective = false;
    bool zero_free = false;
    CosetTarget target = CosetTarget::mixed;
};

struct BranchBehavior {
    std::array<BranchInfo, 2> branch;
    bool images_disjoint = false;
    PiecewiseCase kase = PiecewiseCase::neither;
    bool is_pp = false;

    int target_class(int s) const {
        switch (branch[s].target) {
        case CosetTarget::c0: return 0;
        case CosetTarget::c1: return 1;
        default: throw std::domain_error("branch does not map into a single coset");
        }
    }
};

namespace detail {

// (1 + sign * x^h), h = (q-1)/2
inline Poly coset_selector(const FieldPtr& field, int sign) {
    const std::uint64_t h = (field->order() - 1) / 2;
    return Poly::from_terms(field, {{field->one(), 0}, {field->from_int(sign), h}});
}

} // namespace detail

/// The single polynomial agreeing with bpp on all of F_q.  Throws when the
/// indicator formula would give f(0) = (f0(0) + f1(0))/2 != 0.
inline Poly branched_to_poly(const BranchedPP& bpp) {
    const FieldPtr& F = bpp.field();
    if (F->add(bpp.f0.coeff(0), bpp.f1.coeff(0)) != F->zero())
        throw std::domain_error("branch constants give f(0) != 0; shift them so f0(0) + f1(0) = 0");
    const Elem half = F->inv(F->from_int(2));
    return (bpp.f0 * detail::coset_selector(F, 1) + bpp.f1 * detail::coset_selector(F, -1)).scaled(half);
}

/// Exhaustive check of the two-branch permutation criterion: each branch
/// injective and zero-free on its own coset, and the two images disjoint.
inline BranchBehavior analyze(const BranchedPP& bpp, const CyclotomicClasses& cls) {
    const Field& F = *bpp.field();
    BranchBehavior out;
    std::vector<std::int8_t> owner(F.order(), -1);
    out.images_disjoint = true;
    for (int s = 0; s < 2; ++s) {
        BranchInfo info{true, true, CosetTarget::mixed};
        bool any0 = false, any1 = false;
        std::vector<char> seen(F.order(), 0);
        for (auto c : cls.members(s)) {
            const Elem y = bpp.branch(s).eval(c);
            if (y.index == 0) {
                info.zero_free = false;
                continue;
            }
            if (seen[y.index]) info.injective = false;
            seen[y.index] = 1;
            if (owner[y.index] >= 0 && owner[y.index] != s) out.images_disjoint = false;
            owner[y.index] = static_cast<std::int8_t>(s);
            (cls.classify(y) == 0 ? any0 : any1) = true;
        }
        if (info.zero_free && any0 != any1) info.target = any0 ? CosetTarget::c0 : CosetTarget::c1;
        out.branch[s] = info;
    }
    const auto t0 = out.branch[0].target, t1 = out.branch[1].target;
    if (t0 == CosetTarget::c0 && t1 == CosetTarget::c1)
        out.kase = PiecewiseCase::same;
    else if (t0 == CosetTarget::c1 && t1 == CosetTarget::c0)
        out.kase = PiecewiseCase::swapped;
    out.is_pp = out.branch[0].injective && out.branch[0].zero_free && out.branch[1].injective &&
                out.branch[1].zero_free && out.images_disjoint;
    return out;
}

inline BranchBehavior analyze(const BranchedPP& bpp) { return analyze(bpp, CyclotomicClasses(bpp.field())); }

/// sum_{a in C_s} a^k by direct summation, 1 <= k <= q-1.
inline Elem lemma3_power_sum(const CyclotomicClasses& cls, int s, std::uint64_t k) {
    const Field& F = *cls.field();
    if (k < 1 || k > F.order() - 1) throw std::invalid_argument("power-sum exponent out of range");
    Elem acc = F.zero();
    for (auto a : cls.members(s)) acc = F.add(acc, F.pow(a, static_cast<std::int64_t>(k)));
    return acc;
}

namespace detail {

inline void require_bijection(const Poly& fs, const CyclotomicClasses& cls, int s, int t) {
    const Field& F = *cls.field();
    std::vector<char> seen(F.order(), 0);
    for (auto c : cls.members(s)) {
        const Elem y = fs.eval(c);
        if (y.index == 0 || cls.classify(y) != t || seen[y.index])
            throw std::invalid_argument("branch is not a bijection from its coset onto the target coset");
        seen[y.index] = 1;
    }
}

inline void require_theorem2_domain(const CyclotomicClasses& cls, int s, int t) {
    if (cls.field()->order() <= 3) throw std::domain_error("branch-inverse formula needs q > 3");
    if ((s != 0 && s != 1) || (t != 0 && t != 1)) throw std::invalid_argument("class indices must be 0 or 1");
}

} // namespace detail

/// Inverse of f_s restricted to C_s, as the folded representative of degree
/// <= (q-3)/2 with zero constant term.  Valid on C_t only: it is unique
/// modulo x^{(q-1)/2} - (-1)^t.
///
/// Coefficients come from c_i = -sum_{a in C_s} a f_s(a)^{q-1-i} and the
/// folding g = sum_{i > (q-1)/2} 2 (-1)^t c_i x^{i-(q-1)/2}; O(q^2) field
/// operations overall.
inline Poly theorem2_branch_inverse(const Poly& fs, const CyclotomicClasses& cls, int s, int t,
                                    bool verify = false) {
    detail::require_theorem2_domain(cls, s, t);
    if (verify) detail::require_bijection(fs, cls, s, t);
    const FieldPtr& field = cls.field();
    const Field& F = *field;
    const std::uint64_t q = F.order(), h = (q - 1) / 2;

    // c[w] holds c_{q-1-w} for w = 1..h
    std::vector<Elem> c(h + 1, F.zero());
    for (auto a : cls.members(s)) {
        const Elem y = fs.eval(a);
        Elem pw = F.one();
        for (std::uint64_t w = 1; w <= h; ++w) {
            pw = F.mul(pw, y);
            c[w] = F.sub(c[w], F.mul(a, pw));
        }
    }
    if (c[h] != F.zero())
        throw std::invalid_argument("branch is not a bijection from its coset onto the target coset");

    const Elem scale = F.from_int(t == 0 ? 2 : -2);
    std::vector<Elem> g(h, F.zero());
    for (std::uint64_t w = 1; w < h; ++w) g[h - w] = F.mul(scale, c[w]);
    return Poly(field, std::move(g));
}

/// Same branch inverse from the coefficients b_{i,(q-3)/2}, b_{i,q-2} of
/// f_s^{q-1-i} mod x^q - x.  O(q^3); meant for cross-checking small fields.
inline Poly theorem2_branch_inverse_symbolic(const Poly& fs, const CyclotomicClasses& cls, int s, int t) {
    detail::require_theorem2_domain(cls, s, t);
    const FieldPtr& field = cls.field();
    const Field& F = *field;
    const std::uint64_t q = F.order(), h = (q - 1) / 2;
    const Elem sign_st = F.from_int((s + t) % 2 == 0 ? 1 : -1);
    const Elem sign_s = F.from_int(s == 0 ? 1 : -1);

    std::vector<Elem> g(h, F.zero());
    Poly pw = Poly::constant(field, F.one());
    // w = q-1-i runs 1..h-1 as i runs q-2 down to (q+1)/2
    for (std::uint64_t w = 1; w < h; ++w) {
        pw = pw * fs;
        const Elem b_u = pw.coeff((q - 3) / 2);
        const Elem b_v = pw.coeff(q - 2);
        g[h - w] = F.mul(sign_st, F.add(b_u, F.mul(sign_s, b_v)));
    }
    return Poly(field, std::move(g));
}

/// Glue branch inverses g0, g1 (each with zero constant term) into the
/// inverse of bpp on F_q.
inline Poly lemma2_assemble_inverse(const BranchedPP& bpp, const Poly& g0, const Poly& g1,
                                    const BranchBehavior& behavior) {
    const FieldPtr& field = bpp.field();
    const Field& F = *field;
    if (!behavior.is_pp) throw std::domain_error("map is not a permutation");
    if (behavior.kase == PiecewiseCase::neither)
        throw std::domain_error("branches neither preserve nor swap the cosets");
    if (F.order() == 3) {
        // Only x and -x permute GF(3) while fixing 0; both are involutions.
        const Elem image_of_one = bpp.f0.eval(F.one());
        return Poly::monomial(field, image_of_one, 1);
    }
    if (g0.coeff(0) != F.zero() || g1.coeff(0) != F.zero())
        throw std::invalid_argument("branch inverses must vanish at 0");
    const Elem half = F.inv(F.from_int(2));
    const Poly plus = detail::coset_selector(field, 1), minus = detail::coset_selector(field, -1);
    const bool same = behavior.kase == PiecewiseCase::same;
    return (g0 * (same ? plus : minus) + g1 * (same ? minus : plus)).scaled(half);
}

/// Full pipeline: analyze, invert each branch from its power sums, glue.
inline Poly invert_branched(const BranchedPP& bpp) {
    const CyclotomicClasses cls(bpp.field());
    const auto behavior = analyze(bpp, cls);
    if (!behavior.is_pp) throw std::domain_error("map is not a permutation");
    if (behavior.kase == PiecewiseCase::neither)
        throw std::domain_error("branches neither preserve nor swap the cosets");
    const Poly zero(bpp.field());
    if (bpp.field()->order() == 3) return lemma2_assemble_inverse(bpp, zero, zero, behavior);
    const Poly g0 = theorem2_branch_inverse(bpp.f0, cls, 0, behavior.target_class(0));
    const Poly g1 = theorem2_branch_inverse(bpp.f1, cls, 1, behavior.target_class(1));
    return lemma2_assemble_inverse(bpp, g0, g1, behavior);
}

/// Views an arbitrary f with f(0) = 0 as a BranchedPP with f0 = f1 = f.
inline BranchedPP as_branched(const Poly& f) {
    if (f.coeff(0) != f.field()->zero()) throw std::domain_error("polynomial does not fix 0");
    return BranchedPP(f, f);
}

} // namespace ppinv

#endif // PPINV_PIECEWISE_HPP
