#ifndef PPINV_SELFTEST_HPP
#define PPINV_SELFTEST_HPP

// End-to-end verification suite.  Every check is an exact equality between
// independently computed objects; a check also fails if it overruns its time
// budget.  Level::full runs the complete sizes, Level::quick restricts to
// fields with q <= 27.

#include <ppinv/binom.hpp>
#include <ppinv/cyclotomic.hpp>
#include <ppinv/dickson.hpp>
#include <ppinv/gf.hpp>
#include <ppinv/piecewise.hpp>
#include <ppinv/polyring.hpp>

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace ppinv::selftest {

enum class Level { quick, full };

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Pascal's triangle mod p, rows 0..max_m.  Independent of Lucas.
inline std::vector<std::vector<std::uint32_t>> pascal_mod(std::uint32_t max_m, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> rows(max_m + 1);
    for (std::uint32_t m = 0; m <= max_m; ++m) {
        rows[m].assign(m + 1, 1);
        for (std::uint32_t k = 1; k < m; ++k) rows[m][k] = (rows[m - 1][k - 1] + rows[m - 1][k]) % p;
    }
    return rows;
}

inline bool fixes_pointwise(const Poly& g, const Poly& f) {
    for (auto c : f.field()->elements())
        if (g.eval(f.eval(c)) != c) return false;
    return true;
}

inline Elem random_nonzero(const Field& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(1, static_cast<std::uint32_t>(F.order() - 1));
    return Elem{d(rng)};
}

inline Elem random_elem(const Field& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(F.order() - 1));
    return Elem{d(rng)};
}

inline FamilyParams random_params(Family fam, const FieldPtr& field, std::mt19937_64& rng) {
    const Field& F = *field;
    FamilyParams prm;
    prm.family = fam;
    prm.field = field;
    prm.alpha = random_nonzero(F, rng);
    prm.beta = random_nonzero(F, rng);
    if (fam != Family::l6) prm.gamma = random_nonzero(F, rng);
    if (fam != Family::l7) prm.theta = random_nonzero(F, rng);
    if (fam != Family::l5) {
        std::uniform_int_distribution<std::uint64_t> d(1, F.order() - 2);
        prm.t = d(rng);
    }
    return prm;
}

// Calls fn on every parameter tuple of the family with t in [1, (q-1)/2).
inline void for_each_params(Family fam, const FieldPtr& field, const std::function<void(const FamilyParams&)>& fn) {
    const Field& F = *field;
    const std::uint32_t q = static_cast<std::uint32_t>(F.order());
    const std::uint64_t h = (q - 1) / 2;
    const std::uint64_t t_hi = fam == Family::l5 ? 1 : std::max<std::uint64_t>(h, 2) - 1;
    FamilyParams prm;
    prm.family = fam;
    prm.field = field;
    for (std::uint64_t t = 1; t <= t_hi; ++t) {
        if (fam != Family::l5) prm.t = t;
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b)
                for (std::uint32_t c = 1; c < q; ++c)
                    for (std::uint32_t d = 1; d < (fam == Family::l5 ? q : 2u); ++d) {
                        prm.alpha = Elem{a};
                        prm.beta = Elem{b};
                        switch (fam) {
                        case Family::l5:
                            prm.gamma = Elem{c};
                            prm.theta = Elem{d};
                            break;
                        case Family::l6: prm.theta = Elem{c}; break;
                        case Family::l7: prm.gamma = Elem{c}; break;
                        }
                        fn(prm);
                    }
    }
}

class Recorder {
public:
    explicit Recorder(std::ostringstream& os) : os_(os) {}
    void fail(const std::string& msg) {
        if (ok_) os_ << msg;
        ok_ = false;
    }
    bool ok() const { return ok_; }

private:
    std::ostringstream& os_;
    bool ok_ = true;
};

} // namespace detail

inline CheckResult check_theorem1_exact(Level level) {
    CheckResult r{1, "closed-form inverse of Hou's PP equals interpolated brute-force inverse", false, {}, 0.0};
    std::ostringstream os;
    detail::Recorder rec(os);
    const auto t0 = detail::Clock::now();
    for (unsigned n : level == Level::full ? std::vector<unsigned>{2, 4} : std::vector<unsigned>{2}) {
        const auto tn = detail::Clock::now();
        const auto F = Field::create(3, n);
        const Poly f = hou_pp(F);
        if (theorem1_inverse(F) != invert_by_interpolation(f)) rec.fail("mismatch at n=" + std::to_string(n) + "; ");
        const double dt = detail::since(tn), budget = n == 2 ? 1.0 : 5.0;
        if (dt > budget) rec.fail("n=" + std::to_string(n) + " over time budget; ");
        os << "n=" << n << " " << dt << "s; ";
    }
    r.seconds = detail::since(t0);
    r.pass = rec.ok();
    r.detail = os.str();
    return r;
}

inline CheckResult check_theorem1_scale(Level level) {
    CheckResult r{2, "closed-form inverse of Hou's PP composes to the identity pointwise", false, {}, 0.0};
    const auto t0 = detail::Clock::now();
    const unsigned n = level == Level::full ? 6 : 2;
    const auto F = Field::create(3, n);
    r.pass = detail::fixes_pointwise(theorem1_inverse(F), hou_pp(F));
    r.seconds = detail::since(t0);
    if (r.seconds > 30.0) r.pass = false;
    r.detail = "n=" + std::to_string(n) + ", q=" + std::to_string(F->order());
    return r;
}

inline CheckResult check_reversed_dickson(Level level) {
    CheckResult r{3, "reversed Dickson D_{3^n+5}(1,x) identity and inverse", false, {}, 0.0};
    std::ostringstream os;
    detail::Recorder rec(os);
    const auto t0 = detail::Clock::now();
    for (unsigned n : level == Level::full ? std::vector<unsigned>{2, 4} : std::vector<unsigned>{2}) {
        const auto F = Field::create(3, n);
        const Poly direct = dickson_poly({F->order() + 5, F->one(), true}, F);
        const Poly via_hou = reversed_dickson_3n5(F);
        for (auto c : F->elements())
            if (direct.eval(c) != via_hou.eval(c)) {
                rec.fail("D(1,x) != f(1-x)-1 at n=" + std::to_string(n) + "; ");
                break;
            }
        if (!detail::fixes_pointwise(reversed_dickson_inverse_3n5(F), direct))
            rec.fail("inverse fails at n=" + std::to_string(n) + "; ");
        os << "n=" << n << " ok; ";
    }
    r.seconds = detail::since(t0);
    r.pass = rec.ok();
    r.detail = os.str();
    return r;
}

inline CheckResult check_theorem2_engine(Level level) {
    CheckResult r{4, "branch-inverse engine reproduces the double-sum pattern; both routes agree", false, {}, 0.0};
    std::ostringstream os;
    detail::Recorder rec(os);
    const auto t0 = detail::Clock::now();
    for (unsigned n : level == Level::full ? std::vector<unsigned>{2, 4} : std::vector<unsigned>{2}) {
        const auto F = Field::create(3, n);
        const CyclotomicClasses cls(F);
        const Poly f1 = hou_branches(F).f1;
        const Poly g = theorem2_branch_inverse(f1, cls, 1, 1);
        if (g != hou_branch1_inverse(F)) rec.fail("pattern mismatch at q=" + std::to_string(F->order()) + "; ");
        if (g.degree().value_or(0) > (F->order() - 3) / 2) rec.fail("degree bound violated; ");
    }
    // evaluation route vs symbolic route on the Hou branches and on the
    // cubic branches of several family members
    for (unsigned n : {2u, 3u}) {
        const auto F = Field::create(3, n);
        const CyclotomicClasses cls(F);
        std::vector<std::tuple<Poly, int, int>> cases;
        if (n % 2 == 0) {
            const auto b = hou_branches(F);
            cases.emplace_back(b.f0, 0, 0);
            cases.emplace_back(b.f1, 1, 1);
        }
        for (std::uint32_t tau = 1; tau < F->order(); tau += 3)
            for (std::uint32_t lam = 1; lam < F->order(); lam += 2) {
                const Poly cub = cubic_branch(F, Elem{tau}, Elem{lam});
                for (int s = 0; s < 2; ++s) {
                    const auto bpp = BranchedPP(cub, cub);
                    const auto beh = analyze(bpp, cls);
                    const auto& info = beh.branch[s];
                    if (!info.injective || !info.zero_free || info.target == CosetTarget::mixed) continue;
                    cases.emplace_back(cub, s, beh.target_class(s));
                }
            }
        for (const auto& [fs, s, t] : cases) {
            const Poly a = theorem2_branch_inverse(fs, cls, s, t);
            const Poly b = theorem2_branch_inverse_symbolic(fs, cls, s, t);
            if (a != b) rec.fail("routes disagree at q=" + std::to_string(F->order()) + "; ");
        }
        os << "q=" << F->order() << ": " << cases.size() << " branches; ";
    }
    r.seconds = detail::since(t0);
    r.pass = rec.ok();
    r.detail = os.str();
    return r;
}

inline CheckResult check_lemma2_equivalence(std::uint64_t seed) {
    CheckResult r{5, "two-branch criterion matches exhaustive bijection test (GF(9))", false, {}, 0.0};
    const auto t0 = detail::Clock::now();
    const auto F = Field::create(3, 2);
    const CyclotomicClasses cls(F);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 2), deg(1, 3);
    auto random_branch = [&]() {
        if (coin(rng) == 0) {
            std::vector<Elem> c(4);
            for (auto& e : c) e = detail::random_elem(*F, rng);
            return Poly(F, c);
        }
        // scaled monomials and cubics permute cosets often enough to give
        // both verdicts in the sample
        if (coin(rng) == 1) return Poly::monomial(F, detail::random_nonzero(*F, rng), deg(rng));
        return cubic_branch(F, detail::random_nonzero(*F, rng), detail::random_elem(*F, rng));
    };
    const int samples = 2000;
    int pps = 0, mismatches = 0;
    for (int i = 0; i < samples; ++i) {
        Poly f0 = random_branch(), f1 = random_branch();
        // align constants so the single-polynomial form fixes 0
        f1 = f1 - Poly::constant(F, F->add(f0.coeff(0), f1.coeff(0)));
        const BranchedPP bpp(f0, f1);
        const bool criterion_pp = analyze(bpp, cls).is_pp;
        const bool exhaustive_pp = is_permutation(branched_to_poly(bpp));
        if (criterion_pp != exhaustive_pp) ++mismatches;
        pps += exhaustive_pp;
    }
    r.seconds = detail::since(t0);
    r.pass = mismatches == 0 && pps > 0 && pps < samples;
    r.detail = std::to_string(samples) + " samples, " + std::to_string(pps) + " PPs, " + std::to_string(mismatches) +
               " mismatches";
    return r;
}

inline CheckResult check_lemma3(Level level) {
    CheckResult r{6, "coset power sums equal their closed form", false, {}, 0.0};
    std::ostringstream os;
    detail::Recorder rec(os);
    const auto t0 = detail::Clock::now();
    for (unsigned n : level == Level::full ? std::vector<unsigned>{2, 3, 4} : std::vector<unsigned>{2, 3}) {
        const auto F = Field::create(3, n);
        const CyclotomicClasses cls(F);
        const std::uint64_t q = F->order();
        const Elem half = F->inv(F->from_int(2));
        for (int s = 0; s < 2; ++s)
            for (std::uint64_t k = 1; k <= q - 1; ++k) {
                Elem expect = F->zero();
                if (k == q - 1) expect = F->neg(half);
                else if (k == (q - 1) / 2) expect = s == 1 ? half : F->neg(half);
                if (lemma3_power_sum(cls, s, k) != expect)
                    rec.fail("q=" + std::to_string(q) + " s=" + std::to_string(s) + " k=" + std::to_string(k) + "; ");
            }
        os << "q=" << q << "; ";
    }
    r.seconds = detail::since(t0);
    if (r.seconds > 10.0) rec.fail("over time budget; ");
    r.pass = rec.ok();
    r.detail = os.str();
    return r;
}

inline CheckResult check_lucas(Level level, std::uint64_t seed) {
    CheckResult r{7, "Lucas residues match Pascal's triangle; C(q+m,k) = C(m,k) mod p", false, {}, 0.0};
    std::ostringstream os;
    detail::Recorder rec(os);
    const auto t0 = detail::Clock::now();
    const std::uint32_t max_m = level == Level::full ? 500 : 100;
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto rows = detail::pascal_mod(max_m, p);
        for (std::uint32_t m = 0; m <= max_m; ++m)
            for (std::uint32_t k = 0; k <= m; ++k)
                if (binom_mod_p(m, k, p) != rows[m][k])
                    rec.fail("C(" + std::to_string(m) + "," + std::to_string(k) + ") mod " + std::to_string(p) + "; ");
    }
    std::mt19937_64 rng(seed);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> qs =
        level == Level::full ? std::vector<std::pair<std::uint64_t, std::uint64_t>>{{9, 3}, {25, 5}, {27, 3}, {49, 7}}
                             : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{9, 3}, {25, 5}, {27, 3}};
    for (auto [q, p] : qs) {
        std::uniform_int_distribution<std::int64_t> md(-500, 500);
        std::uniform_int_distribution<std::uint64_t> kd(0, q - 1);
        for (int i = 0; i < 200; ++i) {
            const std::int64_t m = md(rng);
            const std::uint64_t k = kd(rng);
            if (binom_generalized_mod_p(static_cast<std::int64_t>(q) + m, k, p) != binom_generalized_mod_p(m, k, p))
                rec.fail("q=" + std::to_string(q) + " m=" + std::to_string(m) + " k=" + std::to_string(k) + "; ");
        }
    }
    os << "m <= " << max_m;
    r.seconds = detail::since(t0);
    r.pass = rec.ok();
    r.detail = os.str();
    return r;
}

inline CheckResult check_binomial_predictions(Level level) {
    CheckResult r{8, "predicted supports and residues of the two binomial families", false, {}, 0.0};
    std::ostringstream os;
    detail::Recorder rec(os);
    const auto t0 = detail::Clock::now();
    const unsigned n3 = level == Level::full ? 6 : 3, n4 = level == Level::full ? 5 : 3;
    for (unsigned n = 1; n <= n3; ++n) {
        const std::uint64_t q = ppinv::detail::ipow(3, n);
        std::set<std::uint64_t> brute;
        for (std::uint64_t i = 1; i < q; ++i)
            if (binom_mod_p(3 * i, i - 1, 3) != 0) brute.insert(i);
        if (brute != theorem3_support(n)) rec.fail("C(3i,i-1) support n=" + std::to_string(n) + "; ");
    }
    for (unsigned n = 1; n <= n4; ++n) {
        const std::uint64_t q = ppinv::detail::ipow(3, n);
        const auto [lo, hi] = theorem4_range(n);
        const auto predicted = theorem4_support(n);
        std::set<std::uint64_t> brute;
        for (std::uint64_t i = lo; i <= hi; ++i) {
            const bool nonzero = binom_mod_p(3 * i - (q - 1) / 2, i - lo, 3) != 0;
            if (nonzero) brute.insert(i);
            if (theorem4_digits_monotone(i, n) != nonzero)
                rec.fail("digit characterization n=" + std::to_string(n) + " i=" + std::to_string(i) + "; ");
        }
        if (brute != predicted) rec.fail("second support n=" + std::to_string(n) + "; ");
        for (unsigned k = 0; k < n; ++k)
            for (unsigned j = 0; j <= k; ++j) {
                const std::uint64_t i = theorem4_point(j, k, n);
                const std::uint64_t value = binom_mod_p(3 * i - (q - 1) / 2, i - lo, 3);
                const std::uint64_t signed_value = (i - lo) % 2 == 0 ? value : (3 - value) % 3;
                if (value != theorem5_value(j, k, n) || signed_value != theorem6_signed_value(j, k, n))
                    rec.fail("residue n=" + std::to_string(n) + " j=" + std::to_string(j) + " k=" +
                             std::to_string(k) + "; ");
            }
    }
    os << "first family n<=" << n3 << ", second n<=" << n4;
    r.seconds = detail::since(t0);
    r.pass = rec.ok();
    r.detail = os.str();
    return r;
}

inline CheckResult check_families(Level level, std::uint64_t seed) {
    CheckResult r{9, "family criteria match exhaustive analysis; closed forms equal brute-force inverses", false, {}, 0.0};
    std::ostringstream os;
    detail::Recorder rec(os);
    const auto t0 = detail::Clock::now();
    const std::array<Family, 3> families{Family::l5, Family::l6, Family::l7};

    for (unsigned n : level == Level::full ? std::vector<unsigned>{2, 3} : std::vector<unsigned>{2}) {
        const auto F = Field::create(3, n);
        const CyclotomicClasses cls(F);
        for (auto fam : families) {
            std::size_t total = 0, passing = 0, bad = 0;
            detail::for_each_params(fam, F, [&](const FamilyParams& prm) {
                ++total;
                const bool crit = criterion(prm).holds;
                passing += crit;
                if (crit != analyze(build_branches(prm), cls).is_pp) ++bad;
            });
            if (bad) rec.fail(std::string(to_string(fam)) + " q=" + std::to_string(F->order()) + ": " +
                              std::to_string(bad) + " criterion mismatches; ");
            os << to_string(fam) << "@" << F->order() << " " << passing << "/" << total << "; ";
        }
    }

    std::mt19937_64 rng(seed);
    for (unsigned n : level == Level::full ? std::vector<unsigned>{2, 3, 4} : std::vector<unsigned>{2, 3}) {
        const auto F = Field::create(3, n);
        for (auto fam : families) {
            int found = 0, tries = 0;
            while (found < 100 && tries < 1000000) {
                ++tries;
                const auto prm = detail::random_params(fam, F, rng);
                if (!criterion(prm).holds) continue;
                ++found;
                const Poly f = branched_to_poly(build_pp(prm));
                if (closed_form_inverse(prm) != invert_by_interpolation(f))
                    rec.fail(std::string(to_string(fam)) + " closed form wrong at q=" + std::to_string(F->order()) +
                             "; ");
            }
            if (found < 100) rec.fail("too few passing tuples; ");
        }
    }
    r.seconds = detail::since(t0);
    if (r.seconds > 60.0) rec.fail("over time budget; ");
    r.pass = rec.ok();
    r.detail = os.str();
    return r;
}

inline CheckResult check_degenerate_gf3() {
    CheckResult r{10, "over GF(3) every family and method yields +-x", false, {}, 0.0};
    const auto t0 = detail::Clock::now();
    const auto F = Field::create(3, 1);
    const Poly x = Poly::x(F), minus_x = -x;
    auto is_pm_x = [&](const Poly& g) { return g == x || g == minus_x; };
    int checked = 0;
    bool ok = true;
    for (auto fam : {Family::l5, Family::l6, Family::l7}) {
        // t in {1, 2} covers both parities
        for (std::uint64_t t = 1; t <= (fam == Family::l5 ? 1u : 2u); ++t) {
            detail::for_each_params(fam, F, [&](const FamilyParams& base) {
                FamilyParams prm = base;
                if (fam != Family::l5) prm.t = t;
                if (!criterion(prm).holds) return;
                const BranchedPP bpp = build_pp(prm);
                const Poly f = branched_to_poly(bpp);
                ++checked;
                ok = ok && is_pm_x(f) && is_pm_x(closed_form_inverse(prm)) &&
                     is_pm_x(invert_by_interpolation(f)) && is_pm_x(invert_branched(bpp));
            });
        }
    }
    r.seconds = detail::since(t0);
    r.pass = ok && checked > 0;
    r.detail = std::to_string(checked) + " passing tuples";
    return r;
}

inline std::vector<CheckResult> run_all(Level level, std::uint64_t seed = 0) {
    return {check_theorem1_exact(level),
            check_theorem1_scale(level),
            check_reversed_dickson(level),
            check_theorem2_engine(level),
            check_lemma2_equivalence(seed),
            check_lemma3(level),
            check_lucas(level, seed),
            check_binomial_predictions(level),
            check_families(level, seed),
            check_degenerate_gf3()};
}

} // namespace ppinv::selftest

#endif // PPINV_SELFTEST_HPP
