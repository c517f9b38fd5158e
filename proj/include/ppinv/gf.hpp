#ifndef PPINV_GF_HPP
#define PPINV_GF_HPP

// Exact arithmetic in GF(p^n), p odd, in the polynomial basis over GF(p).
//
// Elements are addressed by their canonical index sum_i c_i p^i, where c_i is
// the coefficient of X^i in the residue modulo the defining polynomial.  A
// Field is immutable once built and is shared through FieldPtr.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppinv {

/// A field element, identified by its canonical index in [0, q).
struct Elem {
    std::uint32_t index = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t i) : index(i) {}

    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % m);
        b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % m);
        e >>= 1;
    }
    return r;
}

// Dense polynomials over the prime field GF(p), low degree first, trimmed.
// Only what the irreducibility test needs.
using PrimePoly = std::vector<std::uint64_t>;

inline void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PrimePoly pp_mod(PrimePoly a, const PrimePoly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = powmod_u64(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t k = 0; k <= dm; ++k)
            a[shift + k] = (a[shift + k] + (p - c) * m[k]) % p;
        trim(a);
    }
    return a;
}

inline PrimePoly pp_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m,
                           std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return pp_mod(std::move(r), m, p);
}

inline PrimePoly pp_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PrimePoly r = pp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: a degree-n polynomial is irreducible iff gcd(X^{p^i} - X, m) = 1
// for 1 <= i <= n/2.
inline bool pp_irreducible(const PrimePoly& m, std::uint64_t p) {
    const std::size_t n = m.size() - 1;
    if (n == 1) return true;
    PrimePoly xpow = pp_mod({0, 1}, m, p);
    for (std::size_t i = 1; i <= n / 2; ++i) {
        // xpow <- xpow^p mod m
        PrimePoly base = xpow, acc{1};
        for (std::uint64_t e = p; e; e >>= 1) {
            if (e & 1) acc = pp_mulmod(acc, base, m, p);
            base = pp_mulmod(base, base, m, p);
        }
        xpow = acc;
        PrimePoly diff = xpow;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (pp_gcd(diff, m, p).size() > 1) return false;
    }
    return true;
}

} // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^n) with a fixed irreducible modulus and primitive element.
class Field {
public:
    /// Largest supported cardinality; element indices are 32-bit.
    static constexpr std::uint64_t max_order = std::uint64_t{1} << 24;

    /// Builds GF(p^n).  Without a modulus, the lexicographically smallest
    /// monic irreducible (coefficients compared low degree first) is used.
    static FieldPtr create(std::uint64_t p, unsigned n,
                           std::optional<std::vector<std::uint64_t>> modulus = std::nullopt) {
        if (p == 2 || !detail::is_prime(p))
            throw std::invalid_argument("characteristic must be an odd prime, got " + std::to_string(p));
        if (n < 1) throw std::invalid_argument("extension degree must be at least 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < n; ++i) {
            q *= p;
            if (q > max_order)
                throw std::invalid_argument("field order exceeds the supported maximum");
        }
        std::vector<std::uint64_t> mod;
        if (modulus) {
            mod = *modulus;
            if (mod.size() != n + 1 || mod.back() != 1)
                throw std::invalid_argument("modulus must be monic of degree " + std::to_string(n));
            for (auto c : mod)
                if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
            if (!detail::pp_irreducible(mod, p))
                throw std::invalid_argument("modulus is reducible over GF(" + std::to_string(p) + ")");
        } else {
            mod = smallest_irreducible(p, n, q);
        }
        return FieldPtr(new Field(p, n, q, std::move(mod)));
    }

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return n_; }
    std::uint64_t order() const noexcept { return q_; }
    /// Monic modulus, n+1 coefficients, low degree first.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    Elem primitive() const noexcept { return xi_; }

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }

    /// Image of an integer under Z -> GF(p).
    Elem from_int(std::int64_t v) const {
        const auto p = static_cast<std::int64_t>(p_);
        return Elem{static_cast<std::uint32_t>(((v % p) + p) % p)};
    }

    Elem from_index(std::uint64_t idx) const {
        if (idx >= q_) throw std::out_of_range("element index " + std::to_string(idx) + " out of range");
        return Elem{static_cast<std::uint32_t>(idx)};
    }

    Elem from_coords(std::span<const std::uint64_t> coords) const {
        if (coords.size() > n_) throw std::invalid_argument("too many coordinates for field degree");
        std::uint64_t idx = 0;
        for (std::size_t i = coords.size(); i-- > 0;) {
            if (coords[i] >= p_) throw std::invalid_argument("coordinate out of range");
            idx = idx * p_ + coords[i];
        }
        return Elem{static_cast<std::uint32_t>(idx)};
    }

    std::span<const std::uint32_t> coords(Elem a) const {
        check(a);
        return {coords_.data() + static_cast<std::size_t>(a.index) * n_, n_};
    }

    bool contains(Elem a) const noexcept { return a.index < q_; }

    Elem add(Elem a, Elem b) const {
        auto ca = coords(a), cb = coords(b);
        std::uint64_t idx = 0;
        for (std::size_t i = n_; i-- > 0;) idx = idx * p_ + (ca[i] + cb[i]) % p_;
        return Elem{static_cast<std::uint32_t>(idx)};
    }

    Elem neg(Elem a) const {
        auto ca = coords(a);
        std::uint64_t idx = 0;
        for (std::size_t i = n_; i-- > 0;) idx = idx * p_ + (p_ - ca[i]) % p_;
        return Elem{static_cast<std::uint32_t>(idx)};
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a.index == 0 || b.index == 0) return zero();
        if (a.index == 1) return b;
        if (b.index == 1) return a;
        auto ca = coords(a), cb = coords(b);
        std::uint64_t prod[2 * max_degree] = {};
        for (std::size_t i = 0; i < n_; ++i) {
            if (!ca[i]) continue;
            for (std::size_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
        }
        for (std::size_t d = 2 * n_ - 1; d-- > n_;) {
            const std::uint64_t c = prod[d];
            if (!c) continue;
            for (std::size_t k = 0; k < n_; ++k)
                prod[d - n_ + k] = (prod[d - n_ + k] + c * ((p_ - modulus_[k]) % p_)) % p_;
        }
        std::uint64_t idx = 0;
        for (std::size_t i = n_; i-- > 0;) idx = idx * p_ + prod[i];
        return Elem{static_cast<std::uint32_t>(idx)};
    }

    /// Exponentiation; negative exponents go through inv.
    Elem pow(Elem a, std::int64_t k) const {
        check(a);
        if (k < 0) return pow(inv(a), -(k + 1) + 1);
        if (a.index == 0) return k == 0 ? one() : zero();
        // a^(q-1) = 1 for a != 0
        std::uint64_t e = static_cast<std::uint64_t>(k) % (q_ - 1);
        Elem r = one(), b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        check(a);
        if (a.index == 0) throw std::domain_error("inverse of zero");
        return pow(a, static_cast<std::int64_t>(q_ - 2));
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// Quadratic character: 0 at zero, +1 on squares, -1 on non-squares.
    int quadratic_character(Elem e) const {
        check(e);
        if (e.index == 0) return 0;
        return pow(e, static_cast<std::int64_t>((q_ - 1) / 2)) == one() ? 1 : -1;
    }

    /// All q elements in increasing index order.
    std::vector<Elem> elements() const {
        std::vector<Elem> out(q_);
        for (std::uint32_t i = 0; i < q_; ++i) out[i] = Elem{i};
        return out;
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(Elem a) const {
        if (a.index == 0) throw std::domain_error("order of zero");
        std::uint64_t ord = q_ - 1;
        for (auto r : detail::prime_factors(q_ - 1)) {
            while (ord % r == 0 && pow(a, static_cast<std::int64_t>(ord / r)) == one()) ord /= r;
        }
        return ord;
    }

    bool same_as(const Field& other) const noexcept {
        return this == &other || (p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_);
    }

private:
    static constexpr std::size_t max_degree = 32;

    Field(std::uint64_t p, unsigned n, std::uint64_t q, std::vector<std::uint64_t> mod)
        : p_(p), n_(n), q_(q), modulus_(std::move(mod)) {
        if (n_ > max_degree) throw std::invalid_argument("extension degree too large");
        coords_.resize(static_cast<std::size_t>(q_) * n_);
        for (std::uint64_t i = 0; i < q_; ++i) {
            std::uint64_t v = i;
            for (unsigned k = 0; k < n_; ++k) {
                coords_[i * n_ + k] = static_cast<std::uint32_t>(v % p_);
                v /= p_;
            }
        }
        const auto factors = detail::prime_factors(q_ - 1);
        for (std::uint32_t i = 1; i < q_; ++i) {
            Elem c{i};
            bool primitive = true;
            for (auto r : factors) {
                if (pow(c, static_cast<std::int64_t>((q_ - 1) / r)) == one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                xi_ = c;
                break;
            }
        }
    }

    static std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned n, std::uint64_t q) {
        // Enumerate the non-leading coefficients as a base-p counter whose
        // most significant digit is c_0, giving low-degree-first lex order.
        std::vector<std::uint64_t> m(n + 1, 0);
        m[n] = 1;
        for (std::uint64_t count = 0; count < q; ++count) {
            if (detail::pp_irreducible(m, p)) return m;
            for (std::size_t k = n; k-- > 0;) {
                if (++m[k] < p) break;
                m[k] = 0;
            }
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    void check(Elem a) const {
        if (a.index >= q_) throw std::out_of_range("element does not belong to this field");
    }

    std::uint64_t p_;
    unsigned n_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint32_t> coords_;
    Elem xi_{1};
};

} // namespace ppinv

#endif // PPINV_GF_HPP
