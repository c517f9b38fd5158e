#ifndef PPINV_BINOM_HPP
#define PPINV_BINOM_HPP

// Binomial coefficients modulo a prime via Lucas' theorem, plus the closed
// predictions for which C(3i, i-1) and C(3i - (3^n-1)/2, i - (3^n+1)/2) are
// nonzero mod 3 and what their residues are.

#include <ppinv/gf.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppinv {

/// Base-p digits, least significant first.
struct DigitExpansion {
    std::uint64_t base = 0;
    std::vector<std::uint64_t> digits;

    std::uint64_t value() const {
        std::uint64_t v = 0;
        for (std::size_t t = digits.size(); t-- > 0;) v = v * base + digits[t];
        return v;
    }
};

namespace detail {

inline void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

// C(a, b) mod p for 0 <= a, b < p.
inline std::uint64_t small_binom(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
        num = static_cast<std::uint64_t>(static_cast<unsigned __int128>(num) * ((a - i) % p) % p);
        den = static_cast<std::uint64_t>(static_cast<unsigned __int128>(den) * ((i + 1) % p) % p);
    }
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(num) * powmod_u64(den, p - 2, p) % p);
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace detail

/// Base-p digits of m, padded with zeros to len when given.
inline DigitExpansion digits(std::uint64_t m, std::uint64_t p, std::optional<std::size_t> len = std::nullopt) {
    if (p < 2) throw std::invalid_argument("digit base must be at least 2");
    DigitExpansion d{p, {}};
    for (std::uint64_t v = m; v; v /= p) d.digits.push_back(v % p);
    if (len) {
        if (d.digits.size() > *len)
            throw std::invalid_argument(std::to_string(m) + " needs more than " + std::to_string(*len) + " digits");
        d.digits.resize(*len, 0);
    }
    return d;
}

/// C(m, k) mod p by Lucas' theorem.
inline std::uint64_t binom_mod_p(std::uint64_t m, std::uint64_t k, std::uint64_t p) {
    detail::require_prime(p);
    if (k > m) return 0;
    std::uint64_t r = 1;
    while (k) {
        const std::uint64_t mt = m % p, kt = k % p;
        if (kt > mt) return 0;
        r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * detail::small_binom(mt, kt, p) % p);
        m /= p;
        k /= p;
    }
    return r;
}

/// Generalized C(m, k) = m(m-1)...(m-k+1)/k! mod p for any integer m.
/// Negative m uses C(m, k) = (-1)^k C(k - m - 1, k).
inline std::uint64_t binom_generalized_mod_p(std::int64_t m, std::uint64_t k, std::uint64_t p) {
    detail::require_prime(p);
    if (m >= 0) return binom_mod_p(static_cast<std::uint64_t>(m), k, p);
    const std::uint64_t flipped = k + static_cast<std::uint64_t>(-(m + 1));
    const std::uint64_t v = binom_mod_p(flipped, k, p);
    return (k % 2 == 0 || v == 0) ? v : p - v;
}

/// Predicted {i in [1, 3^n) : C(3i, i-1) != 0 mod 3} = {(3^k - 1)/2 : 1 <= k <= n}.
inline std::set<std::uint64_t> theorem3_support(unsigned n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    std::set<std::uint64_t> s;
    for (unsigned k = 1; k <= n; ++k) s.insert((detail::ipow(3, k) - 1) / 2);
    return s;
}

/// Range [(3^n+1)/2, (5*3^n-3)/6] of i for the second binomial family.
inline std::pair<std::uint64_t, std::uint64_t> theorem4_range(unsigned n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const std::uint64_t q = detail::ipow(3, n);
    return {(q + 1) / 2, (5 * q - 3) / 6};
}

/// i = (3^n+1)/2 + (3^j-1)/2 + (3^k-1)/2 for 0 <= j <= k <= n-1.
inline std::uint64_t theorem4_point(unsigned j, unsigned k, unsigned n) {
    if (n < 1 || j > k || k > n - 1) throw std::invalid_argument("need 0 <= j <= k <= n-1");
    return (detail::ipow(3, n) + 1) / 2 + (detail::ipow(3, j) - 1) / 2 + (detail::ipow(3, k) - 1) / 2;
}

/// Predicted i in the theorem4_range with C(3i - (3^n-1)/2, i - (3^n+1)/2) != 0 mod 3.
inline std::set<std::uint64_t> theorem4_support(unsigned n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    std::set<std::uint64_t> s;
    for (unsigned k = 0; k < n; ++k)
        for (unsigned j = 0; j <= k; ++j) s.insert(theorem4_point(j, k, n));
    return s;
}

/// Digit characterization: the n-1 base-3 digits of i - (3^n+1)/2 are
/// non-increasing from the low end.
inline bool theorem4_digits_monotone(std::uint64_t i, unsigned n) {
    const auto [lo, hi] = theorem4_range(n);
    if (i < lo || i > hi) throw std::invalid_argument("i outside the admissible range");
    const auto d = digits(i - lo, 3, n - 1);
    for (std::size_t t = 1; t < d.digits.size(); ++t)
        if (d.digits[t] > d.digits[t - 1]) return false;
    return true;
}

/// Unsigned residue of C(3i - (3^n-1)/2, i - (3^n+1)/2) at a support point.
inline std::uint64_t theorem5_value(unsigned j, unsigned k, unsigned n) {
    (void)theorem4_point(j, k, n);
    return j == k ? 1 : 2;
}

/// Signed coefficient (-1)^{i-(3^n+1)/2} C(...) mod 3 at a support point.
inline std::uint64_t theorem6_signed_value(unsigned j, unsigned k, unsigned n) {
    (void)theorem4_point(j, k, n);
    if (j == k) return 1;
    return (j + k + 1) % 2 == 0 ? 1 : 2;
}

} // namespace ppinv

#endif // PPINV_BINOM_HPP
