#pragma once

// Closed forms for the number of Schur rings over Z_n for special families of n,
// and the Catalan and Schroeder numbers they use. All arithmetic is exact; any
// intermediate overflow throws std::overflow_error.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "group.hpp"

namespace schur {

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("formula arithmetic overflows 64 bits");
    return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("formula arithmetic overflows 64 bits");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("formula arithmetic overflows 64 bits");
    return r;
}

inline std::uint64_t exact_div(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num % den != 0)
        throw InternalError("inexact division " + std::to_string(num) + " / " + std::to_string(den));
    return num / den;
}

inline unsigned two_adic_valuation(std::uint64_t m) {
    unsigned k = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++k;
    }
    return k;
}

}  // namespace detail

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = detail::exact_div(detail::checked_mul(r, n - i), i + 1);
    return r;
}

inline std::uint64_t catalan(unsigned k) { return detail::exact_div(binomial(2ull * k, k), k + 1ull); }

inline std::uint64_t schroeder(unsigned k) {
    std::uint64_t total = 0;
    for (unsigned j = 0; j <= k; ++j)
        total = detail::checked_add(total, detail::checked_mul(catalan(j), binomial(k + j, 2ull * j)));
    return total;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

enum class Family { p, p_k, two_k, pq, two_p, three_p, five_p, four_p, two_p2, two_p3 };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::p: return "p";
        case Family::p_k: return "p^k";
        case Family::two_k: return "2^k";
        case Family::pq: return "pq";
        case Family::two_p: return "2p";
        case Family::three_p: return "3p";
        case Family::five_p: return "5p";
        case Family::four_p: return "4p";
        case Family::two_p2: return "2p^2";
        case Family::two_p3: return "2p^3";
    }
    return "?";
}

inline const std::vector<Family>& all_families() {
    static const std::vector<Family> all{Family::p,      Family::p_k,     Family::two_k,  Family::pq,     Family::two_p,
                                         Family::three_p, Family::five_p, Family::four_p, Family::two_p2, Family::two_p3};
    return all;
}

inline std::optional<Family> parse_family(std::string_view name) {
    for (Family f : all_families())
        if (family_name(f) == name) return f;
    return std::nullopt;
}

// Validated parameters of one family instance.
struct FamilyParams {
    Family family = Family::p;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    unsigned k = 0;  // exponent for p^k and 2^k

    // Derived: x = number of divisors of p - 1, and p - 1 = 2^two_adic * odd_part.
    std::uint64_t x = 0;
    unsigned two_adic = 0;
    std::uint64_t odd_part = 0;

    std::uint64_t order() const {
        switch (family) {
            case Family::p: return p;
            case Family::p_k: return ipow(p, k);
            case Family::two_k: return ipow(2, k);
            case Family::pq: return p * q;
            case Family::two_p: return 2 * p;
            case Family::three_p: return 3 * p;
            case Family::five_p: return 5 * p;
            case Family::four_p: return 4 * p;
            case Family::two_p2: return 2 * p * p;
            case Family::two_p3: return 2 * p * p * p;
        }
        return 0;
    }
};

inline FamilyParams make_family_params(Family family, std::uint64_t p, std::uint64_t q = 0, unsigned k = 0) {
    const std::string tag(family_name(family));
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) throw SideConditionError(tag + ": " + what);
    };
    FamilyParams fp{family, p, q, k};
    if (family == Family::two_k) {
        fp.p = 2;
        return fp;
    }
    require(is_prime(p), "p must be prime (got " + std::to_string(p) + ")");
    switch (family) {
        case Family::p: break;
        case Family::p_k:
            require(p != 2, "p must be odd; use 2^k for powers of two");
            require(k >= 1, "k must be at least 1");
            break;
        case Family::pq:
            require(is_prime(q), "q must be prime (got " + std::to_string(q) + ")");
            require(p != q, "p and q must be distinct");
            break;
        case Family::three_p: require(p != 2 && p != 3, "p must be an odd prime other than 3"); break;
        case Family::five_p: require(p != 2 && p != 5, "p must be an odd prime other than 5"); break;
        default: require(p != 2, "p must be odd"); break;
    }
    fp.x = divisor_count(p - 1);
    fp.two_adic = detail::two_adic_valuation(p - 1);
    fp.odd_part = (p - 1) >> fp.two_adic;
    return fp;
}

inline std::uint64_t omega_prime(std::uint64_t p) {
    if (!is_prime(p)) throw SideConditionError("p: " + std::to_string(p) + " is not prime");
    return divisor_count(p - 1);
}

inline std::uint64_t omega_prime_power(std::uint64_t p, unsigned k) {
    auto fp = make_family_params(Family::p_k, p, 0, k);
    const std::uint64_t x = fp.x;
    // Omega(p^m) for m = 0 .. k
    std::vector<std::uint64_t> om{1};
    for (unsigned m = 1; m <= k; ++m) {
        std::uint64_t v = detail::checked_mul(x, om[m - 1]);
        for (unsigned j = 2; j <= m; ++j) {
            std::uint64_t coef = detail::checked_add(detail::checked_mul(catalan(j - 1), x), 1);
            v = detail::checked_add(v, detail::checked_mul(coef, om[m - j]));
        }
        om.push_back(v);
    }
    return om[k];
}

inline std::uint64_t omega_two_power(unsigned k) {
    std::vector<std::int64_t> om{1, 1, 3};
    auto cs = [](unsigned i) { return static_cast<std::int64_t>(catalan(i) + schroeder(i)); };
    for (unsigned m = 3; m <= k; ++m) {
        std::int64_t v = 0;
        for (unsigned j = 1; j <= 3; ++j) v += detail::checked_mul(std::int64_t{1} << j, om[m - j]);
        v -= cs(m - 1);
        for (unsigned j = 4; j <= m; ++j) {
            std::int64_t coef = cs(j - 1);
            for (unsigned i = 1; i <= j - 3; ++i) coef -= cs(i);
            v += detail::checked_mul(coef, om[m - j]);
        }
        om.push_back(v);
    }
    if (om[k] < 1) throw InternalError("omega_two_power: non-positive value");
    return static_cast<std::uint64_t>(om[k]);
}

// 2 Omega(p) Omega(q) + |L(U(pq))| + 1, with the subgroup count of U(pq) = Z_{p-1} x Z_{q-1}
// taken prime by prime over the union of the prime factors of p - 1 and q - 1.
inline std::uint64_t omega_pq(std::uint64_t p, std::uint64_t q) {
    make_family_params(Family::pq, p, q);
    std::map<std::uint64_t, std::pair<unsigned, unsigned>> exps;
    for (auto [r, e] : factorize(p - 1 == 0 ? 1 : p - 1)) exps[r].first = e;
    for (auto [r, e] : factorize(q - 1 == 0 ? 1 : q - 1)) exps[r].second = e;
    std::uint64_t lattice = 1, product = 1;
    for (auto [r, kl] : exps) {
        lattice = detail::checked_mul(lattice, count_subgroups_rank2(r, kl.first, kl.second));
        product = detail::checked_mul(product, std::uint64_t{kl.first + 1u} * (kl.second + 1u));
    }
    return detail::checked_add(detail::checked_add(lattice, detail::checked_mul(2, product)), 1);
}

inline std::uint64_t omega_special(const FamilyParams& fp) {
    const std::uint64_t x = fp.x;
    const std::uint64_t k1 = fp.two_adic + 1ull;
    switch (fp.family) {
        case Family::two_p: return 3 * x + 1;
        case Family::three_p: return detail::exact_div((7ull * fp.two_adic + 6) * x, k1) + 1;
        case Family::five_p: return detail::exact_div((13ull * fp.two_adic + 7) * x, k1) + 1;
        case Family::four_p: return detail::exact_div((15ull * fp.two_adic + 14) * x, k1) + 3;
        case Family::two_p2: return 6 * x * x + 7 * x + 4;
        case Family::two_p3: return 10 * x * x * x + 21 * x * x + 31 * x + 6;
        default: throw std::invalid_argument("omega_special: unsupported family " + std::string(family_name(fp.family)));
    }
}

inline std::uint64_t omega_special(Family family, std::uint64_t p) { return omega_special(make_family_params(family, p)); }

inline std::uint64_t evaluate_formula(const FamilyParams& fp) {
    switch (fp.family) {
        case Family::p: return omega_prime(fp.p);
        case Family::p_k: return omega_prime_power(fp.p, fp.k);
        case Family::two_k: return omega_two_power(fp.k);
        case Family::pq: return omega_pq(fp.p, fp.q);
        default: return omega_special(fp);
    }
}

// Every family instance whose order is n.
inline std::vector<FamilyParams> formulas_for(std::uint64_t n) {
    std::vector<FamilyParams> out;
    auto try_add = [&](Family f, std::uint64_t p, std::uint64_t q = 0, unsigned k = 0) {
        try {
            auto fp = make_family_params(f, p, q, k);
            if (fp.order() == n) out.push_back(fp);
        } catch (const SideConditionError&) {
        }
    };
    const auto fac = factorize(n);
    if (fac.size() == 1) {
        auto [p, e] = fac[0];
        if (e == 1) try_add(Family::p, p);
        if (p == 2) try_add(Family::two_k, 2, 0, e);
        else try_add(Family::p_k, p, 0, e);
    }
    if (n == 1) try_add(Family::two_k, 2, 0, 0);
    if (fac.size() == 2 && fac[0].second == 1 && fac[1].second == 1) try_add(Family::pq, fac[0].first, fac[1].first);
    const std::pair<Family, std::uint64_t> linear[] = {
        {Family::two_p, 2}, {Family::three_p, 3}, {Family::five_p, 5}, {Family::four_p, 4}};
    for (auto [f, c] : linear)
        if (n % c == 0) try_add(f, n / c);
    for (std::uint64_t p = 3; 2 * p * p <= n; p += 2) {
        if (2 * p * p == n) try_add(Family::two_p2, p);
        if (2 * p * p * p == n) try_add(Family::two_p3, p);
    }
    return out;
}

}  // namespace schur
