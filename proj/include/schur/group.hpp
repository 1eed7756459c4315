#pragma once

// Arithmetic on the additive cyclic group Z_n = {0, ..., n-1} and its unit group U(n).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schur {

using residue = std::uint32_t;

// ---------------------------------------------------------------------------
// Elementary number theory
// ---------------------------------------------------------------------------

inline std::vector<residue> divisors(residue n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<residue> small, large;
    for (residue d = 1; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d)
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    return count;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Prime factorization as ascending (prime, exponent) pairs; empty for n = 1.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::uint64_t totient(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("totient: m must be positive");
    std::uint64_t result = m;
    for (auto [p, e] : factorize(m)) result = result / p * (p - 1);
    return result;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// ---------------------------------------------------------------------------
// ElementSet
// ---------------------------------------------------------------------------

// A subset of Z_n stored as an ascending list of residues.
class ElementSet {
   public:
    ElementSet() = default;

    ElementSet(residue n, std::vector<residue> members) : n_(n), members_(std::move(members)) {
        if (n_ == 0) throw std::invalid_argument("ElementSet: modulus must be positive");
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (!members_.empty() && members_.back() >= n_)
            throw std::out_of_range("ElementSet: residue " + std::to_string(members_.back()) +
                                    " is not in [0, " + std::to_string(n_) + ")");
    }

    residue modulus() const noexcept { return n_; }
    const std::vector<residue>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool contains(residue x) const { return std::binary_search(members_.begin(), members_.end(), x); }

    ElementSet intersect(const ElementSet& other) const {
        check_same(other);
        std::vector<residue> out;
        std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
        return ElementSet(n_, std::move(out));
    }

    ElementSet unite(const ElementSet& other) const {
        check_same(other);
        std::vector<residue> out;
        std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
        return ElementSet(n_, std::move(out));
    }

    ElementSet complement() const {
        std::vector<residue> out;
        for (residue x = 0; x < n_; ++x)
            if (!contains(x)) out.push_back(x);
        return ElementSet(n_, std::move(out));
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
    friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

   private:
    void check_same(const ElementSet& other) const {
        if (other.n_ != n_) throw std::invalid_argument("ElementSet: moduli differ");
    }

    residue n_ = 1;
    std::vector<residue> members_;
};

// The unique subgroup of Z_n of order d: the multiples of n/d.
inline ElementSet subgroup_of_order(residue n, residue d) {
    if (n == 0 || d == 0 || n % d != 0)
        throw std::invalid_argument("subgroup_of_order: " + std::to_string(d) + " does not divide " +
                                    std::to_string(n));
    std::vector<residue> members;
    members.reserve(d);
    for (residue i = 0; i < d; ++i) members.push_back(i * (n / d));
    return ElementSet(n, std::move(members));
}

// ---------------------------------------------------------------------------
// Unit subgroups
// ---------------------------------------------------------------------------

// A subgroup of U(n). For n = 1 the identity is the residue 0 (= 1 mod 1).
class UnitSubgroup {
   public:
    // Validates that `members` is a subgroup of U(n).
    UnitSubgroup(residue n, std::vector<residue> members) : n_(n), members_(std::move(members)) {
        if (n_ == 0) throw std::invalid_argument("UnitSubgroup: modulus must be positive");
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (!std::binary_search(members_.begin(), members_.end(), identity()))
            throw std::invalid_argument("UnitSubgroup: identity missing");
        for (residue u : members_) {
            if (u >= n_ || std::gcd(u, n_) != 1)
                throw std::invalid_argument("UnitSubgroup: " + std::to_string(u) + " is not a unit mod " +
                                            std::to_string(n_));
        }
        for (residue u : members_)
            for (residue v : members_)
                if (!contains(mul(u, v)))
                    throw std::invalid_argument("UnitSubgroup: not closed under multiplication (" +
                                                std::to_string(u) + "*" + std::to_string(v) + ")");
    }

    residue modulus() const noexcept { return n_; }
    residue identity() const noexcept { return 1 % n_; }
    const std::vector<residue>& members() const noexcept { return members_; }
    std::size_t order() const noexcept { return members_.size(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    bool contains(residue u) const { return std::binary_search(members_.begin(), members_.end(), u); }

    friend bool operator==(const UnitSubgroup&, const UnitSubgroup&) = default;
    friend auto operator<=>(const UnitSubgroup&, const UnitSubgroup&) = default;

   private:
    struct trusted_t {};
    UnitSubgroup(trusted_t, residue n, std::vector<residue> sorted_members)
        : n_(n), members_(std::move(sorted_members)) {}

    residue mul(residue u, residue v) const {
        return static_cast<residue>(static_cast<std::uint64_t>(u) * v % n_);
    }

    friend UnitSubgroup generated_unit_subgroup(residue, std::span<const residue>);
    friend UnitSubgroup join_unit_subgroups(const UnitSubgroup&, const UnitSubgroup&);

    residue n_ = 1;
    std::vector<residue> members_;
};

inline UnitSubgroup generated_unit_subgroup(residue n, std::span<const residue> gens) {
    if (n == 0) throw std::invalid_argument("generated_unit_subgroup: modulus must be positive");
    std::vector<char> seen(n, 0);
    std::vector<residue> members{1 % n};
    seen[1 % n] = 1;
    for (residue g : gens) {
        if (std::gcd(g % n, n) != 1)
            throw std::invalid_argument("generated_unit_subgroup: " + std::to_string(g) + " is not a unit mod " +
                                        std::to_string(n));
    }
    // Closure: multiply every element found so far by every generator.
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (residue g : gens) {
            auto y = static_cast<residue>(static_cast<std::uint64_t>(members[i]) * (g % n) % n);
            if (!seen[y]) {
                seen[y] = 1;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return UnitSubgroup(UnitSubgroup::trusted_t{}, n, std::move(members));
}

inline UnitSubgroup generated_unit_subgroup(residue n, std::initializer_list<residue> gens) {
    return generated_unit_subgroup(n, std::span<const residue>(gens.begin(), gens.size()));
}

inline UnitSubgroup unit_group(residue n) {
    std::vector<residue> units;
    for (residue u = 0; u < n; ++u)
        if (std::gcd(u, n) == 1) units.push_back(u);
    return generated_unit_subgroup(n, units);
}

// Product AB of two subgroups of the abelian group U(n).
inline UnitSubgroup join_unit_subgroups(const UnitSubgroup& a, const UnitSubgroup& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("join_unit_subgroups: moduli differ");
    const residue n = a.modulus();
    std::vector<char> seen(n, 0);
    std::vector<residue> members;
    for (residue u : a)
        for (residue v : b) {
            auto y = a.mul(u, v);
            if (!seen[y]) {
                seen[y] = 1;
                members.push_back(y);
            }
        }
    std::sort(members.begin(), members.end());
    return UnitSubgroup(UnitSubgroup::trusted_t{}, n, std::move(members));
}

// Every subgroup of U(n), each once, ordered by (order, members).
// Breadth-first closure over joins with the cyclic subgroups; U(n) may have rank > 2.
inline std::vector<UnitSubgroup> all_unit_subgroups(residue n) {
    const UnitSubgroup full = unit_group(n);

    std::set<UnitSubgroup> cyclic;
    for (residue u : full) cyclic.insert(generated_unit_subgroup(n, {u}));

    std::set<UnitSubgroup> found;
    std::vector<UnitSubgroup> frontier{generated_unit_subgroup(n, std::span<const residue>{})};
    found.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<UnitSubgroup> next;
        for (const auto& h : frontier) {
            for (const auto& c : cyclic) {
                if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
                auto joined = join_unit_subgroups(h, c);
                if (found.insert(joined).second) next.push_back(std::move(joined));
            }
        }
        frontier = std::move(next);
    }

    std::vector<UnitSubgroup> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const UnitSubgroup& x, const UnitSubgroup& y) { return x.order() < y.order(); });
    return out;
}

// Number of subgroups of Z_{p^k} x Z_{p^l}.
inline std::uint64_t count_subgroups_rank2(std::uint64_t p, unsigned k, unsigned l) {
    if (!is_prime(p)) throw std::invalid_argument("count_subgroups_rank2: " + std::to_string(p) + " is not prime");
    std::uint64_t total = 0;
    for (unsigned j = 0; j <= std::min(k, l); ++j)
        total += totient(ipow(p, j)) * (k - j + 1) * (l - j + 1);
    return total;
}

// ---------------------------------------------------------------------------
// Chinese remaindering
// ---------------------------------------------------------------------------

// The isomorphism Z_n -> Z_a x Z_b, r -> (r mod a, r mod b), for n = ab with gcd(a, b) = 1.
class CrtIso {
   public:
    residue n() const noexcept { return n_; }
    residue a() const noexcept { return a_; }
    residue b() const noexcept { return b_; }

    std::pair<residue, residue> forward(residue r) const { return {r % a_, r % b_}; }

    residue inverse(residue x, residue y) const {
        if (x >= a_ || y >= b_) throw std::out_of_range("CrtIso::inverse: component out of range");
        // r = x * b * (b^-1 mod a) + y * a * (a^-1 mod b)  (mod n)
        std::uint64_t r = (static_cast<std::uint64_t>(x) * e_a_ + static_cast<std::uint64_t>(y) * e_b_) % n_;
        return static_cast<residue>(r);
    }

   private:
    CrtIso(residue n, residue a, residue b) : n_(n), a_(a), b_(b) {
        e_a_ = find_idempotent(a_, b_);
        e_b_ = find_idempotent(b_, a_);
    }

    // The residue in Z_n that is 1 mod m and 0 mod other.
    residue find_idempotent(residue m, residue other) const {
        for (residue t = 0; t < m; ++t) {
            std::uint64_t v = static_cast<std::uint64_t>(t) * other;
            if (v % m == 1 % m) return static_cast<residue>(v % n_);
        }
        return 0;
    }

    friend CrtIso crt_split(residue, residue, residue);

    residue n_, a_, b_;
    residue e_a_ = 0, e_b_ = 0;
};

inline CrtIso crt_split(residue n, residue a, residue b) {
    if (a == 0 || b == 0 || static_cast<std::uint64_t>(a) * b != n)
        throw std::invalid_argument("crt_split: " + std::to_string(n) + " != " + std::to_string(a) + " * " +
                                    std::to_string(b));
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("crt_split: " + std::to_string(a) + " and " + std::to_string(b) +
                                    " are not coprime");
    return CrtIso(n, a, b);
}

// Unordered pairs {a, b}, 1 < a < b, ab = n, gcd(a, b) = 1.
inline std::vector<std::pair<residue, residue>> unitary_factorizations(residue n) {
    std::vector<std::pair<residue, residue>> out;
    for (residue a : divisors(n)) {
        residue b = n / a;
        if (a > 1 && a < b && std::gcd(a, b) == 1) out.emplace_back(a, b);
    }
    return out;
}

}  // namespace schur
