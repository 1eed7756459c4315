#pragma once

// Enumeration of every Schur ring over Z_n by recursive traditional constructions,
// a brute-force oracle over set partitions, and classification services.

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "constructors.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "partition.hpp"

namespace schur {

struct EnumerationOptions {
    residue max_order = 128;
    std::size_t max_rings = 1'000'000;
    // Only wedge over [d, e] when d is a minimal nontrivial S-subgroup of the left factor.
    // Every wedge also decomposes over such a section, so the ring set is unchanged.
    bool minimal_sections = false;
    // Re-verify every ring against the axioms before publishing it.
    bool verify = false;
};

// The Schur rings over Z_n in canonical (lexicographic label) order, without duplicates.
class RingSet {
   public:
    RingSet() = default;
    RingSet(residue n, std::vector<SchurRing> rings) : n_(n), rings_(std::move(rings)) {
        std::sort(rings_.begin(), rings_.end());
        rings_.erase(std::unique(rings_.begin(), rings_.end()), rings_.end());
    }

    residue modulus() const noexcept { return n_; }
    std::size_t size() const noexcept { return rings_.size(); }
    const std::vector<SchurRing>& rings() const noexcept { return rings_; }
    auto begin() const noexcept { return rings_.begin(); }
    auto end() const noexcept { return rings_.end(); }
    const SchurRing& operator[](std::size_t i) const { return rings_[i]; }

    bool contains(const GroupPartition& p) const {
        auto it = std::lower_bound(rings_.begin(), rings_.end(), p,
                                   [](const SchurRing& s, const GroupPartition& q) { return s.partition() < q; });
        return it != rings_.end() && it->partition() == p;
    }

    friend bool operator==(const RingSet& a, const RingSet& b) { return a.n_ == b.n_ && a.rings_ == b.rings_; }

   private:
    residue n_ = 1;
    std::vector<SchurRing> rings_;
};

namespace detail {

inline GroupPartition direct_partition(const GroupPartition& s, const GroupPartition& t, const CrtIso& iso) {
    const auto& ls = s.labels();
    const auto& lt = t.labels();
    const auto width = static_cast<std::uint32_t>(t.block_count());
    std::vector<std::uint32_t> raw(iso.n());
    for (residue r = 0; r < iso.n(); ++r) raw[r] = ls[r % iso.a()] * width + lt[r % iso.b()];
    return GroupPartition::from_labels<std::uint32_t>(iso.n(), raw);
}

}  // namespace detail

// Memoized enumerator. Every subgroup and quotient of Z_n is canonically Z_m, so results are
// cached by order alone. Safe to share between threads; each order is computed once.
class Enumerator {
   public:
    using Result = std::shared_ptr<const RingSet>;

    explicit Enumerator(EnumerationOptions options = {}) : options_(options) {}

    const EnumerationOptions& options() const noexcept { return options_; }

    Result enumerate(residue n) {
        if (n == 0) throw std::invalid_argument("enumerate: n must be positive");
        if (n > options_.max_order)
            throw BudgetExceeded("order " + std::to_string(n) + " exceeds the enumeration ceiling " +
                                 std::to_string(options_.max_order));
        std::promise<Result> promise;
        std::shared_future<Result> future;
        bool owner = false;
        {
            std::lock_guard lock(mutex_);
            auto it = memo_.find(n);
            if (it != memo_.end()) {
                future = it->second;
            } else {
                future = promise.get_future().share();
                memo_.emplace(n, future);
                owner = true;
            }
        }
        if (owner) {
            try {
                promise.set_value(compute(n));
            } catch (...) {
                promise.set_exception(std::current_exception());
            }
        }
        return future.get();
    }

    std::uint64_t omega(residue n) { return enumerate(n)->size(); }

   private:
    static bool minimal_above_one(const SchurRing& s, residue d) {
        for (residue f : s.s_subgroup_divisors()) {
            if (f >= d) break;
            if (f > 1 && d % f == 0) return false;
        }
        return true;
    }

    const std::vector<residue>& divisors_of(residue n) {
        std::lock_guard lock(mutex_);
        auto it = divisor_cache_.find(n);
        if (it == divisor_cache_.end()) it = divisor_cache_.emplace(n, divisors(n)).first;
        return it->second;
    }

    Result compute(residue n) {
        using PartitionSet = std::unordered_set<GroupPartition, PartitionHash>;
        PartitionSet found;
        auto insert = [&](GroupPartition p) {
            found.insert(std::move(p));
            if (found.size() > options_.max_rings)
                throw BudgetExceeded("more than " + std::to_string(options_.max_rings) + " rings over Z_" +
                                     std::to_string(n));
        };

        insert(trivial_ring(n).partition());

        for (const auto& h : all_unit_subgroups(n)) insert(automorphic_ring(n, h).partition());

        for (auto [a, b] : unitary_factorizations(n)) {
            const auto iso = crt_split(n, a, b);
            auto left = enumerate(a);
            auto right = enumerate(b);
            for (const auto& s : *left)
                for (const auto& t : *right) insert(detail::direct_partition(s.partition(), t.partition(), iso));
        }

        // Wedge products over proper sections [d, e]. Compatible pairs are found by joining
        // S/K against T_{H/K} on the canonical partition of Z_{e/d}.
        const auto divs = divisors_of(n);
        for (residue d : divs) {
            if (d == 1 || d == n) continue;
            auto right = enumerate(n / d);
            for (residue e : divs) {
                if (e < d || e == n || e % d != 0) continue;
                const residue k = e / d;
                auto left = enumerate(e);

                std::unordered_map<GroupPartition, std::vector<const GroupPartition*>, PartitionHash> by_key;
                for (const auto& t : *right) {
                    if (!t.is_s_subgroup(k)) continue;
                    by_key[detail::restrict_to(t.partition(), k)].push_back(&t.partition());
                }
                for (const auto& s : *left) {
                    if (!s.is_s_subgroup(d)) continue;
                    if (options_.minimal_sections && !minimal_above_one(s, d)) continue;
                    auto it = by_key.find(detail::project_modulo(s.partition(), d));
                    if (it == by_key.end()) continue;
                    for (const GroupPartition* t : it->second)
                        insert(detail::wedge_partition(s.partition(), *t, n, d, e));
                }
            }
        }

        std::vector<SchurRing> rings;
        rings.reserve(found.size());
        for (auto& p : found) {
            if (options_.verify) {
                auto report = verify_schur(p);
                if (!report) throw InternalError("enumerate: constructed partition fails " + report.message);
            }
            rings.push_back(SchurRing::unchecked(p));
        }
        return std::make_shared<const RingSet>(n, std::move(rings));
    }

    EnumerationOptions options_;
    std::mutex mutex_;
    std::map<residue, std::shared_future<Result>> memo_;
    std::map<residue, std::vector<residue>> divisor_cache_;
};

inline RingSet enumerate_all(residue n, EnumerationOptions options = {}) {
    Enumerator en(options);
    return *en.enumerate(n);
}

inline std::uint64_t omega(residue n, EnumerationOptions options = {}) {
    Enumerator en(options);
    return en.omega(n);
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

inline constexpr residue default_oracle_ceiling = 10;

// Every set partition of Z_n with {0} a singleton that satisfies the axioms.
// The search space is the Bell number B(n-1); partitions are generated as restricted-growth
// strings and pruned as soon as inverse-closure fails on an assigned pair.
inline RingSet brute_force_enumerate(residue n, residue ceiling = default_oracle_ceiling) {
    if (n == 0) throw std::invalid_argument("brute_force_enumerate: n must be positive");
    if (n > ceiling)
        throw BudgetExceeded("order " + std::to_string(n) + " exceeds the oracle ceiling " + std::to_string(ceiling));

    std::vector<block_label> labels(n, 0);
    std::vector<SchurRing> rings;

    // Inverse-closure: x ~ y  iff  -x ~ -y, checked once all four residues are labelled.
    auto consistent = [&](residue x) {
        const residue nx = (n - x) % n;
        if (nx > x) return true;
        for (residue y = 1; y <= x; ++y) {
            const residue ny = (n - y) % n;
            if (ny > x) continue;
            if ((labels[x] == labels[y]) != (labels[nx] == labels[ny])) return false;
        }
        return true;
    };

    auto recurse = [&](auto&& self, residue x, block_label used) -> void {
        if (x == n) {
            auto p = GroupPartition::from_labels(n, labels);
            if (verify_schur(p)) rings.push_back(SchurRing::unchecked(std::move(p)));
            return;
        }
        for (block_label l = 1; l <= used + 1; ++l) {
            labels[x] = l;
            if (!consistent(x)) continue;
            self(self, x + 1, std::max(used, l));
        }
    };
    recurse(recurse, 1, 0);
    return RingSet(n, std::move(rings));
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

// Units that fix every block setwise.
inline UnitSubgroup block_stabilizer(const SchurRing& s) {
    const residue n = s.modulus();
    const auto& labels = s.partition().labels();
    std::vector<residue> members;
    for (residue u : unit_group(n)) {
        bool fixes = true;
        for (residue x = 0; x < n && fixes; ++x)
            fixes = labels[static_cast<std::uint64_t>(u) * x % n] == labels[x];
        if (fixes) members.push_back(u);
    }
    return UnitSubgroup(n, std::move(members));
}

inline bool is_automorphic(const SchurRing& s) {
    return automorphic_ring(s.modulus(), block_stabilizer(s)) == s;
}

// A unitary factorization {a, b} with S = S_a x S_b, if any.
inline std::optional<std::pair<residue, residue>> direct_factorization(const SchurRing& s) {
    for (auto [a, b] : unitary_factorizations(s.modulus())) {
        if (!s.is_s_subgroup(a) || !s.is_s_subgroup(b)) continue;
        if (direct_product(subring(s, a), subring(s, b), crt_split(s.modulus(), a, b)) == s) return std::pair{a, b};
    }
    return std::nullopt;
}

struct Classification {
    SchurRing ring;
    bool is_trivial = false;
    bool is_discrete = false;
    bool is_primitive = false;
    bool is_automorphic = false;
    bool is_direct_decomposable = false;
    bool is_wedge_decomposable = false;
    std::optional<std::pair<residue, residue>> direct_factors;
    std::optional<Section> wedge_section;
    residue core_order = 1;

    std::vector<std::string> families() const {
        std::vector<std::string> tags;
        if (is_trivial) tags.emplace_back("trivial");
        if (is_automorphic) tags.emplace_back("automorphic");
        if (is_direct_decomposable) tags.emplace_back("direct");
        if (is_wedge_decomposable) tags.emplace_back("wedge");
        return tags;
    }
};

inline Classification classify(const SchurRing& s) {
    Classification c;
    c.ring = s;
    const residue n = s.modulus();
    c.is_trivial = n <= 2 || (s.rank() == 2 && s.partition().block_sizes()[0] == 1);
    c.is_discrete = s.rank() == n;
    c.is_primitive = s.is_primitive();
    c.is_automorphic = is_automorphic(s);
    c.direct_factors = direct_factorization(s);
    c.is_direct_decomposable = c.direct_factors.has_value();
    c.wedge_section = is_wedge_decomposable(s);
    c.is_wedge_decomposable = c.wedge_section.has_value();
    c.core_order = wedge_core(s).modulus();
    return c;
}

// Number of rings over Z_n whose wedge-core is `core`.
inline std::uint64_t count_by_core(Enumerator& en, residue n, const SchurRing& core) {
    if (n % core.modulus() != 0)
        throw std::invalid_argument("count_by_core: " + std::to_string(core.modulus()) + " does not divide " +
                                    std::to_string(n));
    std::uint64_t count = 0;
    for (const auto& s : *en.enumerate(n))
        if (s.is_s_subgroup(core.modulus()) && wedge_core(s) == core) ++count;
    return count;
}

inline std::uint64_t count_by_core(residue n, const SchurRing& core, EnumerationOptions options = {}) {
    Enumerator en(options);
    return count_by_core(en, n, core);
}

}  // namespace schur
