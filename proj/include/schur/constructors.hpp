#pragma once

// The traditional constructions: trivial and automorphic rings, direct and wedge products,
// plus wedge-decomposability and the wedge-core.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "partition.hpp"

namespace schur {

// The section [Z_d, Z_e] of Z_n.
struct Section {
    residue n = 1;
    residue d = 1;
    residue e = 1;

    bool valid() const noexcept { return n > 0 && d > 0 && e > 0 && e % d == 0 && n % e == 0; }
    bool proper() const noexcept { return valid() && 1 < d && e < n; }
    bool trivial() const noexcept { return d == e; }

    friend bool operator==(const Section&, const Section&) = default;
};

inline Section make_section(residue n, residue d, residue e) {
    Section s{n, d, e};
    if (!s.valid())
        throw std::invalid_argument("Section: need d | e | n, got (" + std::to_string(d) + ", " + std::to_string(e) +
                                    ", " + std::to_string(n) + ")");
    return s;
}

inline SchurRing trivial_ring(residue n) {
    std::vector<block_label> raw(n, 1);
    raw[0] = 0;
    return SchurRing::unchecked(GroupPartition::from_labels(n, raw));
}

inline SchurRing discrete_ring(residue n) {
    if (n > max_modulus) throw std::invalid_argument("discrete_ring: modulus out of range");
    std::vector<block_label> raw(n);
    std::iota(raw.begin(), raw.end(), block_label{0});
    return SchurRing::unchecked(GroupPartition::from_labels(n, raw));
}

// Orbits of H acting on Z_n by multiplication.
inline SchurRing automorphic_ring(residue n, const UnitSubgroup& h) {
    if (h.modulus() != n) throw std::invalid_argument("automorphic_ring: unit subgroup is not modulo " + std::to_string(n));
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> raw(n, unset);
    std::uint32_t next = 0;
    for (residue x = 0; x < n; ++x) {
        if (raw[x] != unset) continue;
        for (residue u : h) raw[static_cast<std::uint64_t>(u) * x % n] = next;
        ++next;
    }
    return SchurRing::unchecked(GroupPartition::from_labels<std::uint32_t>(n, raw));
}

inline SchurRing direct_product(const SchurRing& s, const SchurRing& t, const CrtIso& iso) {
    if (s.modulus() != iso.a() || t.modulus() != iso.b())
        throw std::invalid_argument("direct_product: factor orders do not match the CRT splitting");
    const residue n = iso.n();
    const auto& ls = s.partition().labels();
    const auto& lt = t.partition().labels();
    const std::uint32_t width = static_cast<std::uint32_t>(t.rank());
    std::vector<std::uint32_t> raw(n);
    for (residue r = 0; r < n; ++r) {
        auto [x, y] = iso.forward(r);
        raw[r] = ls[x] * width + lt[y];
    }
    return SchurRing::unchecked(GroupPartition::from_labels<std::uint32_t>(n, raw));
}

inline SchurRing direct_product(const SchurRing& s, const SchurRing& t) {
    const residue a = s.modulus(), b = t.modulus();
    return direct_product(s, t, crt_split(a * b, a, b));
}

namespace detail {

inline void check_wedge_orders(const SchurRing& s, const SchurRing& t, const Section& sec) {
    if (!sec.valid()) throw std::invalid_argument("wedge: invalid section");
    if (s.modulus() != sec.e)
        throw std::invalid_argument("wedge: left factor must be over Z_" + std::to_string(sec.e));
    if (t.modulus() != sec.n / sec.d)
        throw std::invalid_argument("wedge: right factor must be over Z_" + std::to_string(sec.n / sec.d));
}

// Blocks of s embedded in the order-e subgroup, plus pullbacks of t-blocks lying outside it.
inline GroupPartition wedge_partition(const GroupPartition& s, const GroupPartition& t, residue n, residue d, residue e) {
    const residue step = n / e;
    const residue m = n / d;
    const auto& ls = s.labels();
    const auto& lt = t.labels();
    const std::uint32_t offset = static_cast<std::uint32_t>(s.block_count());
    std::vector<std::uint32_t> raw(n);
    for (residue x = 0; x < n; ++x)
        raw[x] = (x % step == 0) ? ls[x / step] : offset + lt[x % m];
    return GroupPartition::from_labels<std::uint32_t>(n, raw);
}

}  // namespace detail

inline bool wedge_compatible(const SchurRing& s, const SchurRing& t, const Section& sec) {
    detail::check_wedge_orders(s, t, sec);
    const residue k = sec.e / sec.d;
    if (!s.is_s_subgroup(sec.d) || !t.is_s_subgroup(k)) return false;
    return detail::project_modulo(s.partition(), sec.d) == detail::restrict_to(t.partition(), k);
}

inline SchurRing wedge_product(const SchurRing& s, const SchurRing& t, const Section& sec) {
    if (!wedge_compatible(s, t, sec))
        throw std::invalid_argument("wedge_product: factors are not wedge-compatible over [" + std::to_string(sec.d) +
                                    ", " + std::to_string(sec.e) + "]");
    auto w = detail::wedge_partition(s.partition(), t.partition(), sec.n, sec.d, sec.e);
    auto report = verify_schur(w);
    if (!report) throw InternalError("wedge_product: result is not a Schur ring: " + report.message);
    return SchurRing::unchecked(std::move(w));
}

namespace detail {

// Every class lies in the order-e subgroup or is a union of cosets of the order-d subgroup.
inline bool decomposes_over(const GroupPartition& p, residue d, residue e) {
    const residue n = p.modulus();
    const residue in_h = n / e;
    const residue coset_step = n / d;
    const auto& labels = p.labels();
    std::vector<char> bad(p.block_count(), 0);
    for (residue x = 0; x < n; ++x) {
        if (labels[x] != labels[(x + coset_step) % n]) bad[labels[x]] = 1;
    }
    for (residue x = 0; x < n; ++x)
        if (x % in_h != 0 && bad[labels[x]]) return false;
    return true;
}

}  // namespace detail

// The least proper section (ascending d, then e) over which s is wedge-decomposable.
inline std::optional<Section> is_wedge_decomposable(const SchurRing& s) {
    const residue n = s.modulus();
    const auto& divs = s.s_subgroup_divisors();
    for (residue d : divs) {
        if (d == 1 || d == n) continue;
        for (residue e : divs) {
            if (e < d || e == n || e % d != 0) continue;
            if (detail::decomposes_over(s.partition(), d, e)) return Section{n, d, e};
        }
    }
    return std::nullopt;
}

// The largest wedge-indecomposable subring. Every indecomposable S-subgroup is checked to lie
// inside the selected one, which makes the maximum unique.
inline SchurRing wedge_core(const SchurRing& s) {
    std::vector<residue> indecomposable;
    std::optional<SchurRing> best;
    for (residue e : s.s_subgroup_divisors()) {
        auto sub = subring(s, e);
        if (!is_wedge_decomposable(sub)) {
            indecomposable.push_back(e);
            best = std::move(sub);  // divisors ascend, so the last one has maximal order
        }
    }
    const residue top = best->modulus();
    for (residue e : indecomposable)
        if (top % e != 0)
            throw InternalError("wedge_core: indecomposable subrings over orders " + std::to_string(e) + " and " +
                                std::to_string(top) + " are not nested");
    return *best;
}

}  // namespace schur
