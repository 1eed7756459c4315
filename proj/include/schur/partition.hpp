#pragma once

// Partitions of Z_n, the Schur ring axioms, and the subring / quotient / pullback maps.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "group.hpp"

namespace schur {

using block_label = std::uint16_t;

inline constexpr residue max_modulus = std::numeric_limits<block_label>::max();

// A partition of Z_n in canonical form.
//
// Stored as a label array: labels()[x] is the index of the block containing x. Blocks are
// numbered in order of their minimum element, so equal partitions have equal label arrays
// and the array doubles as the hashable flat encoding.
class GroupPartition {
   public:
    GroupPartition() : n_(1), labels_{0}, block_count_(1) {}

    // Relabels an arbitrary block assignment into canonical form.
    template <class Label>
    static GroupPartition from_labels(residue n, std::span<const Label> raw) {
        if (n == 0 || n > max_modulus) throw std::invalid_argument("GroupPartition: modulus out of range");
        if (raw.size() != n) throw std::invalid_argument("GroupPartition: label array has wrong length");
        GroupPartition p;
        p.n_ = n;
        p.labels_.assign(n, 0);
        std::vector<std::pair<Label, block_label>> seen;  // small maps are faster than hashing here
        std::vector<block_label> remap;
        Label max_raw = 0;
        for (auto l : raw) max_raw = std::max(max_raw, l);
        if (static_cast<std::uint64_t>(max_raw) < 4u * n + 16u) {
            remap.assign(static_cast<std::size_t>(max_raw) + 1, std::numeric_limits<block_label>::max());
            block_label next = 0;
            for (residue x = 0; x < n; ++x) {
                auto& slot = remap[static_cast<std::size_t>(raw[x])];
                if (slot == std::numeric_limits<block_label>::max()) slot = next++;
                p.labels_[x] = slot;
            }
            p.block_count_ = next;
        } else {
            block_label next = 0;
            for (residue x = 0; x < n; ++x) {
                auto it = std::find_if(seen.begin(), seen.end(), [&](auto& e) { return e.first == raw[x]; });
                if (it == seen.end()) {
                    seen.emplace_back(raw[x], next);
                    p.labels_[x] = next++;
                } else {
                    p.labels_[x] = it->second;
                }
            }
            p.block_count_ = next;
        }
        return p;
    }

    static GroupPartition from_labels(residue n, const std::vector<block_label>& raw) {
        return from_labels<block_label>(n, std::span<const block_label>(raw));
    }

    residue modulus() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return block_count_; }
    block_label label_of(residue x) const { return labels_.at(x); }
    const std::vector<block_label>& labels() const noexcept { return labels_; }

    std::vector<std::vector<residue>> block_members() const {
        std::vector<std::vector<residue>> out(block_count_);
        for (residue x = 0; x < n_; ++x) out[labels_[x]].push_back(x);
        return out;
    }

    std::vector<ElementSet> blocks() const {
        std::vector<ElementSet> out;
        out.reserve(block_count_);
        for (auto& m : block_members()) out.emplace_back(n_, std::move(m));
        return out;
    }

    ElementSet block(std::size_t i) const {
        std::vector<residue> m;
        for (residue x = 0; x < n_; ++x)
            if (labels_[x] == i) m.push_back(x);
        return ElementSet(n_, std::move(m));
    }

    std::vector<std::size_t> block_sizes() const {
        std::vector<std::size_t> sizes(block_count_, 0);
        for (auto l : labels_) ++sizes[l];
        return sizes;
    }

    std::size_t hash() const noexcept {
        std::string_view bytes(reinterpret_cast<const char*>(labels_.data()), labels_.size() * sizeof(block_label));
        return std::hash<std::string_view>{}(bytes) ^ (static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL);
    }

    friend bool operator==(const GroupPartition& a, const GroupPartition& b) {
        return a.n_ == b.n_ && a.labels_ == b.labels_;
    }
    friend std::strong_ordering operator<=>(const GroupPartition& a, const GroupPartition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.labels_.begin(), a.labels_.end(), b.labels_.begin(),
                                                      b.labels_.end());
    }

   private:
    residue n_;
    std::vector<block_label> labels_;
    std::size_t block_count_;
};

struct PartitionHash {
    std::size_t operator()(const GroupPartition& p) const noexcept { return p.hash(); }
};

// Builds the canonical partition from explicit blocks; rejects overlaps, gaps, and
// out-of-range residues, naming the offending residue.
inline GroupPartition canonicalize(residue n, const std::vector<std::vector<residue>>& raw_blocks) {
    if (n == 0 || n > max_modulus) throw std::invalid_argument("canonicalize: modulus out of range");
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> owner(n, unset);
    for (std::uint32_t b = 0; b < raw_blocks.size(); ++b) {
        if (raw_blocks[b].empty()) throw std::invalid_argument("canonicalize: block " + std::to_string(b) + " is empty");
        for (residue x : raw_blocks[b]) {
            if (x >= n)
                throw std::invalid_argument("canonicalize: residue " + std::to_string(x) + " is out of range for n = " +
                                            std::to_string(n));
            if (owner[x] != unset)
                throw std::invalid_argument("canonicalize: residue " + std::to_string(x) + " appears in more than one block");
            owner[x] = b;
        }
    }
    for (residue x = 0; x < n; ++x)
        if (owner[x] == unset) throw std::invalid_argument("canonicalize: residue " + std::to_string(x) + " is not covered");
    return GroupPartition::from_labels<std::uint32_t>(n, owner);
}

inline GroupPartition canonicalize(const GroupPartition& p) { return p; }

inline ElementSet inverse_set(const ElementSet& c) {
    const residue n = c.modulus();
    std::vector<residue> out;
    out.reserve(c.size());
    for (residue x : c) out.push_back((n - x) % n);
    return ElementSet(n, std::move(out));
}

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

struct VerificationReport {
    bool accepted = true;
    int axiom = 0;  // 1, 2 or 3 when rejected
    std::size_t block = 0;
    std::size_t other_block = 0;
    residue element = 0;
    std::string message;

    explicit operator bool() const noexcept { return accepted; }
};

namespace detail {

// Convolution counts of blocks i and j: out[x] = |{(u, v) in Ci x Cj : u + v = x}|.
inline void convolve(residue n, const std::vector<residue>& ci, const std::vector<residue>& cj,
                     std::vector<std::uint32_t>& out) {
    std::fill(out.begin(), out.end(), 0);
    for (residue u : ci)
        for (residue v : cj) {
            residue s = u + v;
            if (s >= n) s -= n;
            ++out[s];
        }
}

}  // namespace detail

inline VerificationReport verify_schur(const GroupPartition& p) {
    const residue n = p.modulus();
    const auto& labels = p.labels();
    const auto blocks = p.block_members();
    VerificationReport report;

    if (blocks[labels[0]].size() != 1) {
        report = {false, 1, labels[0], labels[0], blocks[labels[0]][1], ""};
        report.message = "axiom 1: the block containing 0 also contains " + std::to_string(report.element);
        return report;
    }

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& c = blocks[i];
        const block_label target = labels[(n - c.front()) % n];
        for (residue x : c) {
            residue inv = (n - x) % n;
            if (labels[inv] != target || blocks[target].size() != c.size()) {
                report = {false, 2, i, target, x, ""};
                report.message = "axiom 2: the inverse of block " + std::to_string(i) + " is not a block (element " +
                                 std::to_string(x) + ")";
                return report;
            }
        }
    }

    std::vector<std::uint32_t> counts(n);
    std::vector<std::uint32_t> first(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i; j < blocks.size(); ++j) {
            detail::convolve(n, blocks[i], blocks[j], counts);
            for (std::size_t k = 0; k < blocks.size(); ++k) first[k] = counts[blocks[k].front()];
            for (residue x = 0; x < n; ++x) {
                if (counts[x] != first[labels[x]]) {
                    report = {false, 3, i, j, x, ""};
                    report.message = "axiom 3: product of blocks " + std::to_string(i) + " and " + std::to_string(j) +
                                     " is not constant on the block of " + std::to_string(x);
                    return report;
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// S-subgroups
// ---------------------------------------------------------------------------

// Divisors d of n whose subgroup of order d is a union of blocks.
inline std::vector<residue> s_subgroup_divisors(const GroupPartition& p) {
    const residue n = p.modulus();
    const auto sizes = p.block_sizes();
    const auto& labels = p.labels();
    std::vector<residue> out;
    std::vector<char> used(p.block_count(), 0);
    for (residue d : divisors(n)) {
        const residue step = n / d;
        std::fill(used.begin(), used.end(), 0);
        std::size_t covered = 0;
        for (residue x = 0; x < n; x += step) {
            auto l = labels[x];
            if (!used[l]) {
                used[l] = 1;
                covered += sizes[l];
            }
        }
        if (covered == d) out.push_back(d);
    }
    return out;
}

// A partition of Z_n known to satisfy the Schur ring axioms, with its S-subgroup lattice.
class SchurRing {
   public:
    SchurRing() : s_divisors_{1} {}

    // Verifies the axioms; throws std::invalid_argument carrying the report message on failure.
    static SchurRing from_partition(GroupPartition p) {
        auto report = verify_schur(p);
        if (!report) throw std::invalid_argument(report.message);
        return unchecked(std::move(p));
    }

    // For partitions that are Schur rings by construction.
    static SchurRing unchecked(GroupPartition p) {
        SchurRing s;
        s.s_divisors_ = schur::s_subgroup_divisors(p);
        s.partition_ = std::move(p);
        return s;
    }

    const GroupPartition& partition() const noexcept { return partition_; }
    residue modulus() const noexcept { return partition_.modulus(); }
    std::size_t rank() const noexcept { return partition_.block_count(); }
    const std::vector<residue>& s_subgroup_divisors() const noexcept { return s_divisors_; }
    bool is_s_subgroup(residue d) const {
        return std::binary_search(s_divisors_.begin(), s_divisors_.end(), d);
    }
    bool is_primitive() const noexcept { return s_divisors_.size() <= 2; }

    friend bool operator==(const SchurRing& a, const SchurRing& b) { return a.partition_ == b.partition_; }
    friend auto operator<=>(const SchurRing& a, const SchurRing& b) { return a.partition_ <=> b.partition_; }

   private:
    GroupPartition partition_;
    std::vector<residue> s_divisors_;
};

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

struct StructureConstants {
    std::size_t rank = 0;
    std::vector<std::uint64_t> table;  // row-major [i][j][k]

    std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const { return table[(i * rank + j) * rank + k]; }
};

inline StructureConstants structure_constants(const SchurRing& s) {
    const auto& p = s.partition();
    const residue n = p.modulus();
    const auto blocks = p.block_members();
    const std::size_t r = blocks.size();
    StructureConstants sc{r, std::vector<std::uint64_t>(r * r * r, 0)};
    std::vector<std::uint32_t> counts(n);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            detail::convolve(n, blocks[i], blocks[j], counts);
            for (std::size_t k = 0; k < r; ++k) {
                for (residue x : blocks[k])
                    if (counts[x] != counts[blocks[k].front()])
                        throw InternalError("structure_constants: product of blocks " + std::to_string(i) + " and " +
                                            std::to_string(j) + " is not constant on block " + std::to_string(k));
                sc.table[(i * r + j) * r + k] = counts[blocks[k].front()];
            }
        }
    }
    return sc;
}

// ---------------------------------------------------------------------------
// Subrings, quotients, pullbacks
// ---------------------------------------------------------------------------

namespace detail {

// Blocks inside the order-e subgroup, re-indexed to Z_e by dividing by n/e.
inline GroupPartition restrict_to(const GroupPartition& p, residue e) {
    const residue step = p.modulus() / e;
    std::vector<block_label> raw(e);
    for (residue t = 0; t < e; ++t) raw[t] = p.labels()[t * step];
    return GroupPartition::from_labels(e, raw);
}

// Image of the partition under Z_n -> Z_{n/d}, merging blocks whose images meet.
inline GroupPartition project_modulo(const GroupPartition& p, residue d) {
    const residue n = p.modulus();
    const residue m = n / d;
    const auto& labels = p.labels();
    std::vector<std::uint32_t> parent(p.block_count());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (residue x = m; x < n; ++x) {
        auto a = find(labels[x]), b = find(labels[x % m]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::uint32_t> raw(m);
    for (residue y = 0; y < m; ++y) raw[y] = find(labels[y]);
    return GroupPartition::from_labels<std::uint32_t>(m, raw);
}

}  // namespace detail

inline SchurRing subring(const SchurRing& s, residue e) {
    if (!s.is_s_subgroup(e))
        throw std::invalid_argument("subring: " + std::to_string(e) + " is not an S-subgroup order");
    return SchurRing::unchecked(detail::restrict_to(s.partition(), e));
}

inline SchurRing quotient(const SchurRing& s, residue d) {
    if (!s.is_s_subgroup(d))
        throw std::invalid_argument("quotient: " + std::to_string(d) + " is not an S-subgroup order");
    auto q = detail::project_modulo(s.partition(), d);
    auto report = verify_schur(q);
    if (!report) throw InternalError("quotient: image is not a Schur ring: " + report.message);
    return SchurRing::unchecked(std::move(q));
}

// Preimage of T under Z_n -> Z_{n/d}; the block of 0 is the whole order-d subgroup.
inline GroupPartition pullback(residue n, residue d, const SchurRing& t) {
    if (d == 0 || n % d != 0)
        throw std::invalid_argument("pullback: " + std::to_string(d) + " does not divide " + std::to_string(n));
    const residue m = n / d;
    if (t.modulus() != m) throw std::invalid_argument("pullback: ring is not over Z_" + std::to_string(m));
    std::vector<block_label> raw(n);
    for (residue x = 0; x < n; ++x) raw[x] = t.partition().labels()[x % m];
    return GroupPartition::from_labels(n, raw);
}

}  // namespace schur
