#pragma once

// Omega(n) tables checked against the reference counts.

#include <algorithm>
#include <atomic>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "enumerator.hpp"
#include "errors.hpp"
#include "reference_table.hpp"

namespace schur {

struct OmegaRecord {
    residue n = 1;
    std::optional<std::uint64_t> omega;  // empty when skipped
    std::string method = "enumerated";
    std::optional<std::uint64_t> reference;
    std::optional<bool> reference_match;

    bool skipped() const noexcept { return !omega.has_value(); }
    bool mismatch() const noexcept { return reference_match.has_value() && !*reference_match; }
};

struct TableSummary {
    std::size_t rows = 0, computed = 0, skipped = 0, mismatches = 0;
};

inline TableSummary summarize(const std::vector<OmegaRecord>& records) {
    TableSummary s;
    s.rows = records.size();
    for (const auto& r : records) {
        if (r.skipped()) ++s.skipped;
        else ++s.computed;
        if (r.mismatch()) ++s.mismatches;
    }
    return s;
}

inline OmegaRecord omega_record(Enumerator& en, residue n) {
    OmegaRecord rec;
    rec.n = n;
    rec.reference = reference_omega(n);
    try {
        rec.omega = en.omega(n);
    } catch (const BudgetExceeded&) {
        rec.method = "skipped";
        return rec;
    }
    if (rec.reference) rec.reference_match = (*rec.reference == *rec.omega);
    return rec;
}

// Rows for n = from .. to. Worker threads share one memo; rows come back in ascending n.
inline std::vector<OmegaRecord> compute_table(residue from, residue to, Enumerator& en, unsigned jobs = 1) {
    if (from < 1 || from > to) throw std::invalid_argument("table: need 1 <= from <= to");
    std::vector<OmegaRecord> records(to - from + 1);
    std::atomic<residue> next{from};
    auto work = [&] {
        for (residue n = next++; n <= to; n = next++) records[n - from] = omega_record(en, n);
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return records;
}

inline std::vector<OmegaRecord> compute_table(residue from, residue to, EnumerationOptions options = {},
                                              unsigned jobs = 1) {
    Enumerator en(options);
    return compute_table(from, to, en, jobs);
}

inline std::string render_csv(const std::vector<OmegaRecord>& records) {
    std::ostringstream out;
    out << "n,omega,method,reference,match\n";
    for (const auto& r : records) {
        out << r.n << ',';
        if (r.omega) out << *r.omega;
        out << ',' << r.method << ',';
        if (r.reference) out << *r.reference;
        out << ',';
        if (r.skipped()) out << "SKIPPED";
        else if (r.reference_match) out << (*r.reference_match ? "MATCH" : "MISMATCH");
        out << '\n';
    }
    auto s = summarize(records);
    out << "# rows=" << s.rows << " computed=" << s.computed << " skipped=" << s.skipped
        << " mismatches=" << s.mismatches << '\n';
    return out.str();
}

inline std::string render_json(const std::vector<OmegaRecord>& records) {
    std::ostringstream out;
    out << "{\"rows\":[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (i) out << ',';
        out << "\n{\"n\":" << r.n << ",\"omega\":" << (r.omega ? std::to_string(*r.omega) : "null")
            << ",\"method\":\"" << r.method << "\",\"reference\":"
            << (r.reference ? std::to_string(*r.reference) : "null") << ",\"match\":";
        if (r.skipped()) out << "\"SKIPPED\"";
        else if (r.reference_match) out << (*r.reference_match ? "\"MATCH\"" : "\"MISMATCH\"");
        else out << "null";
        out << '}';
    }
    auto s = summarize(records);
    out << "\n],\"summary\":{\"rows\":" << s.rows << ",\"computed\":" << s.computed << ",\"skipped\":" << s.skipped
        << ",\"mismatches\":" << s.mismatches << "}}\n";
    return out.str();
}

}  // namespace schur
