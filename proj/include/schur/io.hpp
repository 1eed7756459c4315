#pragma once

// JSON ring documents: {"n": int, "classes": [[int, ...], ...]} with classes in canonical
// order, optionally followed by "classification" and "structure_constants" blocks.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "enumerator.hpp"
#include "errors.hpp"
#include "partition.hpp"

namespace schur {

using json = nlohmann::ordered_json;

inline json classes_json(const GroupPartition& p) {
    json classes = json::array();
    for (auto& block : p.block_members()) classes.push_back(block);
    return classes;
}

inline json classification_json(const Classification& c) {
    json out;
    out["families"] = c.families();
    out["trivial"] = c.is_trivial;
    out["discrete"] = c.is_discrete;
    out["primitive"] = c.is_primitive;
    out["automorphic"] = c.is_automorphic;
    out["direct_decomposable"] = c.is_direct_decomposable;
    out["direct_factors"] =
        c.direct_factors ? json::array({c.direct_factors->first, c.direct_factors->second}) : json(nullptr);
    out["wedge_decomposable"] = c.is_wedge_decomposable;
    out["wedge_section"] = c.wedge_section ? json::array({c.wedge_section->d, c.wedge_section->e}) : json(nullptr);
    out["core_order"] = c.core_order;
    return out;
}

inline json structure_constants_json(const StructureConstants& sc) {
    json out = json::array();
    for (std::size_t i = 0; i < sc.rank; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < sc.rank; ++j) {
            json cell = json::array();
            for (std::size_t k = 0; k < sc.rank; ++k) cell.push_back(sc.at(i, j, k));
            row.push_back(std::move(cell));
        }
        out.push_back(std::move(row));
    }
    return out;
}

struct DocumentOptions {
    bool classify = false;
    bool constants = false;
};

inline json ring_document(const SchurRing& s, DocumentOptions opts = {}) {
    json doc;
    doc["n"] = s.modulus();
    doc["classes"] = classes_json(s.partition());
    if (opts.classify) doc["classification"] = classification_json(classify(s));
    if (opts.constants) doc["structure_constants"] = structure_constants_json(structure_constants(s));
    return doc;
}

// Reads the partition out of a document. Shape errors and non-partitions raise ParseError.
inline GroupPartition parse_ring_document(const json& doc) {
    if (!doc.is_object()) throw ParseError("ring document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 1)
        throw ParseError("ring document needs a positive integer \"n\"");
    const auto n64 = doc["n"].get<std::int64_t>();
    if (n64 > static_cast<std::int64_t>(max_modulus)) throw ParseError("\"n\" is too large");
    const auto n = static_cast<residue>(n64);
    if (!doc.contains("classes") || !doc["classes"].is_array()) throw ParseError("ring document needs a \"classes\" array");
    const auto& classes = doc["classes"];
    if (classes.empty()) throw ParseError("\"classes\" is empty");
    std::vector<std::vector<residue>> blocks;
    for (const auto& cls : classes) {
        if (!cls.is_array() || cls.empty()) throw ParseError("each class must be a non-empty array of residues");
        std::vector<residue> members;
        for (const auto& v : cls) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                throw ParseError("class members must be non-negative integers");
            members.push_back(static_cast<residue>(std::min<std::int64_t>(v.get<std::int64_t>(), max_modulus)));
        }
        blocks.push_back(std::move(members));
    }
    try {
        return canonicalize(n, blocks);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

// Accepts a JSON array of documents, a single document, or one document per line.
inline std::vector<GroupPartition> parse_ring_documents(std::string_view text) {
    std::vector<GroupPartition> out;
    try {
        auto whole = json::parse(text);
        if (whole.is_array()) {
            for (const auto& doc : whole) out.push_back(parse_ring_document(doc));
        } else {
            out.push_back(parse_ring_document(whole));
        }
        return out;
    } catch (const json::parse_error&) {
    }
    std::istringstream lines{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(parse_ring_document(json::parse(line)));
        } catch (const json::parse_error& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) throw ParseError("no ring documents found");
    return out;
}

}  // namespace schur
