#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "golay/analysis.hpp"
#include "golay/construction.hpp"
#include "golay/hadamard.hpp"

namespace golay {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline nlohmann::json matrix_to_json(const ButsonMatrix& h) {
    return nlohmann::json{{"q", h.q()}, {"N", h.size()}, {"exps", h.rows()}};
}

/// Parses and validates; refuses anything that is not a Butson matrix.
inline ButsonMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("N") || !j.contains("exps"))
        throw ParseError("matrix document needs fields q, N, exps");
    const int q = j.at("q").get<int>();
    const int n = j.at("N").get<int>();
    const auto exps = j.at("exps").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(exps.size()) != n) throw ParseError("matrix row count does not match N");
    return ButsonMatrix::verified(q, exps);
}

inline nlohmann::json spec_to_json(const ConstructionSpec& spec) {
    nlohmann::json hs = nlohmann::json::array();
    for (const auto& h : spec.hadamards()) hs.push_back(matrix_to_json(h));
    return nlohmann::json{{"q", spec.q()},
                          {"N", spec.size()},
                          {"n", spec.delay_count()},
                          {"perm", std::vector<int>(spec.perm().begin(), spec.perm().end())},
                          {"hadamards", std::move(hs)}};
}

inline ConstructionSpec spec_from_json(const nlohmann::json& j) {
    for (const char* key : {"q", "N", "n", "perm", "hadamards"})
        if (!j.contains(key)) throw ParseError(std::string("spec document missing field ") + key);
    const int q = j.at("q").get<int>();
    const int n_side = j.at("N").get<int>();
    const int n = j.at("n").get<int>();
    auto perm = j.at("perm").get<std::vector<int>>();
    if (static_cast<int>(perm.size()) != n) throw ParseError("perm length does not match n");
    std::vector<ButsonMatrix> hs;
    for (const auto& hj : j.at("hadamards")) hs.push_back(matrix_from_json(hj));
    ConstructionSpec spec(std::move(perm), std::move(hs));
    if (spec.q() != q || spec.size() != n_side) throw ParseError("spec header disagrees with its matrices");
    return spec;
}

/// Candidate family read back from a set file; complementarity is the caller's
/// question to ask, not a parsing invariant.
struct SequenceFamily {
    int q = 0;
    std::vector<QarySequence> sequences;
    nlohmann::json source;  // echo of the generating spec, when present
};

inline nlohmann::json family_to_json(int q, std::span<const QarySequence> seqs, nlohmann::json source = {}) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : seqs) rows.push_back(s.exps);
    nlohmann::json j{{"q", q},
                     {"N", seqs.size()},
                     {"L", seqs.empty() ? 0 : seqs.front().length()},
                     {"rows", std::move(rows)}};
    if (!source.is_null()) j["source"] = std::move(source);
    return j;
}

inline SequenceFamily family_from_json(const nlohmann::json& j) {
    for (const char* key : {"q", "N", "L", "rows"})
        if (!j.contains(key)) throw ParseError(std::string("set document missing field ") + key);
    SequenceFamily f;
    f.q = j.at("q").get<int>();
    const auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (rows.size() != j.at("N").get<std::size_t>()) throw ParseError("set row count does not match N");
    for (const auto& row : rows) {
        if (row.size() != j.at("L").get<std::size_t>()) throw ParseError("set row length does not match L");
        f.sequences.emplace_back(f.q, row);
    }
    if (j.contains("source")) f.source = j.at("source");
    return f;
}

inline nlohmann::json poly_matrix_to_json(const UnitCoeffPolyMatrix& m, nlohmann::json source = {}) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m.entry(i, j));
        entries.push_back(std::move(row));
    }
    nlohmann::json j{{"q", m.q()}, {"N", m.size()}, {"L", m.length()}, {"entries", std::move(entries)}};
    if (!source.is_null()) j["source"] = std::move(source);
    return j;
}

inline UnitCoeffPolyMatrix poly_matrix_from_json(const nlohmann::json& j) {
    for (const char* key : {"q", "N", "L", "entries"})
        if (!j.contains(key)) throw ParseError(std::string("matrix document missing field ") + key);
    const int q = j.at("q").get<int>();
    const int n = j.at("N").get<int>();
    const auto len = j.at("L").get<std::uint64_t>();
    const auto entries = j.at("entries").get<std::vector<std::vector<std::vector<int>>>>();
    if (static_cast<int>(entries.size()) != n) throw ParseError("entry grid does not match N");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n * len);
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != n) throw ParseError("entry grid does not match N");
        for (const auto& seq : row) {
            if (seq.size() != len) throw ParseError("entry length does not match L");
            flat.insert(flat.end(), seq.begin(), seq.end());
        }
    }
    return UnitCoeffPolyMatrix(q, n, len, std::move(flat));
}

/// Plain-text single-sequence format: "q=<int> L=<int>" on the first line,
/// then L space-separated exponents.
inline std::string sequence_to_text(const QarySequence& a) {
    std::ostringstream out;
    out << "q=" << a.q << " L=" << a.length() << "\n";
    for (std::size_t i = 0; i < a.length(); ++i) out << (i ? " " : "") << a.exps[i];
    out << "\n";
    return out.str();
}

inline QarySequence sequence_from_text(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("empty sequence file");
    int q = 0;
    std::size_t len = 0;
    if (std::sscanf(header.c_str(), "q=%d L=%zu", &q, &len) != 2)
        throw ParseError("sequence header must read \"q=<int> L=<int>\"");
    std::vector<int> exps;
    exps.reserve(len);
    int e;
    while (in >> e) exps.push_back(e);
    if (exps.size() != len) throw ParseError("sequence body does not match the declared length");
    return QarySequence(q, std::move(exps));
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

/// A set file holds one family; a text file holds one sequence. Dispatch on the
/// first non-space byte.
inline SequenceFamily load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    char c = 0;
    while (in.get(c) && (c == ' ' || c == '\n' || c == '\t' || c == '\r')) {
    }
    in.unget();
    if (c == '{') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path + ": " + e.what());
        }
        return family_from_json(j);
    }
    SequenceFamily f;
    QarySequence s = sequence_from_text(in);
    f.q = s.q;
    f.sequences.push_back(std::move(s));
    return f;
}

}  // namespace golay
