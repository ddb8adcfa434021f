#pragma once

// Serialisation: compositions, families, fields, polynomials, codes, bound
// results and reports as JSON (nlohmann), CSV rows, and the plain-text code
// file format
//
//     n q [d] [r]
//     s_1 s_2 ... s_n
//     ...
//
// Counts are written as decimal strings so that no precision is lost.

#include "symwt/bounds.hpp"
#include "symwt/codes.hpp"
#include "symwt/compositions.hpp"
#include "symwt/finite_field.hpp"
#include "symwt/reed_solomon.hpp"
#include "symwt/spaces.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace symwt {

using Json = nlohmann::ordered_json;

inline constexpr int json_schema_version = 1;

inline Json to_json(const Composition& c) { return Json(std::vector<int>(c.parts().begin(), c.parts().end())); }

inline Composition composition_from_json(const Json& j) {
    if (j.is_string()) return parse_exponential(j.get<std::string>());
    return Composition(j.get<std::vector<int>>());
}

inline Json to_json(const CompositionFamily& f) {
    static const char* kinds[] = {"all", "exact-weight", "bounded-weight", "anticode"};
    Json members = Json::array();
    for (const auto& m : f.members) members.push_back(to_json(m));
    return Json{{"n", f.n}, {"q", f.q}, {"kind", kinds[static_cast<int>(f.kind)]}, {"r", f.r}, {"d", f.d},
                {"size", f.size()}, {"members", members}};
}

inline Json to_json(const Field& F) {
    return Json{{"p", F.characteristic()}, {"m", F.degree()}, {"modulus", F.modulus()}};
}

inline Json to_json(const Polynomial& f) {
    std::vector<std::uint32_t> c;
    for (const auto e : f.coefficients()) c.push_back(e.value);
    return Json(c);
}

inline Polynomial polynomial_from_json(const Json& j, const Field& F) {
    std::vector<Element> c;
    for (const auto v : j.get<std::vector<std::uint32_t>>()) c.push_back(F.element(v));
    return Polynomial(std::move(c));
}

inline std::string rate_string(double v) {
    if (std::isnan(v)) return "";
    std::ostringstream o;
    o.precision(12);
    o << v;
    return o.str();
}

inline Json to_json(const BoundResult& b) {
    Json in{{"n", b.inputs.n}, {"q", b.inputs.q}, {"d", b.inputs.d}, {"r", b.inputs.r}, {"mode", to_string(b.inputs.mode)}};
    if (!std::isnan(b.inputs.rho)) in["rho"] = b.inputs.rho;
    if (!std::isnan(b.inputs.delta)) in["delta"] = b.inputs.delta;
    Json j{{"provenance", b.provenance}, {"direction", to_string(b.direction)}, {"kind", to_string(b.kind)}};
    if (b.kind == ValueKind::exact_size)
        j["value"] = b.value.str();
    else
        j["rate"] = b.rate;
    j["exact"] = b.exact;
    if (b.clamped) j["clamped"] = true;
    j["inputs"] = in;
    if (!b.breakdown.empty()) j["breakdown"] = b.breakdown;
    return j;
}

inline Json to_json(const SizeRow& row) {
    Json j{{"n", row.spec.n}, {"q", row.spec.q}, {"r", row.spec.r}, {"mode", to_string(row.spec.mode)}, {"size", row.size.str()}};
    j["rate"] = std::isnan(row.rate) ? Json(nullptr) : Json(row.rate);
    return j;
}

inline std::string size_csv_header() { return "n,q,r,mode,size,rate"; }

inline std::string to_csv(const SizeRow& row) {
    std::ostringstream o;
    o << row.spec.n << ',' << row.spec.q << ',' << row.spec.r << ',' << to_string(row.spec.mode) << ',' << row.size.str() << ','
      << rate_string(row.rate);
    return o.str();
}

inline std::string bound_csv_header() { return "provenance,direction,kind,value,exact,n,q,d,r,mode,rho,delta"; }

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string to_csv(const BoundResult& b) {
    std::ostringstream o;
    o << csv_quote(b.provenance) << ',' << to_string(b.direction) << ',' << to_string(b.kind) << ','
      << (b.kind == ValueKind::exact_size ? b.value.str() : rate_string(b.rate)) << ',' << (b.exact ? "true" : "false") << ','
      << b.inputs.n << ',' << b.inputs.q << ',' << b.inputs.d << ',' << b.inputs.r << ',' << to_string(b.inputs.mode) << ','
      << rate_string(b.inputs.rho) << ',' << rate_string(b.inputs.delta);
    return o.str();
}

inline std::string to_csv(const CurveTable& t) {
    std::ostringstream o;
    for (std::size_t i = 0; i < t.columns.size(); ++i) o << (i ? "," : "") << t.columns[i];
    o << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) o << (i ? "," : "") << rate_string(row[i]);
        o << '\n';
    }
    return o.str();
}

inline Json to_json(const ConjectureReport& r) {
    Json recs = Json::array();
    for (const auto& rec : r.records) {
        Json j{{"g", to_json(rec.g)}, {"status", rec.success ? "success" : "failure"}, {"subsets_tried", rec.subsets_tried}};
        if (rec.success) j["witness"] = rec.witness;
        recs.push_back(j);
    }
    Json j{{"q", r.q}, {"k", r.k}, {"r", r.r}, {"in_range", r.in_range}, {"polynomials", r.polynomials},
           {"successes", r.successes}, {"failures", r.failures}};
    if (r.skipped) j["skipped"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    j["records"] = recs;
    return j;
}

// ---------------------------------------------------------------------------
// Code files

/// A code plus the parameters its header claims.
struct CodeFile {
    Code code;
    std::optional<int> d;
    std::optional<int> r;
};

inline void write_code(std::ostream& out, const Code& c, std::optional<int> d = std::nullopt, std::optional<int> r = std::nullopt) {
    out << c.length() << ' ' << c.alphabet();
    if (d || r) out << ' ' << (d ? *d : 0);
    if (r) out << ' ' << *r;
    out << '\n';
    for (const auto& w : c.words()) {
        for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
        out << '\n';
    }
}

/// Reads the text format. A header value of 0 for d means "not stated".
inline CodeFile read_code(std::istream& in) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("code file is empty");
    std::istringstream hdr(line);
    std::vector<long> h;
    long v = 0;
    while (hdr >> v) h.push_back(v);
    if (!hdr.eof() || h.size() < 2 || h.size() > 4) throw std::invalid_argument("code file header must be 'n q [d] [r]'");
    const int n = static_cast<int>(h[0]), q = static_cast<int>(h[1]);
    std::optional<int> d, r;
    if (h.size() >= 3 && h[2] > 0) d = static_cast<int>(h[2]);
    if (h.size() == 4) r = static_cast<int>(h[3]);
    std::vector<Word> words;
    while (next_line()) {
        std::istringstream ls(line);
        Word w;
        long s = 0;
        while (ls >> s) {
            if (s < 0) throw std::invalid_argument("negative symbol in code file");
            w.push_back(static_cast<Symbol>(s));
        }
        if (!ls.eof()) throw std::invalid_argument("non-numeric token in code file");
        words.push_back(std::move(w));
    }
    if (words.empty()) throw std::invalid_argument("code file has no words");
    return {Code(n, q, std::move(words)), d, r};
}

inline Json to_json(const Code& c) {
    Json words = Json::array();
    for (const auto& w : c.words()) words.push_back(w);
    return Json{{"schema", json_schema_version}, {"n", c.length()}, {"q", c.alphabet()}, {"size", c.size()}, {"words", words}};
}

inline Code code_from_json(const Json& j) {
    std::vector<Word> words;
    for (const auto& w : j.at("words")) words.push_back(w.get<Word>());
    return Code(j.at("n").get<int>(), j.at("q").get<int>(), std::move(words));
}

}  // namespace symwt
