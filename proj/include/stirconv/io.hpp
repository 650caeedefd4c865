#pragma once

#include "stirconv/identities.hpp"
#include "stirconv/rational.hpp"
#include "stirconv/series.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace stirconv {

/// On-disk sequence: {"flavor": "EGF"|"OGF", "terms": ["num/den", ...]}.
/// Terms are sequence terms in the flavor's view; serialization is canonical
/// (always rational strings), so parse(serialize(s)) round-trips bytewise.
struct SequenceFile {
    Flavor flavor = Flavor::EGF;
    std::vector<ExactRational> terms;

    friend bool operator==(const SequenceFile& a, const SequenceFile& b) {
        return a.flavor == b.flavor && a.terms == b.terms;
    }
};

inline SequenceFile parse_sequence_file(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sequence file: bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("flavor") || !doc.contains("terms")) {
        throw std::invalid_argument("sequence file: expected {\"flavor\", \"terms\"}");
    }
    SequenceFile out;
    std::string flavor = doc["flavor"].is_string() ? doc["flavor"].get<std::string>() : "";
    if (flavor == "EGF") {
        out.flavor = Flavor::EGF;
    } else if (flavor == "OGF") {
        out.flavor = Flavor::OGF;
    } else {
        throw std::invalid_argument("sequence file: flavor must be \"EGF\" or \"OGF\"");
    }
    if (!doc["terms"].is_array()) throw std::invalid_argument("sequence file: terms must be an array");
    for (const auto& term : doc["terms"]) {
        if (term.is_string()) {
            out.terms.push_back(ExactRational::parse(term.get<std::string>()));
        } else if (term.is_number_integer()) {
            out.terms.push_back(ExactRational(term.get<long long>()));
        } else {
            throw std::invalid_argument("sequence file: terms must be rational strings or integers");
        }
    }
    return out;
}

inline std::string serialize_sequence_file(const SequenceFile& file) {
    nlohmann::ordered_json doc;
    doc["flavor"] = flavor_name(file.flavor);
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const ExactRational& term : file.terms) terms.push_back(term.str());
    doc["terms"] = std::move(terms);
    return doc.dump(2) + "\n";
}

inline Series to_series(const SequenceFile& file) {
    if (file.terms.empty()) throw std::invalid_argument("sequence file: no terms");
    return Series(file.flavor, file.terms.size() - 1, file.terms);
}

inline SequenceFile from_series(const Series& series) {
    return SequenceFile{series.flavor(), series.sequence()};
}

/// Report file: a JSON array of {id, n, p, mu?, z?, lhs, rhs, pass} with all
/// rationals as exact strings.
inline std::string serialize_reports(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const CheckReport& report : reports) {
        nlohmann::ordered_json entry;
        entry["id"] = identity_info(report.instance.id).name;
        entry["n"] = report.instance.n;
        entry["p"] = report.instance.p;
        if (report.instance.mu) entry["mu"] = report.instance.mu->str();
        if (report.instance.z) entry["z"] = report.instance.z->str();
        entry["lhs"] = report.lhs.str();
        entry["rhs"] = report.rhs.str();
        entry["pass"] = report.pass;
        doc.push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

inline std::string csv_join(const std::vector<ExactRational>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) line += ',';
        line += values[i].str();
    }
    return line;
}

inline std::string csv_join(const std::vector<ExactInt>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) line += ',';
        line += values[i].str();
    }
    return line;
}

}  // namespace stirconv
