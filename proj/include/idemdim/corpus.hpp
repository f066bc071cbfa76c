#pragma once

#include <fstream>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "idemdim/scalar.hpp"

namespace idemdim {

// Structural parse of a finite-semiring table file: fields `carrier`
// (array of labels), `add` / `mul` (square arrays of labels), `zero`,
// `one` (labels), optional `name`.  Axioms are NOT checked here.
inline FiniteSemiring parse_finite_semiring(const nlohmann::json& j,
                                            const std::string& fallback_name = "table") {
    FiniteSemiring F;
    F.name = j.value("name", fallback_name);
    if (!j.contains("carrier") || !j["carrier"].is_array())
        throw MalformedTable("missing carrier array");
    for (const auto& e : j["carrier"]) {
        if (!e.is_string()) throw MalformedTable("carrier labels must be strings");
        F.carrier.push_back(e.get<std::string>());
    }
    const int n = F.size();
    if (n == 0) throw MalformedTable("empty carrier");
    if (n > kValidationCap)
        throw CarrierCap(F.name + " has " + std::to_string(n) + " elements, validation cap " +
                         std::to_string(kValidationCap));
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            if (F.carrier[i] == F.carrier[k])
                throw MalformedTable("duplicate label '" + F.carrier[i] + "'");

    auto read_table = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != n)
            throw MalformedTable(std::string(key) + " table is not " + std::to_string(n) +
                                 " rows");
        std::vector<std::vector<int>> t;
        for (const auto& row : j[key]) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw MalformedTable(std::string(key) + " table is not square");
            std::vector<int> r;
            for (const auto& cell : row) {
                if (!cell.is_string()) throw MalformedTable("table entries must be labels");
                r.push_back(F.index_of(cell.get<std::string>()));
            }
            t.push_back(std::move(r));
        }
        return t;
    };
    F.add = read_table("add");
    F.mul = read_table("mul");
    if (!j.contains("zero") || !j.contains("one")) throw MalformedTable("missing zero/one");
    F.zero = F.index_of(j["zero"].get<std::string>());
    F.one = F.index_of(j["one"].get<std::string>());
    return F;
}

struct LoadResult {
    FiniteSemiringPtr semiring;  // set iff report.passed
    AxiomReport report;
};

// Parse + exhaustive axiom validation.  A failed axiom yields a report
// with one witness per violated axiom rather than an exception.
inline LoadResult load_finite_semiring(const nlohmann::json& j,
                                       const std::string& fallback_name = "table") {
    FiniteSemiring F = parse_finite_semiring(j, fallback_name);
    LoadResult res;
    res.report = F.validate();
    if (res.report.passed) res.semiring = std::make_shared<const FiniteSemiring>(std::move(F));
    return res;
}

inline LoadResult load_finite_semiring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedTable("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedTable(path + ": " + e.what());
    }
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos) name = name.substr(0, dot);
    return load_finite_semiring(j, name);
}

// Convenience for tests and chain construction: load or throw.
inline FiniteSemiringPtr require_finite_semiring(const std::string& path) {
    LoadResult res = load_finite_semiring_file(path);
    if (!res.report.passed) {
        std::string msg = path + " violates:";
        for (const auto& v : res.report.violations) {
            msg += " " + v.axiom + "(";
            for (std::size_t i = 0; i < v.witness.size(); ++i)
                msg += (i ? "," : "") + v.witness[i];
            msg += ")";
        }
        throw MalformedTable(msg);
    }
    return res.semiring;
}

}  // namespace idemdim
