#ifndef HOMCOAL_BUNDLE_HPP
#define HOMCOAL_BUNDLE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <homcoal/structures.hpp>

namespace homcoal {

/**
 * Bundle document, format_version "1". JSON with a fixed schema:
 *
 *   {
 *     "dimension": n,
 *     "flavor": "lie" | "coassociative" | "pre_lie" | "unchecked" |
 *               "lie_algebra" | "associative_algebra" | "coder_comodule",
 *     "format_version": "1",
 *     "lambda": "p/q",             // only with "R"
 *     "matrices": { ... },
 *     "metadata": { "key": "note", ... },
 *     "module_dimension": m        // only for coder_comodule
 *   }
 *
 * Every matrix is image-major: row j lists the coordinates of the image of
 * basis vector j, so "delta" has n rows of n^2 entries, "mu" has n^2 rows of
 * n entries, "alpha"/"phi"/"R"/"T" are n x n, "rho" has m rows of n*m
 * entries, "beta"/"phi_m" are m x m. Entries are strings "p" or "p/q" with
 * q > 0; values canonicalize to reduced form. Missing "delta"/"mu" mean the
 * zero map and missing "alpha"/"beta" the identity.
 *
 * The canonical text form is nlohmann's sorted-key dump at indent 2 plus a
 * trailing newline; serialize(parse(text)) is byte-identical to the
 * canonical form of text.
 */

namespace io_detail {

using json = nlohmann::json;

inline LinMap matrix_from_json(const json& rows, const TensorSpace& domain,
                               const TensorSpace& codomain, const std::string& field) {
    if (!rows.is_array() || static_cast<long long>(rows.size()) != domain.dim())
        throw parse_error("matrices." + field + ": expected " + std::to_string(domain.dim()) +
                          " rows");
    std::vector<std::vector<Rational>> cols;
    cols.reserve(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const json& row = rows[j];
        if (!row.is_array() || static_cast<long long>(row.size()) != codomain.dim())
            throw parse_error("matrices." + field + "[" + std::to_string(j) + "]: expected " +
                              std::to_string(codomain.dim()) + " entries");
        std::vector<Rational> col;
        col.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (!row[k].is_string())
                throw parse_error("matrices." + field + "[" + std::to_string(j) + "][" +
                                  std::to_string(k) + "]: entries must be rational strings");
            try {
                col.push_back(parse_rational(row[k].get<std::string>()));
            } catch (const parse_error& e) {
                throw parse_error("matrices." + field + "[" + std::to_string(j) + "][" +
                                  std::to_string(k) + "]: " + e.what());
            }
        }
        cols.push_back(std::move(col));
    }
    return LinMap::from_columns(domain, codomain, cols);
}

inline json matrix_to_json(const LinMap& m) {
    json rows = json::array();
    for (long long j = 0; j < m.domain().dim(); ++j) {
        json row = json::array();
        for (const Rational& x : m.column_dense(j)) row.push_back(rational_to_string(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace io_detail

inline StructureBundle parse_bundle(const std::string& text) {
    namespace nj = nlohmann;
    nj::json doc;
    try {
        doc = nj::json::parse(text);
    } catch (const nj::json::parse_error& e) {
        throw parse_error(std::string("document is not well-formed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("document root must be an object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "dimension" && key != "flavor" && key != "format_version" &&
            key != "lambda" && key != "matrices" && key != "metadata" &&
            key != "module_dimension")
            throw parse_error("unknown field '" + key + "'");
    }
    if (!doc.contains("format_version") || !doc["format_version"].is_string())
        throw parse_error("format_version: missing or not a string");
    if (doc["format_version"].get<std::string>() != "1")
        throw parse_error("format_version: unsupported version '" +
                          doc["format_version"].get<std::string>() + "' (expected \"1\")");
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
        throw parse_error("dimension: missing or not an integer");
    const int n = doc["dimension"].get<int>();
    if (n <= 0) throw parse_error("dimension: must be positive");
    if (!doc.contains("flavor") || !doc["flavor"].is_string())
        throw parse_error("flavor: missing or not a string");

    StructureBundle b;
    b.dimension = n;
    try {
        b.flavor = flavor_from_name(doc["flavor"].get<std::string>());
    } catch (const argument_error& e) {
        throw parse_error(std::string("flavor: ") + e.what());
    }

    if (doc.contains("module_dimension")) {
        if (b.flavor != BundleFlavor::coder_comodule)
            throw parse_error("module_dimension: only valid for flavor coder_comodule");
        if (!doc["module_dimension"].is_number_integer() ||
            doc["module_dimension"].get<int>() <= 0)
            throw parse_error("module_dimension: must be a positive integer");
        b.module_dim = doc["module_dimension"].get<int>();
    } else if (b.flavor == BundleFlavor::coder_comodule) {
        throw parse_error("module_dimension: required for flavor coder_comodule");
    }

    const TensorSpace L = TensorSpace::line(n);
    const TensorSpace LL = L.tensor(L);
    const bool algebra_side = !is_coalgebra_flavor(b.flavor);
    if (doc.contains("matrices")) {
        const auto& mats = doc["matrices"];
        if (!mats.is_object()) throw parse_error("matrices: must be an object");
        for (const auto& [key, rows] : mats.items()) {
            if (key == "delta") {
                if (algebra_side) throw parse_error("matrices.delta: not valid on algebra side");
                b.delta = io_detail::matrix_from_json(rows, L, LL, key);
            } else if (key == "mu") {
                if (!algebra_side) throw parse_error("matrices.mu: only valid on algebra side");
                b.mu = io_detail::matrix_from_json(rows, LL, L, key);
            } else if (key == "alpha") {
                b.alpha = io_detail::matrix_from_json(rows, L, L, key);
            } else if (key == "phi") {
                b.phi = io_detail::matrix_from_json(rows, L, L, key);
            } else if (key == "R") {
                b.rb_r = io_detail::matrix_from_json(rows, L, L, key);
            } else if (key == "T") {
                b.endo_t = io_detail::matrix_from_json(rows, L, L, key);
            } else if (key == "rho" || key == "beta" || key == "phi_m") {
                if (!b.module_dim)
                    throw parse_error("matrices." + key + ": needs module_dimension");
                const TensorSpace M = TensorSpace::line(*b.module_dim);
                if (key == "rho")
                    b.rho = io_detail::matrix_from_json(rows, M, L.tensor(M), key);
                else if (key == "beta")
                    b.beta = io_detail::matrix_from_json(rows, M, M, key);
                else
                    b.phi_m = io_detail::matrix_from_json(rows, M, M, key);
            } else {
                throw parse_error("matrices: unknown matrix '" + key + "'");
            }
        }
    }
    if (b.flavor == BundleFlavor::coder_comodule && !b.rho)
        throw parse_error("matrices.rho: required for flavor coder_comodule");

    if (doc.contains("lambda")) {
        if (!b.rb_r) throw parse_error("lambda: only valid together with matrices.R");
        if (!doc["lambda"].is_string())
            throw parse_error("lambda: must be a rational string");
        try {
            b.rb_weight = parse_rational(doc["lambda"].get<std::string>());
        } catch (const parse_error& e) {
            throw parse_error(std::string("lambda: ") + e.what());
        }
    } else if (b.rb_r) {
        throw parse_error("lambda: required when matrices.R is present");
    }

    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) throw parse_error("metadata: must be an object");
        for (const auto& [key, value] : doc["metadata"].items()) {
            if (!value.is_string())
                throw parse_error("metadata." + key + ": values must be strings");
            b.metadata[key] = value.get<std::string>();
        }
    }
    return b;
}

inline std::string serialize_bundle(const StructureBundle& b) {
    namespace nj = nlohmann;
    nj::json doc;
    doc["format_version"] = "1";
    doc["dimension"] = b.dimension;
    doc["flavor"] = flavor_name(b.flavor);
    nj::json mats = nj::json::object();
    if (b.delta) mats["delta"] = io_detail::matrix_to_json(*b.delta);
    if (b.mu) mats["mu"] = io_detail::matrix_to_json(*b.mu);
    if (b.alpha) mats["alpha"] = io_detail::matrix_to_json(*b.alpha);
    if (b.phi) mats["phi"] = io_detail::matrix_to_json(*b.phi);
    if (b.rb_r) {
        mats["R"] = io_detail::matrix_to_json(*b.rb_r);
        doc["lambda"] = rational_to_string(b.rb_weight ? *b.rb_weight : Rational(0));
    }
    if (b.endo_t) mats["T"] = io_detail::matrix_to_json(*b.endo_t);
    if (b.module_dim) doc["module_dimension"] = *b.module_dim;
    if (b.rho) mats["rho"] = io_detail::matrix_to_json(*b.rho);
    if (b.beta) mats["beta"] = io_detail::matrix_to_json(*b.beta);
    if (b.phi_m) mats["phi_m"] = io_detail::matrix_to_json(*b.phi_m);
    doc["matrices"] = std::move(mats);
    nj::json meta = nj::json::object();
    for (const auto& [key, value] : b.metadata) meta[key] = value;
    doc["metadata"] = std::move(meta);
    return doc.dump(2) + "\n";
}

// --- check-report stream -----------------------------------------------

inline nlohmann::json reports_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json rec;
        rec["name"] = r.identity_name;
        rec["passed"] = r.passed;
        if (r.witness) {
            rec["witness_index"] = r.witness->input_index;
            nlohmann::json lhs = nlohmann::json::array(), rhs = nlohmann::json::array();
            for (const auto& x : r.witness->lhs) lhs.push_back(rational_to_string(x));
            for (const auto& x : r.witness->rhs) rhs.push_back(rational_to_string(x));
            rec["lhs"] = std::move(lhs);
            rec["rhs"] = std::move(rhs);
        }
        arr.push_back(std::move(rec));
    }
    return arr;
}

inline std::vector<CheckReport> reports_from_json(const std::string& text) {
    namespace nj = nlohmann;
    nj::json arr;
    try {
        arr = nj::json::parse(text);
    } catch (const nj::json::parse_error& e) {
        throw parse_error(std::string("report stream is not well-formed JSON: ") + e.what());
    }
    if (!arr.is_array()) throw parse_error("report stream must be an array");
    std::vector<CheckReport> out;
    for (const auto& rec : arr) {
        CheckReport r;
        if (!rec.contains("name") || !rec.contains("passed"))
            throw parse_error("report record needs 'name' and 'passed'");
        r.identity_name = rec["name"].get<std::string>();
        r.passed = rec["passed"].get<bool>();
        if (rec.contains("witness_index")) {
            Witness w;
            w.input_index = rec["witness_index"].get<std::vector<int>>();
            for (const auto& s : rec["lhs"]) w.lhs.push_back(parse_rational(s.get<std::string>()));
            for (const auto& s : rec["rhs"]) w.rhs.push_back(parse_rational(s.get<std::string>()));
            r.witness = std::move(w);
        }
        out.push_back(std::move(r));
    }
    return out;
}

// Compact "name=PASS name=FAIL ..." summary, sorted by name; embedded in the
// metadata of every constructed bundle so the verdict travels with the file.
inline std::string reports_summary(std::vector<CheckReport> reports) {
    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) {
                  return a.identity_name < b.identity_name;
              });
    std::string out;
    for (const auto& r : reports) {
        if (!out.empty()) out += " ";
        out += r.identity_name + "=" + (r.passed ? "PASS" : "FAIL");
    }
    return out;
}

} // namespace homcoal

#endif // HOMCOAL_BUNDLE_HPP
