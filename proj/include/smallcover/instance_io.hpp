#pragma once

// Instance files: {"name", "n", "vertices", "facets", "lambda"} as UTF-8 JSON.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "charmap.hpp"
#include "errors.hpp"
#include "simplicial.hpp"

namespace smallcover {

/// A parsed document; lambda is absent when the file carries no "lambda" field.
struct InstanceDocument {
    std::string name;
    std::size_t n = 0;
    SimplicialComplex complex;
    std::optional<CharacteristicMatrix> lambda;

    [[nodiscard]] CharacteristicPair pair() const {
        if (!lambda) throw InputError("instance '" + name + "' has no lambda");
        return {complex, *lambda};
    }
};

namespace detail {

inline std::string located(const std::string& text, std::size_t byte, const std::string& what) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what;
}

inline int as_int(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number_integer()) throw InputError(where + " must be an integer");
    return v.get<int>();
}

}  // namespace detail

inline InstanceDocument parse_instance(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::string what = e.what();
        if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
        throw InputError(detail::located(text, e.byte, what));
    }
    if (!doc.is_object()) throw InputError("instance must be a JSON object");
    for (const char* key : {"n", "vertices", "facets"})
        if (!doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");

    InstanceDocument out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw InputError("\"name\" must be a string");
        out.name = doc["name"].get<std::string>();
    }
    const int n = detail::as_int(doc["n"], "\"n\"");
    if (n < 1) throw InputError("\"n\" must be positive");
    out.n = static_cast<std::size_t>(n);

    if (!doc["vertices"].is_array()) throw InputError("\"vertices\" must be an array");
    std::vector<int> declared;
    for (std::size_t i = 0; i < doc["vertices"].size(); ++i)
        declared.push_back(detail::as_int(doc["vertices"][i], "vertices[" + std::to_string(i) + "]"));

    if (!doc["facets"].is_array()) throw InputError("\"facets\" must be an array");
    std::vector<std::vector<int>> facets;
    for (std::size_t f = 0; f < doc["facets"].size(); ++f) {
        const auto& row = doc["facets"][f];
        if (!row.is_array()) throw InputError("facets[" + std::to_string(f) + "] must be an array");
        std::vector<int> facet;
        for (std::size_t i = 0; i < row.size(); ++i)
            facet.push_back(detail::as_int(row[i], "facets[" + std::to_string(f) + "][" + std::to_string(i) + "]"));
        facets.push_back(std::move(facet));
    }
    out.complex = SimplicialComplex::from_facets(declared, facets);

    if (doc.contains("lambda") && !doc["lambda"].is_null()) {
        const auto& rows = doc["lambda"];
        if (!rows.is_array() || rows.size() != out.n)
            throw InputError("\"lambda\" must have n = " + std::to_string(out.n) + " rows");
        const std::size_t m = declared.size();
        gf2::BitMatrix lambda(out.n, m);
        for (std::size_t r = 0; r < out.n; ++r) {
            if (!rows[r].is_array() || rows[r].size() != m)
                throw InputError("lambda row " + std::to_string(r + 1) + " must have " + std::to_string(m) + " entries");
            for (std::size_t c = 0; c < m; ++c) {
                const auto& e = rows[r][c];
                if (!e.is_number_integer() || (e.get<long long>() != 0 && e.get<long long>() != 1))
                    throw InputError("lambda entry (" + std::to_string(r + 1) + ", column of vertex " + std::to_string(declared[c]) +
                                     ") must be 0 or 1");
                // Column order follows the sorted labels.
                const auto pos = static_cast<std::size_t>(out.complex.position_of(declared[c]));
                lambda.set(r, pos, e.get<long long>() == 1);
            }
        }
        out.lambda = CharacteristicMatrix::validate(out.complex, std::move(lambda));
    }
    return out;
}

inline InstanceDocument read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

namespace detail {

inline std::string int_list(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

}  // namespace detail

/// Canonical text: facets in the complex's lexicographic order, one row per line.
inline std::string emit_instance(const std::string& name, const SimplicialComplex& k, std::size_t n,
                                 const std::optional<CharacteristicMatrix>& lambda) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"name\": " << nlohmann::json(name).dump() << ",\n";
    os << "  \"n\": " << n << ",\n";
    os << "  \"vertices\": " << detail::int_list(k.labels()) << ",\n";
    os << "  \"facets\": [\n";
    const auto facets = k.facet_labels();
    for (std::size_t i = 0; i < facets.size(); ++i) os << "    " << detail::int_list(facets[i]) << (i + 1 < facets.size() ? ",\n" : "\n");
    os << "  ]";
    if (lambda) {
        os << ",\n  \"lambda\": [\n";
        for (std::size_t r = 0; r < lambda->n(); ++r) {
            std::vector<int> row;
            for (std::size_t c = 0; c < lambda->m(); ++c) row.push_back(lambda->matrix().get(r, c) ? 1 : 0);
            os << "    " << detail::int_list(row) << (r + 1 < lambda->n() ? ",\n" : "\n");
        }
        os << "  ]";
    }
    os << "\n}\n";
    return os.str();
}

inline std::string emit_instance(const std::string& name, const CharacteristicPair& pair) {
    return emit_instance(name, pair.complex, pair.lambda.n(), pair.lambda);
}

/// Reads a facet order: a JSON array of label lists.
inline std::vector<VertexMask> parse_facet_order(const SimplicialComplex& k, const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(detail::located(text, e.byte, "syntax error in facet order"));
    }
    if (doc.is_object() && doc.contains("order")) doc = doc["order"];
    if (!doc.is_array()) throw InputError("facet order must be an array of facets");
    std::vector<VertexMask> order;
    for (std::size_t f = 0; f < doc.size(); ++f) {
        if (!doc[f].is_array()) throw InputError("order[" + std::to_string(f) + "] must be an array");
        std::vector<int> labels;
        for (std::size_t i = 0; i < doc[f].size(); ++i) labels.push_back(detail::as_int(doc[f][i], "order entry"));
        order.push_back(k.mask_of(labels));
    }
    return order;
}

}  // namespace smallcover
