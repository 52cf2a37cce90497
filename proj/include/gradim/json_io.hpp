#pragma once

#include <string>

#include "json.hpp"

#include "gradim/classify.hpp"
#include "gradim/matrix.hpp"
#include "gradim/solvers.hpp"

namespace gradim {

/// Insertion-ordered JSON so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// {"n": n, "entries": [[...], ...]} with entries rendered through the
/// backend's string encoding.
template <Scalar S>
Json matrix_to_json(const Matrix<S>& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(scalar_traits<S>::str(m(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"n", m.size()}, {"entries", std::move(entries)}};
}

template <Scalar S>
Json matrix_to_json(const HomogeneousMatrix<S>& m) {
    return matrix_to_json(m.dense());
}

namespace detail {

template <Scalar S>
S scalar_from_json(const Json& v) {
    auto parsed = [](const std::string& text) {
        try {
            return scalar_traits<S>::parse(text);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            // plain rational literals are accepted by every backend
            if constexpr (std::is_same_v<S, Cyclo>) {
                try {
                    return Cyclo(rational_from_string(text));
                } catch (const Error&) {
                }
            }
            throw ParseError(e.what(), 0);
        }
    };
    if (v.is_string()) return parsed(v.get<std::string>());
    if (v.is_number_integer()) return scalar_traits<S>::from_int(v.get<long long>());
    // other numeric forms go through the string parser so each backend keeps
    // its own rules (the exact ones reject non-integer decimals)
    if (v.is_number()) return parsed(v.dump());
    throw ParseError("matrix entry must be a string or a number", 0);
}

}  // namespace detail

template <Scalar S>
Matrix<S> matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix JSON needs the fields \"n\" and \"entries\"", 0);
    int n = j.at("n").get<int>();
    if (n < 1) throw DimensionError("matrix size must be positive");
    const Json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != n)
        throw ParseError("\"entries\" must be an array of n rows", 0);
    Matrix<S> m(n);
    for (int i = 0; i < n; ++i) {
        const Json& row = entries.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("row " + std::to_string(i) + " must have n entries", 0);
        for (int j2 = 0; j2 < n; ++j2)
            m(i, j2) = detail::scalar_from_json<S>(row.at(static_cast<std::size_t>(j2)));
    }
    return m;
}

/// {"assignment": {"x<id>": matrix, ...}, "value": matrix}.
template <Scalar S>
Json witness_to_json(const EvaluationWitness<S>& w) {
    Json assignment = Json::object();
    for (const auto& [id, m] : w.assignment)
        assignment["x" + std::to_string(id)] = matrix_to_json(m);
    return Json{{"assignment", std::move(assignment)}, {"value", matrix_to_json(w.value)}};
}

template <Scalar S>
Json classification_to_json(const ImageClassification<S>& c) {
    Json out = Json::object();
    out["label"] = image_label_name(c.label);
    if (c.degree) out["degree"] = *c.degree;
    Json certs = Json::array();
    for (const auto& w : c.certificates) certs.push_back(witness_to_json(w));
    out["certificates"] = std::move(certs);
    out["semi_decision"] = c.semi_decision;
    out["seed"] = c.seed;
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

/// {"assignment": {...}, "residual": r} for preimage certificates.
template <Scalar S>
Json preimage_to_json(const PreimageCertificate<S>& c) {
    Json assignment = Json::object();
    for (const auto& [id, m] : c.assignment)
        assignment["x" + std::to_string(id)] = matrix_to_json(m);
    return Json{{"assignment", std::move(assignment)}, {"residual", c.residual}};
}

}  // namespace gradim
