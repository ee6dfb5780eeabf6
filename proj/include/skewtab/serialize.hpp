#pragma once

#include "skewtab/bijection.hpp"
#include "skewtab/errors.hpp"
#include "skewtab/identity_engine.hpp"
#include "skewtab/m_algebra.hpp"
#include "skewtab/motzkin_path.hpp"
#include "skewtab/tableau.hpp"
#include "skewtab/walks.hpp"

#include <json.hpp>

#include <string>

namespace skewtab {

using Json = nlohmann::json;

inline Json tableau_to_json(const StandardTableau& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return rows;
}

// Shift and correction coefficients are exact integers by the time a combo
// is published; they are emitted as JSON numbers while they fit, decimal
// strings beyond that. Counts stay decimal strings everywhere.
inline Json coefficient_to_json(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    if (v.get_den() != 1)
        throw InternalError("non-integer coefficient in published combo");
    if (v.get_num().fits_slong_p()) return Json(static_cast<long>(v.get_num().get_si()));
    return Json(v.get_num().get_str(10));
}

inline Json combo_to_json(const MotzkinCombo& combo) {
    Json shifts = Json::array();
    for (auto it = combo.shifts.rbegin(); it != combo.shifts.rend(); ++it)
        shifts.push_back({{"s", it->first}, {"a", coefficient_to_json(it->second)}});
    Json corrections = Json::array();
    for (const auto& [n, c] : combo.corrections)
        corrections.push_back({{"n", n}, {"c", coefficient_to_json(c)}});
    return Json{{"shifts", shifts}, {"corrections", corrections}, {"n_min", combo.n_min}};
}

inline Json classes_to_json(const PrefixClassTable& table) {
    Json classes = Json::object();
    for (const auto& [h, mult] : table.classes) classes[std::to_string(h)] = mult;
    return classes;
}

inline Json trace_to_json(const LabelTrace& trace) {
    Json stages = Json::array();
    for (const auto& stage : trace.stages) stages.push_back(stage);
    return Json{{"labels", trace.word().to_string()}, {"stages", stages}};
}

inline Json skew_derivation_to_json(const SkewDerivation& d) {
    return Json{{"mu", d.mu.to_string()},
                {"classes", classes_to_json(d.classes)},
                {"calibration_sizes", d.classes.calibration_sizes},
                {"combo", combo_to_json(d.combo)},
                {"rendering", d.combo.render()},
                {"verified", {{"from", d.verified_from}, {"to", d.verified_to}}}};
}

inline Json entry_derivation_to_json(const EntryDerivation& d) {
    Json terms = Json::array();
    for (const auto& [mu, coeff] : d.terms)
        terms.push_back({{"mu", mu.to_string()}, {"coefficient", to_decimal(coeff)}});
    return Json{{"cell", std::to_string(d.row) + "," + std::to_string(d.col)},
                {"value", d.value},
                {"terms", terms},
                {"combo", combo_to_json(d.combo)},
                {"rendering", d.combo.render()},
                {"verified", {{"from", d.verified_from}, {"to", d.verified_to}}}};
}

inline const char* cell_status_name(ConjectureCell::Status s) {
    switch (s) {
        case ConjectureCell::Status::Ok: return "ok";
        case ConjectureCell::Status::OddMismatch: return "odd_mismatch";
        case ConjectureCell::Status::EvenMismatch: return "even_mismatch";
        case ConjectureCell::Status::BothMismatch: return "both_mismatch";
        case ConjectureCell::Status::ResourceLimit: return "resource_limit";
    }
    return "unknown";
}

inline Json conjecture_report_to_json(const ConjectureReport& report) {
    Json cells = Json::array();
    for (const auto& c : report.cells) {
        Json cell{{"ell", c.ell},
                  {"n", c.n},
                  {"odd_lhs", to_decimal(c.odd_lhs)},
                  {"odd_rhs", to_decimal(c.odd_rhs)},
                  {"even_lhs", to_decimal(c.even_lhs)},
                  {"even_rhs", to_decimal(c.even_rhs)},
                  {"status", cell_status_name(c.status)}};
        if (!c.note.empty()) cell["note"] = c.note;
        cells.push_back(cell);
    }
    return Json{{"cells", cells},
                {"summary",
                 {{"cells", report.cells.size()},
                  {"odd_mismatches", report.odd_mismatches},
                  {"even_mismatches", report.even_mismatches},
                  {"resource_limited", report.resource_limited},
                  {"all_ok", report.all_ok()}}}};
}

inline Json catalog_report_to_json(const CatalogReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        if (e.derivation) {
            Json j = skew_derivation_to_json(*e.derivation);
            j["status"] = "ok";
            entries.push_back(j);
        } else {
            entries.push_back(Json{{"mu", e.mu.to_string()}, {"status", "error"},
                                   {"error", e.error}});
        }
    }
    return Json{{"mu_max", report.mu_max},
                {"entries", entries},
                {"failures", report.failures}};
}

}  // namespace skewtab
