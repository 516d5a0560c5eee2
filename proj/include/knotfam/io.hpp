#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "knotfam/family.hpp"
#include "knotfam/invariants.hpp"
#include "knotfam/plumbing.hpp"
#include "knotfam/thurston.hpp"

namespace knotfam {

using ordered_json = nlohmann::ordered_json;

/// Malformed input file or JSON document.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix file format: {"rows": [[...], ...]} with strict rectangularity.
ordered_json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const ordered_json& j);
IntegerMatrix load_matrix_file(const std::string& path);

// PlumbingTree file: {"nodes": k, "edges": [[i,j],...], "order": [...],
// "convention": -1 (optional)}.
struct PlumbingTreeFile {
    PlumbingTree tree;
    int convention = -1;
};
PlumbingTreeFile plumbing_tree_from_json(const ordered_json& j);
PlumbingTreeFile load_plumbing_tree_file(const std::string& path);

// Enclosures carry exact numerator/denominator strings plus 15-digit
// decimals.
ordered_json enclosure_to_json(const RationalEnclosure& e);
RationalEnclosure enclosure_from_json(const ordered_json& j);

ordered_json laurent_to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const ordered_json& j);

/// Pair-list rendering with strictly increasing exponents, e.g.
/// "-2:1;-1:-1;0:1;1:-1;2:1" (CSV-safe).
std::string laurent_pair_string(const LaurentPolynomial& p);

ordered_json thurston_result_to_json(const ThurstonResult& r);

ordered_json family_record_to_json(const FamilyRecord& rec);
FamilyRecord family_record_from_json(const ordered_json& j);

ordered_json verification_report_to_json(const struct VerificationReport& report);

std::string family_table_csv(const std::vector<FamilyRecord>& records);
std::string family_table_pretty(const std::vector<FamilyRecord>& records);
ordered_json family_table_json(const std::vector<FamilyRecord>& records);

/// CSV "theta_over_pi,sigma_omega,degenerate" with one row per sample.
std::string lt_csv(const std::vector<LTSample>& samples);

}  // namespace knotfam
