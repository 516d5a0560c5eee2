#include "knotfam/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "knotfam/verify.hpp"

namespace knotfam {

namespace {

mpz_class mpz_from_json(const ordered_json& v) {
    if (v.is_number_integer()) return mpz_class(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return mpz_class(v.get<std::string>());
    throw ParseError("expected an integer");
}

ordered_json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

ordered_json rational_to_json(const mpq_class& q) {
    ordered_json j;
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
    j["decimal"] = decimal_string(q, 15);
    return j;
}

mpq_class rational_from_json(const ordered_json& j) {
    if (!j.contains("num") || !j.contains("den")) throw ParseError("malformed rational");
    mpq_class q(mpz_class(j.at("num").get<std::string>()),
                mpz_class(j.at("den").get<std::string>()));
    q.canonicalize();
    return q;
}

}  // namespace

ordered_json matrix_to_json(const IntegerMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.ncols(); ++j) row.push_back(mpz_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    ordered_json j;
    j["rows"] = std::move(rows);
    return j;
}

IntegerMatrix matrix_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array())
        throw ParseError("matrix file must be an object with a \"rows\" array");
    const auto& rows = j.at("rows");
    if (rows.empty()) throw ParseError("matrix has no rows");
    std::vector<std::vector<mpz_class>> entries;
    std::size_t width = 0;
    for (const auto& row : rows) {
        if (!row.is_array() || row.empty()) throw ParseError("matrix rows must be nonempty arrays");
        if (entries.empty())
            width = row.size();
        else if (row.size() != width)
            throw ParseError("matrix rows have unequal lengths");
        std::vector<mpz_class> r;
        for (const auto& v : row) r.push_back(mpz_from_json(v));
        entries.push_back(std::move(r));
    }
    return IntegerMatrix::from_rows(entries);
}

IntegerMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(j);
}

PlumbingTreeFile plumbing_tree_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges") || !j.contains("order"))
        throw ParseError("plumbing tree file needs \"nodes\", \"edges\", \"order\"");
    PlumbingTreeFile f;
    f.tree.node_count = j.at("nodes").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edges must be pairs");
        f.tree.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    for (const auto& v : j.at("order")) f.tree.plumbing_order.push_back(v.get<std::size_t>());
    if (j.contains("convention")) f.convention = j.at("convention").get<int>();
    if (f.convention != -1 && f.convention != 1)
        throw ParseError("convention must be -1 or +1");
    f.tree.validate();
    return f;
}

PlumbingTreeFile load_plumbing_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return plumbing_tree_from_json(j);
}

ordered_json enclosure_to_json(const RationalEnclosure& e) {
    ordered_json j;
    j["lo"] = rational_to_json(e.lo);
    j["hi"] = rational_to_json(e.hi);
    return j;
}

RationalEnclosure enclosure_from_json(const ordered_json& j) {
    return {rational_from_json(j.at("lo")), rational_from_json(j.at("hi"))};
}

ordered_json laurent_to_json(const LaurentPolynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.pairs()) {
        ordered_json t = ordered_json::array();
        t.push_back(e);
        t.push_back(mpz_to_json(c));
        terms.push_back(std::move(t));
    }
    ordered_json j;
    j["terms"] = std::move(terms);
    j["normalized"] = p.normalized();
    return j;
}

LaurentPolynomial laurent_from_json(const ordered_json& j) {
    std::vector<std::pair<long, mpz_class>> pairs;
    for (const auto& t : j.at("terms"))
        pairs.emplace_back(t.at(0).get<long>(), mpz_from_json(t.at(1)));
    LaurentPolynomial p = LaurentPolynomial::from_pairs(pairs);
    if (j.value("normalized", false)) p = p.normalize_knot();
    return p;
}

std::string laurent_pair_string(const LaurentPolynomial& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.pairs()) {
        if (!first) os << ";";
        os << e << ":" << c.get_str();
        first = false;
    }
    return first ? "0" : os.str();
}

ordered_json thurston_result_to_json(const ThurstonResult& r) {
    ordered_json j;
    j["classification"] = to_string(r.classification);
    j["mu"] = enclosure_to_json(r.mu);
    j["trace"] = enclosure_to_json(r.trace);
    if (r.lambda_abs) j["lambda_abs"] = enclosure_to_json(*r.lambda_abs);
    if (r.lambda_inv_abs) j["lambda_inv_abs"] = enclosure_to_json(*r.lambda_inv_abs);
    j["filling_assumed"] = r.filling_assumed;
    return j;
}

ordered_json family_record_to_json(const FamilyRecord& rec) {
    ordered_json j;
    j["g"] = rec.g;
    j["n"] = rec.n;
    j["convention"] = rec.convention;
    j["intersection_matrix"] = matrix_to_json(rec.intersection_matrix);
    j["seifert_matrix"] = matrix_to_json(rec.seifert);
    j["mu"] = enclosure_to_json(rec.mu);
    j["classification"] = to_string(rec.classification);
    if (rec.lambda_abs)
        j["lambda_abs"] = enclosure_to_json(*rec.lambda_abs);
    else
        j["lambda_abs"] = nullptr;
    j["signature"] = rec.signature;
    j["alexander"] = laurent_to_json(rec.alexander);
    if (rec.monodromy_order)
        j["monodromy_order"] = *rec.monodromy_order;
    else
        j["monodromy_order"] = "exceeds cap";
    ordered_json discs = ordered_json::array();
    for (const auto& d : rec.gershgorin.discs) {
        ordered_json dj;
        dj["index"] = d.index;
        dj["center"] = mpz_to_json(d.center);
        dj["radius"] = mpz_to_json(d.radius);
        discs.push_back(std::move(dj));
    }
    ordered_json gj;
    gj["discs"] = std::move(discs);
    gj["largest_row"] = rec.gershgorin.largest_row;
    gj["isolated"] = rec.gershgorin.isolated;
    j["gershgorin_report"] = std::move(gj);
    if (rec.bounds) {
        ordered_json bj;
        bj["lower"] = mpz_to_json(rec.bounds->lower_bound);
        bj["upper"] = mpz_to_json(rec.bounds->upper_bound);
        bj["isolated_disc_ok"] = rec.bounds->isolated_disc_ok;
        bj["bounds_ok"] = rec.bounds->bounds_ok;
        j["bounds_report"] = std::move(bj);
    } else {
        j["bounds_report"] = "n/a";
    }
    j["seifert_equals_chain"] = rec.seifert_equals_chain;
    return j;
}

FamilyRecord family_record_from_json(const ordered_json& j) {
    FamilyRecord rec{
        j.at("g").get<unsigned>(),
        j.at("n").get<unsigned>(),
        j.at("convention").get<int>(),
        matrix_from_json(j.at("intersection_matrix")),
        matrix_from_json(j.at("seifert_matrix")),
        enclosure_from_json(j.at("mu")),
        mapping_class_from_string(j.at("classification").get<std::string>()),
        std::nullopt,
        j.at("signature").get<int>(),
        laurent_from_json(j.at("alexander")),
        std::nullopt,
        GershgorinReport{},
        std::nullopt,
        j.at("seifert_equals_chain").get<bool>(),
    };
    if (!j.at("lambda_abs").is_null())
        rec.lambda_abs = enclosure_from_json(j.at("lambda_abs"));
    if (j.at("monodromy_order").is_number_unsigned())
        rec.monodromy_order = j.at("monodromy_order").get<unsigned>();
    const auto& gj = j.at("gershgorin_report");
    for (const auto& dj : gj.at("discs")) {
        GershgorinDisc d;
        d.index = dj.at("index").get<std::size_t>();
        d.center = mpz_from_json(dj.at("center"));
        d.radius = mpz_from_json(dj.at("radius"));
        rec.gershgorin.discs.push_back(std::move(d));
    }
    rec.gershgorin.largest_row = gj.at("largest_row").get<std::size_t>();
    rec.gershgorin.isolated = gj.at("isolated").get<bool>();
    if (!j.at("bounds_report").is_string()) {
        const auto& bj = j.at("bounds_report");
        FamilyBoundsReport b;
        b.g = rec.g;
        b.n = rec.n;
        b.lower_bound = mpz_from_json(bj.at("lower"));
        b.upper_bound = mpz_from_json(bj.at("upper"));
        b.isolated_disc_ok = bj.at("isolated_disc_ok").get<bool>();
        b.bounds_ok = bj.at("bounds_ok").get<bool>();
        b.mu = rec.mu;
        rec.bounds = std::move(b);
    }
    return rec;
}

ordered_json verification_report_to_json(const VerificationReport& report) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["evidence"] = c.evidence;
        checks.push_back(std::move(cj));
    }
    ordered_json j;
    j["checks"] = std::move(checks);
    j["overall"] = report.overall;
    return j;
}

namespace {

std::vector<std::vector<std::string>> family_table_cells(
    const std::vector<FamilyRecord>& records) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"g", "n", "mu_lo", "mu_hi", "lambda_abs_lo", "lambda_abs_hi",
                    "classification", "signature", "alexander", "monodromy_order",
                    "bounds_ok", "seifert_equal"});
    for (const auto& r : records) {
        std::vector<std::string> row;
        row.push_back(std::to_string(r.g));
        row.push_back(std::to_string(r.n));
        row.push_back(decimal_string(r.mu.lo, 15));
        row.push_back(decimal_string(r.mu.hi, 15));
        row.push_back(r.lambda_abs ? decimal_string(r.lambda_abs->lo, 15) : "n/a");
        row.push_back(r.lambda_abs ? decimal_string(r.lambda_abs->hi, 15) : "n/a");
        row.push_back(to_string(r.classification));
        row.push_back(std::to_string(r.signature));
        row.push_back(laurent_pair_string(r.alexander));
        row.push_back(r.monodromy_order ? std::to_string(*r.monodromy_order) : "exceeds_cap");
        row.push_back(r.bounds ? (r.bounds->bounds_ok ? "true" : "false") : "n/a");
        row.push_back(r.seifert_equals_chain ? "true" : "false");
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string family_table_csv(const std::vector<FamilyRecord>& records) {
    std::ostringstream os;
    for (const auto& row : family_table_cells(records)) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
        os << "\n";
    }
    return os.str();
}

std::string family_table_pretty(const std::vector<FamilyRecord>& records) {
    auto cells = family_table_cells(records);
    std::vector<std::size_t> widths(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t k = 0; k < row.size(); ++k)
            widths[k] = std::max(widths[k], row[k].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t k = 0; k < row.size(); ++k)
            os << (k ? "  " : "") << std::left << std::setw(static_cast<int>(widths[k])) << row[k];
        os << "\n";
    }
    return os.str();
}

ordered_json family_table_json(const std::vector<FamilyRecord>& records) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : records) rows.push_back(family_record_to_json(r));
    return rows;
}

std::string lt_csv(const std::vector<LTSample>& samples) {
    std::ostringstream os;
    os << "theta_over_pi,sigma_omega,degenerate\n";
    for (const auto& s : samples)
        os << s.theta_over_pi.get_str() << "," << s.omega_signature << ","
           << (s.degenerate ? 1 : 0) << "\n";
    return os.str();
}

}  // namespace knotfam
