#include <CLI11.hpp>

#include <gmpxx.h>

#include <iostream>
#include <string>
#include <vector>

#include "knotfam/family.hpp"
#include "knotfam/invariants.hpp"
#include "knotfam/io.hpp"
#include "knotfam/thurston.hpp"
#include "knotfam/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // verification or classification failure
constexpr int kExitBadInput = 2;  // argument or file errors

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "a/b", plain decimals and scientific notation ("1e-9").
mpq_class parse_tolerance(const std::string& s) {
    try {
        if (s.find('/') != std::string::npos) {
            mpq_class q(s);
            q.canonicalize();
            if (q <= 0) throw BadInput("tolerance must be positive");
            return q;
        }
        std::string mantissa = s;
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string::npos) {
            mantissa = s.substr(0, e);
            exponent = std::stol(s.substr(e + 1));
        }
        long frac_digits = 0;
        if (auto dot = mantissa.find('.'); dot != std::string::npos) {
            frac_digits = static_cast<long>(mantissa.size() - dot - 1);
            mantissa.erase(dot, 1);
        }
        mpq_class q(mpz_class(mantissa), 1);
        long net = exponent - frac_digits;
        mpz_class pow10(1);
        for (long i = 0; i < (net < 0 ? -net : net); ++i) pow10 *= 10;
        if (net < 0)
            q /= pow10;
        else
            q *= pow10;
        q.canonicalize();
        if (q <= 0) throw BadInput("tolerance must be positive");
        return q;
    } catch (const BadInput&) {
        throw;
    } catch (const std::exception&) {
        throw BadInput("cannot parse tolerance: " + s);
    }
}

std::vector<knotfam::FamilyRecord> build_records(unsigned g, unsigned n_max,
                                                 const mpq_class& tol, int convention) {
    std::vector<knotfam::FamilyRecord> records;
    for (unsigned n = 0; n <= n_max; ++n)
        records.push_back(knotfam::build_family_record(g, n, tol, convention));
    return records;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construction and certification of an infinite family of strongly "
                 "quasipositive fibred knots sharing the Seifert form of T(2,2g+1)"};
    app.require_subcommand(1);

    std::string tol_str = "1e-9";
    int convention = -1;

    unsigned genus = 2, n_value = 0, n_max = 0, g_max = 2, samples = 2;
    std::string format = "json", matrix_file;
    bool assume_filling = false;

    auto* family = app.add_subcommand("family", "Full invariant bundle for one (g, n)");
    family->add_option("--genus", genus, "genus g >= 2")->required();
    family->add_option("--n", n_value, "twist parameter n >= 0")->required();
    family->add_option("--format", format, "output format (json)");
    family->add_option("--tol", tol_str, "enclosure tolerance");
    family->add_option("--convention", convention, "Seifert convention, -1 or +1");

    auto* table = app.add_subcommand("family-table", "One row per n = 0..n-max");
    table->add_option("--genus", genus, "genus g >= 2")->required();
    table->add_option("--n-max", n_max, "largest n")->required();
    table->add_option("--format", format, "csv, json or pretty");
    table->add_option("--tol", tol_str, "enclosure tolerance");
    table->add_option("--convention", convention, "Seifert convention, -1 or +1");

    auto* thurston = app.add_subcommand(
        "thurston", "Classify a two-multi-twist composition from an intersection matrix file");
    thurston->add_option("matrix_file", matrix_file, "JSON matrix file")->required();
    thurston->add_flag("--assume-filling", assume_filling,
                       "assert that the multicurves fill and their union is connected");
    thurston->add_option("--tol", tol_str, "enclosure tolerance");

    auto* invariants = app.add_subcommand(
        "invariants", "Seifert-form invariants from a Seifert matrix file");
    invariants->add_option("matrix_file", matrix_file, "JSON matrix file")->required();
    invariants->add_option("--convention", convention, "Seifert convention, -1 or +1");

    auto* lt = app.add_subcommand("lt-signature",
                                  "Levine-Tristram signature samples as CSV");
    lt->add_option("--genus", genus, "genus g >= 2")->required();
    lt->add_option("--n", n_value, "twist parameter n >= 0")->required();
    lt->add_option("--samples", samples, "number of samples on (0, pi]")->required();
    lt->add_option("--convention", convention, "Seifert convention, -1 or +1");

    auto* verify = app.add_subcommand("verify", "Re-check every family claim");
    verify->add_option("--g-max", g_max, "largest genus, >= 2")->required();
    verify->add_option("--n-max", n_max, "largest n, >= 1")->required();
    verify->add_option("--tol", tol_str, "enclosure tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        mpq_class tol = parse_tolerance(tol_str);
        if (convention != -1 && convention != 1)
            throw BadInput("--convention must be -1 or +1");

        if (family->parsed()) {
            if (genus < 2) throw BadInput("--genus must be >= 2");
            if (format != "json") throw BadInput("family supports --format json");
            auto rec = knotfam::build_family_record(genus, n_value, tol, convention);
            std::cout << knotfam::family_record_to_json(rec).dump(2) << "\n";
        } else if (table->parsed()) {
            if (genus < 2) throw BadInput("--genus must be >= 2");
            auto records = build_records(genus, n_max, tol, convention);
            if (format == "csv")
                std::cout << knotfam::family_table_csv(records);
            else if (format == "pretty")
                std::cout << knotfam::family_table_pretty(records);
            else if (format == "json")
                std::cout << knotfam::family_table_json(records).dump(2) << "\n";
            else
                throw BadInput("--format must be csv, json or pretty");
        } else if (thurston->parsed()) {
            if (!assume_filling)
                throw BadInput("pass --assume-filling to assert the construction's "
                               "filling/connectedness hypothesis");
            auto m = knotfam::load_matrix_file(matrix_file);
            auto result = knotfam::thurston_classify(m, tol, assume_filling);
            std::cout << knotfam::thurston_result_to_json(result).dump(2) << "\n";
        } else if (invariants->parsed()) {
            auto m = knotfam::load_matrix_file(matrix_file);
            knotfam::SeifertMatrix a(m, convention);
            knotfam::ordered_json out;
            out["size"] = m.nrows();
            out["convention"] = convention;
            out["signature"] = knotfam::knot_signature(a);
            auto delta = knotfam::alexander(a);
            out["alexander"] = knotfam::laurent_to_json(delta);
            out["alexander_string"] = delta.to_string();
            auto mono =
                knotfam::homological_monodromy(a, knotfam::default_order_cap(m.nrows()));
            if (mono.order)
                out["monodromy_order"] = *mono.order;
            else
                out["monodromy_order"] = "exceeds cap";
            std::cout << out.dump(2) << "\n";
        } else if (lt->parsed()) {
            if (genus < 2) throw BadInput("--genus must be >= 2");
            if (samples < 2) throw BadInput("--samples must be >= 2");
            auto a = knotfam::seifert_family(genus, n_value, convention);
            std::vector<mpq_class> grid;
            for (unsigned k = 1; k <= samples; ++k) {
                mpq_class q(k, samples);
                q.canonicalize();
                grid.push_back(q);
            }
            std::cout << knotfam::lt_csv(knotfam::levine_tristram(a, grid));
        } else if (verify->parsed()) {
            if (g_max < 2) throw BadInput("--g-max must be >= 2");
            if (n_max < 1) throw BadInput("--n-max must be >= 1");
            auto report = knotfam::run_verification(g_max, n_max, tol);
            for (const auto& c : report.checks)
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.evidence
                          << "\n";
            std::cout << (report.overall ? "VERIFIED" : "FAILED") << "\n";
            return report.overall ? kExitOk : kExitFailure;
        }
        return kExitOk;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const knotfam::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const knotfam::UnresolvedClassificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
