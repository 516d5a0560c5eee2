#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "knotfam/plumbing.hpp"

namespace knotfam {

struct VerificationCheck {
    std::string name;
    bool pass = false;
    std::string evidence;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool overall = true;

    void add(std::string name, bool pass, std::string evidence) {
        overall = overall && pass;
        checks.push_back({std::move(name), pass, std::move(evidence)});
    }
};

/// Test-harness hooks. seifert_override, when set, replaces the family
/// Seifert constructor (used for fault injection in tests; the CLI never
/// sets it).
struct VerificationHooks {
    std::function<SeifertMatrix(unsigned g, unsigned n, int convention)> seifert_override;
};

/// Re-check every family claim for g in [2, g_max], n in [0, n_max]:
/// Seifert-form equality, eigenvalue bounds and disc isolation, the g = 2
/// closed form, classification and the stretch-factor identities,
/// distinctness, signature, monodromy order, Alexander data,
/// Levine-Tristram agreement, and the Fox-Milnor witness.
VerificationReport run_verification(unsigned g_max, unsigned n_max, const mpq_class& tol,
                                    const VerificationHooks& hooks = {});

}  // namespace knotfam
