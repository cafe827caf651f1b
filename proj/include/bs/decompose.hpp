#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bs/betti.hpp"
#include "bs/cohomology.hpp"
#include "bs/sequences.hpp"

namespace bs {

struct BettiPart {
    Rational coeff;
    DegreeSequence skeleton;
    BettiTable table; // primitive pure table of the skeleton
    std::vector<std::pair<int, long>> zeroed; // cells this step annihilated
};

struct BettiDecomposition {
    std::vector<BettiPart> parts;
};

// Greedy decomposition into pure tables (min-degree pivot, largest
// nonnegativity-preserving coefficient). Throws NotInCone with evidence.
BettiDecomposition decompose_betti(const BettiTable& b);

bool verify_betti_decomposition(const BettiTable& input, const BettiDecomposition& dec);

struct CohomologyPart {
    Rational coeff;
    RootSequence skeleton;
    CohomologyTable table; // supernatural table at rank_gcd_bound(skeleton)
};

struct CohomologyDecomposition {
    std::vector<CohomologyPart> parts;
};

// Greedy decomposition into supernatural tables; pivot z_i = R_i - i, with
// exact tail-certified coefficients. Throws NotInCone, WindowTooNarrow,
// IncompleteTable.
CohomologyDecomposition decompose_cohomology(const CohomologyTable& c);

bool verify_cohomology_decomposition(const CohomologyTable& input,
                                     const CohomologyDecomposition& dec);

struct BettiConeResult {
    bool in_cone = false;
    std::string evidence;
    std::optional<BettiDecomposition> certificate;
};

struct CohomologyConeResult {
    bool in_cone = false;
    std::string evidence;
    std::optional<CohomologyDecomposition> certificate;
};

BettiConeResult is_in_cone(const BettiTable& b);
CohomologyConeResult is_in_cone(const CohomologyTable& c);

} // namespace bs
