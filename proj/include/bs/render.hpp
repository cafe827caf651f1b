#pragma once

#include <string>

#include "bs/betti.hpp"
#include "bs/cohomology.hpp"
#include "bs/pairing.hpp"

namespace bs {

// Display grids in the usual Macaulay-style conventions; "." marks structural
// zeros. Betti: beta_{i,i+l} at row l, column i. Cohomology: gamma_{i,d-i}
// at row i counted from the bottom, column d.
std::string render_betti(const BettiTable& b);
std::string render_cohomology(const CohomologyTable& c);
std::string render_functional(const Functional& f);

} // namespace bs
