#pragma once

#include <string>

#include "twoschur/algebra.hpp"

namespace twoschur {

/// Signed polynomial in the canonical basis, lowest index first, e.g.
/// "1 + b(3) - b(6)". Residues above p/2 print as negatives, so in
/// characteristic 3 the residue 2 prints as -1. The zero element is "0".
std::string to_text(const AlgebraElement& x);

/// Residue c mod p as the representative in (-p/2, p/2].
long long signed_residue(Residue c, Residue p);

}  // namespace twoschur
