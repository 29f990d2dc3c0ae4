#pragma once
#include "aak/diagram.hpp"
#include "aak/poly.hpp"

namespace aak {

// Exact-arithmetic evaluation is exponential in crossings; refuse beyond
// this budget unless the caller raises it explicitly.
inline constexpr int kBracketBudget = 20;

// Kauffman bracket, <single circle> = 1 convention, via the full state sum
// over A/B smoothings. Throws input_error when n exceeds the budget.
Poly bracket(const Diagram& d, int budget = kBracketBudget);

// Independent implementation: recursive skein resolution by diagram surgery
// (splice one crossing, recurse on the two smaller diagrams).
Poly bracket_recursive(const Diagram& d, int budget = kBracketBudget);

// Writhe of a knot diagram (sum of crossing signs for either orientation).
int writhe(const Diagram& d);

// Jones polynomial as a Laurent polynomial in A: (-A^3)^(-w) * bracket.
Poly jones(const Diagram& d, int budget = kBracketBudget);

// Jones == 1 (the unknot's value; used as the ground-truth check at the
// scales this artifact handles).
bool jones_is_one(const Diagram& d, int budget = kBracketBudget);

// |V| evaluated at A^4 = -1 (the knot determinant).
long long determinant(const Diagram& d, int budget = kBracketBudget);

}  // namespace aak
