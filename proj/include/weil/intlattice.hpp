#pragma once

#include <vector>

#include "weil/rational.hpp"

namespace weil {

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;

// In-place LLL reduction of the rows with Lovasz parameter delta = 3/4,
// exact rational Gram-Schmidt. Row count here is at most g+2 <= 8.
void lll_reduce(IntMat& basis);

// Row-style Hermite normal form: zero rows dropped, pivots positive, entries
// above each pivot reduced into [0, pivot). Canonical for a given row span.
IntMat hermite_normal_form(IntMat rows);

// Rank of the rows over Q.
std::size_t int_rank(const IntMat& rows);

// Is v in the Q-span of the rows?
bool in_rational_span(const IntMat& rows, const IntVec& v);

} // namespace weil
