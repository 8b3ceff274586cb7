#pragma once

#include <vector>

#include "weil/mp_float.hpp"
#include "weil/weil_poly.hpp"

namespace weil {

// All complex roots of the (squarefree part of the) integer polynomial, each
// repeated with its multiplicity, found by Ehrlich-Aberth simultaneous
// iteration at the requested precision. Roots are returned sorted by
// principal argument (ascending), ties by |Im| then |Re|. Throws
// precondition_error below 64 bits and error on non-convergence.
std::vector<Complex> complex_roots(const std::vector<Integer>& coeffs, long precision_bits);

// Convenience: roots of P together with the modulus check |root| = sqrt(q)
// within 2^(-precision/2); weil_ok reports the check.
std::vector<Complex> weil_roots(const WeilPolynomial& P, long precision_bits, bool* weil_ok);

} // namespace weil
