#pragma once

#include <string>

#include "srlab/polynomial.hpp"

namespace srlab {

/* Text form of polynomials, e.g. "w^2+w^2x+x^2+x^3" or "(x+1)(x^6+wx^5+1)".
   Over GF(4) the letter w is the class of x in GF(2)[x]/(x^2+x+1); other
   coefficients are canonical integers. Exponent braces ^{k} are accepted. */
Polynomial parse_polynomial(const FieldPtr& f, const std::string& text);
std::string format_polynomial(const Polynomial& p);
std::string format_element(const Field& f, Elem a);

}  // namespace srlab
