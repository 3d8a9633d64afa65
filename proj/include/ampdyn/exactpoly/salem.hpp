#pragma once

#include <string>

#include "ampdyn/exactpoly/int_poly.hpp"
#include "ampdyn/exactpoly/modp.hpp"

namespace ampdyn::exactpoly {

enum class SalemVerdict { Salem, NotSalem, SalemConfigurationOnly };

const char* to_string(SalemVerdict v);

struct SalemReport {
  SalemVerdict verdict = SalemVerdict::NotSalem;
  std::string reason;  // first failed condition, empty for Salem
  IrreducibilityEvidence irreducibility;
};

// Monic, reciprocal, even degree >= 4, no cyclotomic factor, one real root > 1,
// deg - 2 roots on the unit circle, and certified irreducible.
SalemReport salem_check(const IntPoly& p);

}  // namespace ampdyn::exactpoly
