#include "ampdyn/exactpoly/salem.hpp"

#include "ampdyn/exactpoly/cyclotomic.hpp"
#include "ampdyn/exactpoly/roots.hpp"

namespace ampdyn::exactpoly {

const char* to_string(SalemVerdict v) {
  switch (v) {
    case SalemVerdict::Salem: return "Salem";
    case SalemVerdict::NotSalem: return "NotSalem";
    case SalemVerdict::SalemConfigurationOnly: return "SalemConfigurationOnly";
  }
  return "NotSalem";
}

SalemReport salem_check(const IntPoly& p) {
  SalemReport r;
  auto reject = [&](const char* why) {
    r.verdict = SalemVerdict::NotSalem;
    r.reason = why;
    return r;
  };
  if (p.is_zero()) return reject("zero polynomial");
  if (!p.is_monic()) return reject("not monic");
  if (!is_reciprocal(p)) return reject("not reciprocal");
  if (p.degree() < 4 || p.degree() % 2 != 0) return reject("degree is not even and >= 4");
  if (!cyclotomic_divisors(p).empty()) return reject("has a cyclotomic factor");
  if (real_roots_greater_than_one(p) != 1) return reject("not exactly one real root > 1");
  if (unit_circle_root_count(p) != p.degree() - 2) return reject("unit-circle root count is not deg - 2");
  r.irreducibility = certify_irreducible(p);
  if (!r.irreducibility.certified) {
    r.verdict = SalemVerdict::SalemConfigurationOnly;
    r.reason = "irreducibility not certified";
    return r;
  }
  r.verdict = SalemVerdict::Salem;
  return r;
}

}  // namespace ampdyn::exactpoly
