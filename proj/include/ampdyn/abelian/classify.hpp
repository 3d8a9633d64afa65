#pragma once

#include <optional>

#include "ampdyn/abelian/endo.hpp"
#include "ampdyn/exactpoly/algebraic.hpp"
#include "ampdyn/exactpoly/int_poly.hpp"

namespace ampdyn::abelian {

enum class Entropy { Null, Positive };
const char* to_string(Entropy e);

// A real algebraic number given by a carrier polynomial and an isolating interval.
using AlgebraicRadius = exactpoly::AlgebraicReal;

struct SpectralRadius {
  // Spectral radius of S -> M^T S M on symmetric matrices, i.e. rho(M)^2.
  AlgebraicRadius n1;
  // rho(M) itself, present when a real eigenvalue attains it.
  std::optional<AlgebraicRadius> rho;
};

struct DynReport {
  std::size_t n = 0;
  mpz_class degree;
  bool amplified = false;
  bool pcd = false;
  Entropy entropy = Entropy::Null;
  SpectralRadius spectral_radius;
  bool dense_orbit = false;
  exactpoly::IntPoly char_poly;
};

DynReport classify(const EndoSpec& spec);

mpz_class degree(const EndoSpec& spec);

SpectralRadius spectral_radius(const EndoSpec& spec);

// Independent PCD decision: det(M^d - I) != 0 for every d with phi(d) <= n.
bool is_pcd_via_periods(const EndoSpec& spec);

}  // namespace ampdyn::abelian
