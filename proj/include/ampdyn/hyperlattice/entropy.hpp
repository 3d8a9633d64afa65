#pragma once

#include <optional>

#include "ampdyn/exactpoly/number_field.hpp"
#include "ampdyn/exactpoly/salem.hpp"
#include "ampdyn/hyperlattice/lattice.hpp"

namespace ampdyn::hyperlattice {

enum class Entropy { Null, Positive };
const char* to_string(Entropy e);

struct EntropyReport {
  Entropy entropy = Entropy::Null;
  exactpoly::AlgebraicReal spectral_radius;
  exactpoly::IntPoly char_poly;
  exactpoly::IntPoly non_cyclotomic_part;       // char_poly with every Phi_d removed
  std::optional<exactpoly::SalemReport> salem;  // Positive only
};

EntropyReport entropy_class(const LatticeIsometry& iso);

struct NullFixedWitness {
  unsigned long power = 1;
  IntVector v;
  mpz_class q;
};

// Smallest k (up to the lcm of the cyclotomic orders) for which g^k fixes a nonzero v with
// q(v) >= 0 and q(v, h) >= 0. Requires null entropy; throws NoneInPositiveCone otherwise.
NullFixedWitness null_fixed_witness(const LatticeIsometry& iso);

// A nonzero vector fixed by g^k with q(v) >= 0 and q(v, h) > 0, if one exists.
std::optional<IntVector> fixed_positive_cone_vector(const LatticeIsometry& iso, unsigned long k);

struct PositiveEntropyWitness {
  exactpoly::AlgebraicReal eigenvalue;  // leading eigenvalue lambda, |lambda| > 1; field generator
  exactpoly::FieldVector d1;            // g D1 = lambda D1
  exactpoly::FieldVector d2;            // g D2 = lambda^-1 D2
  exactpoly::FieldVector d;             // D1 - D2
  exactpoly::RatPoly q11, q22, q12, q_sum;
  std::vector<double> d1_approx, d2_approx;
};

// Eigenvectors in Q[x]/(m) for the factor m carrying the leading eigenvalue, normalized so
// that q(D_i, h) = 2, with q(D_i) = 0, q(D1, D2) > 0 and q(D1 + D2) > 0 certified exactly.
PositiveEntropyWitness positive_entropy_witness(const LatticeIsometry& iso, int max_degree = 16);

// Multiplicative order of g when finite.
std::optional<unsigned long> finite_order_test(const LatticeIsometry& iso);

// Symmetric diagonalization over Q: a nonzero w with w^T A w >= 0 (preferring > 0), if any.
std::optional<RatVector> nonnegative_vector(const RatMatrix& symmetric);

}  // namespace ampdyn::hyperlattice
