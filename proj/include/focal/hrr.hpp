#pragma once

#include <string>
#include <vector>

#include "focal/sheaf.hpp"
#include "focal/spaces.hpp"

namespace focal {

// Polynomial in one formal variable (default T) with parameter coefficients.
struct HilbertPolynomial {
  std::vector<ParamPoly> coefficients;  // index = power of T
  std::string variable = "T";

  int degree() const;
  ParamPoly at(const Rational& t) const;
  std::string to_string() const;
};

struct SurfaceInvariants {
  ParamPoly degree;
  ParamPoly k_dot_h;
  ParamPoly sectional_genus;
  ParamPoly chi;
};

// ch of the line bundle with first Chern class t.
GradedClass exp_line(const GradedClass& t);

ParamPoly euler_characteristic_of_character(const Variety& v, const GradedClass& ch);
ParamPoly euler_characteristic(const Variety& v, const Sheaf& e);
ParamPoly euler_characteristic(const Variety& v, const VirtualSheaf& e);

// chi(E(T h)) as a polynomial in T.
HilbertPolynomial hilbert_polynomial_of_character(const Variety& v, const GradedClass& ch, const GradedClass& h);
HilbertPolynomial hilbert_polynomial(const Variety& v, const Sheaf& e, const GradedClass& h);

SurfaceInvariants surface_invariants_from_hilbert(const HilbertPolynomial& hp);

// chi(O_M(D)) for the complete intersection M of divisors a, b, via the Koszul resolution.
GradedClass koszul_character(const GradedClass& d, const GradedClass& a, const GradedClass& b);

// Chern character of omega of the focal surface on A_X, linked to the ramification surface R
// inside the complete intersection of the two ramification divisors.
GradedClass focal_dualizing_character(const spaces::IncidenceTower& tower);
HilbertPolynomial focal_hilbert_polynomial(const spaces::IncidenceTower& tower);

}  // namespace focal
