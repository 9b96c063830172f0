#include "focal/hrr.hpp"

#include <stdexcept>

namespace focal {

int HilbertPolynomial::degree() const {
  for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k)
    if (!coefficients[k].is_zero()) return k;
  return -1;
}

ParamPoly HilbertPolynomial::at(const Rational& t) const {
  ParamPoly out(0);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) out = out * ParamPoly(t) + *it;
  return out;
}

std::string HilbertPolynomial::to_string() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (coefficients[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = coefficients[k].to_string();
    if (k == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += "(" + c + ")*";
    out += variable;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

GradedClass exp_line(const GradedClass& t) {
  if (t.top_degree() > 1 || !t.degree_zero().is_zero())
    throw std::invalid_argument("exp_line expects a class of degree one");
  Variety v = t.variety();
  GradedClass out = v.one(), term = v.one();
  for (unsigned k = 1; k <= v.dimension(); ++k) {
    term = (term * t).scaled(ParamPoly(Rational(1, static_cast<long>(k))));
    out += term;
  }
  return out;
}

ParamPoly euler_characteristic_of_character(const Variety& v, const GradedClass& ch) {
  return v.integrate(ch * todd(Sheaf::tangent(v)));
}

ParamPoly euler_characteristic(const Variety& v, const Sheaf& e) {
  return euler_characteristic_of_character(v, chern_character(e));
}

ParamPoly euler_characteristic(const Variety& v, const VirtualSheaf& e) {
  return euler_characteristic(v, e.plus) - euler_characteristic(v, e.minus);
}

HilbertPolynomial hilbert_polynomial_of_character(const Variety& v, const GradedClass& ch, const GradedClass& h) {
  if (h.top_degree() != 1 || !h.degree_zero().is_zero())
    throw std::invalid_argument("the twisting class must have degree one");
  // chi(E(Th)) = sum_k T^k/k! * int ch(E) h^k td
  GradedClass base = ch * todd(Sheaf::tangent(v));
  HilbertPolynomial hp;
  GradedClass hk = v.one();
  Rational fact(1);
  for (unsigned k = 0; k <= v.dimension(); ++k) {
    if (k > 0) {
      hk = hk * h;
      fact = fact * Rational(static_cast<long>(k));
    }
    hp.coefficients.push_back(v.integrate(base * hk).scaled(Rational(1) / fact));
  }
  while (!hp.coefficients.empty() && hp.coefficients.back().is_zero()) hp.coefficients.pop_back();
  return hp;
}

HilbertPolynomial hilbert_polynomial(const Variety& v, const Sheaf& e, const GradedClass& h) {
  return hilbert_polynomial_of_character(v, chern_character(e), h);
}

SurfaceInvariants surface_invariants_from_hilbert(const HilbertPolynomial& hp) {
  if (hp.degree() != 2) throw std::invalid_argument("expected a Hilbert polynomial of degree 2 in T");
  SurfaceInvariants s;
  s.degree = hp.coefficients[2].scaled(Rational(2));
  s.k_dot_h = hp.coefficients[1].scaled(Rational(2));
  s.sectional_genus = (s.k_dot_h + s.degree).scaled(Rational(1, 2)) + ParamPoly(1);
  s.chi = hp.coefficients[0];
  return s;
}

GradedClass koszul_character(const GradedClass& d, const GradedClass& a, const GradedClass& b) {
  return exp_line(d) - exp_line(d - a) - exp_line(d - b) + exp_line(d - a - b);
}

GradedClass focal_dualizing_character(const spaces::IncidenceTower& tower) {
  const Variety& ax = tower.ax.variety;
  const GradedClass& a = tower.ax.cls("A");
  const GradedClass& b = tower.ax.cls("B");
  const Sheaf& tax = tower.ax.sheaf("T");
  // Adjunction: omega_M = K_{A_X} + A + B restricted to M.
  GradedClass omega_m = -tax.c(1) + a + b;
  if (!(omega_m == ax.parse("4*H + 3*K")))
    throw std::logic_error("adjunction for the complete intersection does not give 4H + 3K");
  GradedClass d = omega_m;
  GradedClass delta0 = ax.parse("h + hs + 2*H + K");
  // I_R(delta0) is the cokernel of T_{A_X} -> q^* T_J.
  GradedClass twist = exp_line(d - delta0);
  GradedClass ideal_r = (chern_character(tower.ax.sheaf("TJ")) - chern_character(tax)) * twist;
  // I_M(D) = O(D) - O_M(D).
  GradedClass ideal_m = exp_line(d) - koszul_character(d, a, b);
  return ideal_r - ideal_m;
}

HilbertPolynomial focal_hilbert_polynomial(const spaces::IncidenceTower& tower) {
  return hilbert_polynomial_of_character(tower.ax.variety, focal_dualizing_character(tower),
                                         tower.ax.cls("h"));
}

}  // namespace focal
