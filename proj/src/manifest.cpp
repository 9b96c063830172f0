#include "focal/manifest.hpp"

#include <stdexcept>

namespace focal::manifest {

// Every printed value the suite compares against, keyed by where it is stated.
// In classes, c2(S|X) reads a*pt and c2(T_X) reads (12*chi - k2)*pt.
const std::vector<Expectation>& all() {
  static const std::vector<Expectation> table = {
      // Congruence surface and its focal surface.
      {"incidence: c1(T_AX)", "2*h + 2*hs - 2*H - K"},
      {"incidence: c2(T_AX)", "h^2 + 4*h*hs + hs^2 - 3*h*H - 3*hs*H - 2*h*K - 2*hs*K + 2*H^2 + 2*H*K + (12*chi - k2)*pt"},
      {"incidence: c1(T_J)", "3*h + 3*hs"},
      {"incidence: c2(T_J)", "3*h^2 + 10*h*hs + 3*hs^2"},
      {"ramification: class of R", "2*h*hs + h*H + hs*H + h*K + hs*K + 2*H^2 + 2*H*K + K^2 - (12*chi - k2)*pt"},
      {"focal surface: linked class", "2*h*hs + h*H + hs*H + h*K + hs*K - H^2 + (12*chi - k2)*pt"},
      {"focal surface: omega of the complete intersection", "4*H + 3*K"},
      {"focal surface: degree", "2*a + 2*g - 2"},
      {"focal surface: class", "2*b + 2*g - 2"},
      {"focal surface: mu1", "a + b + 4*g - 4 - k2 + 12*chi"},
      {"focal surface: sectional genus", "9*g - 8 - b + k2"},
      {"focal surface: chi(O)", "6*g - 6 - a - b + k2 + 2*chi"},
      {"kummer: focal degree", "4"},
      {"kummer: fundamental points", "16"},
      {"elliptic quartic bisecants: focal degree", "8"},
      // Jets.
      {"jets: [I_X]", "h^2 + h*H + a*pt"},
      {"jets: [X']", "l1^2 + 2*l1*h + l1*H + h^2 + h*H + a*pt"},
      {"jets: [X'']", "l2^2 + 2*l1*l2 + 2*l2*h + l2*H + l1^2 + 2*l1*h + l1*H + h^2 + h*H + a*pt"},
      {"jets: cuspidal curve degree", "3*a - 3*b + 18*g - 18 + 3*k2 - 12*chi"},
      {"jets: nodal curve degree", "2*a^2 - 10*a + 4*b + 4*a*g + 2*g^2 - 34*g + 32 - 4*k2 + 12*chi"},
      {"jets: ruled surface degree", "4*a + 4*b + 12*g - 12"},
      {"jets: fundamental-point lines at (2,3,1)", "20"},
      // Bisecants to a curve of degree d and genus p.
      {"bisecants: order", "1/2*(d-1)*(d-2) - p"},
      {"bisecants: class", "1/2*d*(d-1)"},
      {"bisecants: sectional genus", "1/2*(d-2)*(d-3+2*p)"},
      {"bisecants: K^2", "4*p^2 - 13*p + 9"},
      {"bisecants: chi(O)", "1/2*(p-1)*(p-2)"},
      {"bisecants: focal degree", "2*(d-3)*(d-1+p)"},
      {"bisecants: P.Delta", "1"},
      {"bisecants: K as printed", "(2-2*p)*P + 1/2*Delta"},
      {"elliptic quartic bisecants: order", "2"},
      {"elliptic quartic bisecants: class", "6"},
      {"elliptic quartic bisecants: sectional genus", "3"},
      {"twisted cubic bisecants: order", "1"},
      {"twisted cubic bisecants: class", "3"},
      // Tangent lines to a surface of degree d.
      {"tangent lines: c1(Q)", "l"},
      {"tangent lines: [Y']", "4*(d-2)*h"},
      {"tangent lines: [Y1]", "(d+2)*(d-3)*l - 4*(d-3)*h"},
      {"tangent lines: [Y2]", "2*l + (d-4)*h"},
      {"tangent lines: c2(Q) on Y1", "d*(d-2)*(d-3)*(d+3)"},
      {"flexes: order", "d*(d-1)*(d-2)"},
      {"flexes: class", "3*d*(d-2)"},
      {"flexes: sectional genus", "5*d^3 - 18*d^2 + 14*d + 1"},
      {"flexes: double-point formula", "d*(d-3)*(d^4 - 3*d^3 + 13*d^2 - 48*d + 40)"},
      {"flexes: canonical class of Y2", "(3*d-8)*h"},
      {"flexes: multiplicity at a line of the surface", "3*(d-2)"},
      {"bitangents: order", "1/2*d*(d-1)*(d-2)*(d-3)"},
      {"bitangents: class", "1/2*d*(d-2)*(d-3)*(d+3)"},
      {"bitangents: sectional genus", "d^5 - 5/2*d^4 - 35/2*d^3 + 60*d^2 - 36*d + 1"},
      {"bitangents: double-point formula", "1/2*d*(d-4)*(d^6 - 4*d^5 + 2*d^4 - 20*d^3 + 9*d^2 + 396*d - 540)"},
      {"bitangents: quartic bidegree order", "12"},
      {"bitangents: quartic bidegree class", "28"},
      {"symmetric powers: c1 coefficient c1", "1/2*d*(d+1)"},
      {"symmetric powers: c2 coefficient c1^2", "1/24*d*(d-1)*(d+1)*(3*d+2)"},
      {"symmetric powers: c2 coefficient c2", "1/6*d*(d+1)*(d+2)"},
      {"symmetric powers: c3 coefficient c1^3", "1/48*d^2*(d-1)*(d-2)*(d+1)^2"},
      {"symmetric powers: c3 coefficient c1*c2", "1/12*d^2*(d-1)*(d+2)*(d+1)"},
      {"symmetric powers: c4 coefficient c1^4", "1/1570*d*(d-1)*(d-2)*(d-3)*(d+1)*(15*d^3 + 15*d^2 - 10*d - 8)"},
      {"symmetric powers: c4 coefficient c1^2*c2", "1/720*d*(d-1)*(d-2)*(d+2)*(d+1)*(15*d^2 - 5*d - 12)"},
      {"symmetric powers: c4 coefficient c2^2", "1/360*d*(d-1)*(d-2)*(d+1)*(5*d+12)"},
      // Focal lines.
      {"bitangents: singular curve degree", "d*(d-3)*(d-4)*(d^2 + 6*d - 4)"},
      {"flexes: singular curve degree", "2*d*(d-3)*(3*d-2)"},
      {"bitangents: singular curve counted twice", "2*d*(d-3)*(d-4)*(d^2 + 6*d - 4)"},
      {"flexes: parabolic inflectional lines", "2*d*(d-2)*(3*d-4)"},
      {"flexes: parabolic inflectional lines, proof line", "2*d*(d-4)*(3*d-4)"},
      {"bitangents: total focal degree", "d*(d-3)*(2*d^3 + 2*d^2 - 35*d + 26)"},
      {"bitangents: extra focal components", "2*d*(d-3)*(d^3 + d^2 - 18*d + 12)"},
      {"flexes: total focal degree", "2*d*(6*d^2 - 21*d + 16)"},
      {"flexes: extra focal components", "2*d*(6*d^2 - 21*d + 14)"},
      {"bitangents: stationary bitangent surface", "d*(d-2)*(d-3)*(d^2 + 2*d - 4)"},
      {"bitangents: tritangent curve", "1/3*d*(d-3)*(d-4)*(d-5)*(d^2 + 3*d - 2)"},
      {"bitangents: hyperflex lines", "5*d*(d-4)*(7*d-12)"},
      // Plucker bidegree.
      {"plucker: first relation", "mu1*(mu1-1) - 2*b - 3*i"},
      {"plucker: second relation", "3*mu1*(mu1-2) - 6*b - 8*i"},
      {"plucker: class", "1/2*(mu1^2 - 3*kappa) + 4*d - 5*mu1"},
      {"plucker: order", "1/2*(mu1^2 - 3*kappastar) + 4*dstar - 5*mu1"},
      {"tangent developable: class", "1"},
      {"tangent developable: order from the formula", "-21/2"},
      {"elliptic quartic dual: class", "2"},
      {"elliptic quartic dual: focal degree", "16"},
      {"smooth quartic: bitangent class", "28"},
      {"quartic dual: cuspidal curve degree", "96"},
      {"quartic dual: focal degree", "16"},
      {"quartic dual: focal multiplicity times degree", "6*36"},
  };
  return table;
}

const Expectation& find(const std::string& key) {
  for (const auto& e : all())
    if (e.key == key) return e;
  throw std::out_of_range("no expectation recorded under " + key);
}

ParamPoly value(const std::string& key, const ContextPtr& ctx) { return ParamPoly::parse(ctx, find(key).printed); }

GradedClass cls(const std::string& key, const Variety& v) { return v.parse(find(key).printed); }

}  // namespace focal::manifest
