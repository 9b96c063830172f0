#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "focal/chow.hpp"
#include "focal/param_poly.hpp"

namespace focal::oracle {

// Context {c1, c2} for Chern classes of a rank two bundle.
ContextPtr chern_context();

// c_0 .. c_{n+1} of Sym^n of a rank two bundle, from the formal roots i*alpha + (n-i)*beta.
std::vector<ParamPoly> splitting_oracle_sym(unsigned n);
// Coefficient of c1^i c2^j.
Rational coefficient_of(const ParamPoly& ck, unsigned i, unsigned j);

// Polynomial in var through the points (x, y), by divided differences.
ParamPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points, const ContextPtr& ctx,
                      const std::string& var);

// Coefficient of c1^i c2^j in c_k(Sym^n) as a polynomial in var. Fitted on n = 0..8 and
// checked against the oracle on n = 9..12; throws if the check fails.
ParamPoly fit_sym_coefficient(unsigned k, unsigned i, unsigned j, const ContextPtr& ctx, const std::string& var);

enum class Verdict { equal, unequal };

struct IdentityCertificate {
  std::string lhs;
  std::string rhs;
  bool canonical_equal = false;
  bool sampled_equal = false;
  unsigned sample_count = 0;
  std::map<std::string, unsigned> degree_bounds;
  Verdict verdict = Verdict::equal;
  std::optional<Assignment> witness;
  std::optional<Rational> lhs_at_witness;
  std::optional<Rational> rhs_at_witness;

  bool equal() const { return verdict == Verdict::equal; }
  std::string summary() const;
};

// Floor on the number of sample points per parameter; FOCAL_SAMPLES raises it.
unsigned sample_floor();

// Canonical-form subtraction, cross-checked by evaluation on an integer grid with at least
// degree + 1 points per parameter. Throws std::logic_error if the two methods disagree.
IdentityCertificate certify_identity(const ParamPoly& lhs, const ParamPoly& rhs);
IdentityCertificate certify_identity(const GradedClass& lhs, const GradedClass& rhs);

}  // namespace focal::oracle
