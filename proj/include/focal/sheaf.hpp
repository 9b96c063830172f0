#pragma once

#include <optional>
#include <vector>

#include "focal/chow.hpp"

namespace focal {

// Rank (concrete or symbolic) and total Chern class on a host variety.
// Components above known_to are unknown and must not be used.
class Sheaf {
 public:
  Sheaf(ParamPoly rank, GradedClass total_chern);
  Sheaf(ParamPoly rank, GradedClass total_chern, unsigned known_to);

  static Sheaf trivial(const Variety& host, long rank);
  static Sheaf line(const GradedClass& c1);
  static Sheaf from_components(ParamPoly rank, const std::vector<GradedClass>& comps);
  static Sheaf tangent(const Variety& v);

  const ParamPoly& rank() const { return rank_; }
  std::optional<long> concrete_rank() const;
  long require_concrete_rank(const char* what) const;
  const GradedClass& total_chern() const { return chern_; }
  GradedClass c(unsigned k) const;
  std::vector<GradedClass> chern_classes(unsigned up_to) const;
  Variety host() const { return chern_.variety(); }
  unsigned known_to() const { return known_to_; }

  Sheaf pullback(const Variety& target) const;

 private:
  ParamPoly rank_;
  GradedClass chern_;
  unsigned known_to_;
};

// Formal difference plus - minus on one host.
struct VirtualSheaf {
  Sheaf plus;
  Sheaf minus;
  Sheaf flatten() const;
};

enum class CombineOp { sum, difference, tensor };

Sheaf dual(const Sheaf& e);
Sheaf twist_by_line(const Sheaf& e, const GradedClass& t, unsigned up_to);
Sheaf twist_by_line(const Sheaf& e, const GradedClass& t);
Sheaf combine(const Sheaf& e, const Sheaf& f, CombineOp op);
Sheaf direct_sum(const Sheaf& e, const Sheaf& f);
// f - e
Sheaf difference(const Sheaf& f, const Sheaf& e);
Sheaf tensor(const Sheaf& e, const Sheaf& f);
Sheaf determinant(const Sheaf& e);

Sheaf sym_power_concrete(const Sheaf& e, unsigned n);
// Closed forms for c_1..c_4 of Sym^n of a rank two sheaf, n a polynomial in the parameters.
Sheaf sym_power_rank2_symbolic(const Sheaf& e, const ParamPoly& n, unsigned up_to = 4);
// Coefficient of c1^i c2^j in c_k(Sym^n E) from the closed forms, as a polynomial in n.
ParamPoly sym_power_closed_form(unsigned k, unsigned i, unsigned j, const ParamPoly& n);

// Power sums p_1..p_n of the Chern roots from c_1..c_n (Newton identities).
std::vector<GradedClass> power_sums(const std::vector<GradedClass>& chern, unsigned n);
// Inverse direction: c_0..c_n from the rank and p_1..p_n.
std::vector<GradedClass> chern_from_power_sums(const std::vector<GradedClass>& p, unsigned n);

GradedClass chern_character(const Sheaf& e, unsigned up_to);
GradedClass chern_character(const Sheaf& e);
Sheaf chern_from_character(const GradedClass& ch, long rank);
GradedClass todd(const Sheaf& e, unsigned up_to);
GradedClass todd(const Sheaf& e);
// Coefficients of log(x / (1 - exp(-x))) up to x^n.
std::vector<Rational> log_todd_series(unsigned n);

// Degeneracy class of a map E -> F of ranks e, f dropping to rank r.
GradedClass porteous(const VirtualSheaf& v, unsigned e, unsigned f, unsigned r);

// T_{P(E)/base} on a variety built by projective_bundle.
Sheaf relative_tangent_of_bundle(const Variety& bundle);

GradedClass determinant(const std::vector<std::vector<GradedClass>>& m);

}  // namespace focal
