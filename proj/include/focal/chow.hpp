#pragma once

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "focal/param_poly.hpp"

namespace focal {

struct GeneratorSpec {
  std::string name;
  unsigned degree = 1;
};

// Exponent of each ring generator, in generator order.
using Monomial = std::vector<unsigned>;
using RawClass = std::map<Monomial, ParamPoly>;

// Monomials whose weighted degree restricted to `generators` exceeds max_degree vanish.
struct TruncationBlock {
  std::vector<std::size_t> generators;
  unsigned max_degree = 0;
};

struct RewriteRule {
  Monomial lhs;
  RawClass rhs;
};

struct VarietySpec {
  std::string name;
  ContextPtr context;
  std::vector<GeneratorSpec> generators;
  std::vector<RewriteRule> rewrites;  // the first applicable rule wins
  std::vector<TruncationBlock> blocks;
  unsigned dimension = 0;
  std::map<Monomial, ParamPoly> integration;
  RawClass tangent_chern;
  RawClass point_class;

  // Convenience builders working on formula strings over the declared generators.
  Monomial monomial(std::string_view text) const;
  RawClass raw(std::string_view text) const;
  void add_rewrite(std::string_view lhs, std::string_view rhs);
  void add_integral(std::string_view monomial, std::string_view value);
};

struct VarietyImpl;
class GradedClass;
class Variety;

struct BundleData;

class Variety {
 public:
  Variety() = default;

  const std::string& name() const;
  unsigned dimension() const;
  const ContextPtr& context() const;
  const std::vector<GeneratorSpec>& generators() const;
  const std::vector<RewriteRule>& rewrites() const;
  const std::vector<TruncationBlock>& blocks() const;
  const std::map<Monomial, ParamPoly>& integration_table() const;
  std::optional<std::size_t> generator_index(std::string_view name) const;

  GradedClass zero() const;
  GradedClass one() const;
  GradedClass constant(const ParamPoly& c) const;
  GradedClass gen(std::string_view name) const;
  GradedClass param(std::string_view name) const;
  GradedClass normal_form(const RawClass& raw) const;
  // Formula over generator names and context parameters, e.g. "h^2 - H*h + b*pt".
  GradedClass parse(std::string_view text) const;
  GradedClass point_class() const;
  GradedClass tangent_chern() const;
  ParamPoly integrate(const GradedClass& c) const;

  // Transports a class from this variety or any variety it was built from.
  GradedClass pullback(const GradedClass& c) const;
  bool derives_from(const Variety& other) const;

  const BundleData* bundle() const;
  // Generator names of the given factor after renaming (products only).
  std::map<std::string, std::string> factor_renaming(std::size_t factor) const;

  friend bool operator==(const Variety& x, const Variety& y) { return x.impl_ == y.impl_; }

  const std::shared_ptr<const VarietyImpl>& impl() const { return impl_; }
  explicit Variety(std::shared_ptr<const VarietyImpl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const VarietyImpl> impl_;
};

// Element of the Chow ring of a variety, stored in normal form.
class GradedClass {
 public:
  GradedClass() = default;

  Variety variety() const { return Variety(ring_); }
  const RawClass& terms() const { return terms_; }

  GradedClass& operator+=(const GradedClass& o);
  GradedClass& operator-=(const GradedClass& o);
  GradedClass& operator*=(const GradedClass& o);
  friend GradedClass operator+(GradedClass x, const GradedClass& y) { return x += y; }
  friend GradedClass operator-(GradedClass x, const GradedClass& y) { return x -= y; }
  friend GradedClass operator*(GradedClass x, const GradedClass& y) { return x *= y; }
  GradedClass operator-() const;
  GradedClass scaled(const ParamPoly& c) const;

  friend bool operator==(const GradedClass& x, const GradedClass& y);

  bool is_zero() const { return terms_.empty(); }
  GradedClass component(unsigned degree) const;
  // Drops components above the given degree.
  GradedClass truncated(unsigned degree) const;
  ParamPoly degree_zero() const;
  // Largest degree with a nonzero component; -1 for the zero class.
  int top_degree() const;
  GradedClass substitute(const Assignment& assignment) const;

  std::string to_string() const;

 private:
  friend struct VarietyImpl;
  friend class Variety;
  GradedClass(std::shared_ptr<const VarietyImpl> ring, RawClass terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}
  void require_same_ring(const GradedClass& o) const;

  std::shared_ptr<const VarietyImpl> ring_;
  RawClass terms_;
};

GradedClass pow(const GradedClass& x, unsigned e);
std::ostream& operator<<(std::ostream& os, const GradedClass& c);

// Data remembered by a projective bundle P(E) -> base.
struct BundleData {
  Variety base;
  unsigned rank = 0;
  std::vector<GradedClass> chern;  // c_0 .. c_rank of E on the base
  std::size_t zeta = 0;            // index of the tautological generator
};

Variety build_variety(const VarietySpec& spec);
Variety product_variety(const Variety& v, const Variety& w);
// Rank-one quotients of E; chern lists c_0..c_r of E on the base.
Variety projective_bundle(const Variety& base, const std::vector<GradedClass>& chern,
                          std::string_view gen_name);
// Segre-class pushforward to the base.
GradedClass pushforward(const Variety& bundle, const GradedClass& c);
// pi_*(zeta^k) = s_{k-r+1}(E), evaluated from the Segre series only.
GradedClass segre_pushforward_of_power(const Variety& bundle, unsigned k);

// Inverse of a total class with unit degree-zero part, truncated at the dimension.
GradedClass series_inverse(const GradedClass& c);
// Chern classes of E tensor L for a line class t; rank may be symbolic.
std::vector<GradedClass> twist_chern(const std::vector<GradedClass>& chern, const ParamPoly& rank,
                                     const GradedClass& t, unsigned up_to);
// Splits a total class into components c_0..c_n.
std::vector<GradedClass> components(const GradedClass& total, unsigned n);
GradedClass total(const std::vector<GradedClass>& comps);

}  // namespace focal
