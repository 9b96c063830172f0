#pragma once

#include <map>
#include <string>

#include "focal/chow.hpp"
#include "focal/sheaf.hpp"

namespace focal::spaces {

struct CatalogEntry {
  Variety variety;
  std::map<std::string, Sheaf> sheaves;
  std::map<std::string, GradedClass> classes;

  const Sheaf& sheaf(const std::string& name) const;
  const GradedClass& cls(const std::string& name) const;
};

// Standard parameter contexts.
ContextPtr congruence_context();  // a, b, g, k2, chi, T
ContextPtr degree_context();      // d
ContextPtr curve_context();       // d, p

// P^n with generator h; n = 0 gives the point.
CatalogEntry projective_space(unsigned n, const ContextPtr& ctx = nullptr, const std::string& gen = "h");
CatalogEntry grassmannian_g13(const ContextPtr& ctx = nullptr);

// Abstract surface X in G(1,3) of bidegree (a, b): Q|X has c2 = b*pt, S|X has c2 = a*pt.
CatalogEntry formal_congruence_surface(const ContextPtr& ctx);

struct IncidenceTower {
  CatalogEntry ix;  // P(Q|X), generator h
  CatalogEntry ax;  // P(S|X) over I_X, generator hs
};
IncidenceTower tower_ix_ax(const CatalogEntry& x);

// Tangent bundle of the (1,1) incidence divisor J in P^3 x P^3*, pulled back along h, hs.
Sheaf sheaf_tj_pullback(const Variety& host);

struct JetTower {
  CatalogEntry d1;    // P(Omega_X), generator l1
  CatalogEntry d2;    // P(G), generator l2
  CatalogEntry p3d2;  // P^3 x D^2X with the classes IX, Xp, Xpp
};
JetTower jet_tower(const CatalogEntry& x);

// Smooth surface of degree d in P^3 (parameter d of ctx).
CatalogEntry hypersurface_sigma(const ContextPtr& ctx);
// Y = P(Omega_Sigma(2)) with generator l, sheaf Q and classes Yprime, Y1, Y2.
CatalogEntry tangent_space_y(const CatalogEntry& sigma);
// T = P(Sym^2 Q^dual) over G(1,3) with generator t and the rank four sheaf R.
CatalogEntry bitangent_space_t(const ContextPtr& ctx);

// Second symmetric product of a curve of degree d and genus p with its secant bundle.
// With printed_table the intersection numbers P.Delta = 1 and K = (2-2p)P + Delta/2 are used.
CatalogEntry sym_square_curve(const ContextPtr& ctx, bool printed_table = false);

}  // namespace focal::spaces
