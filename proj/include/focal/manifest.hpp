#pragma once

#include <string>
#include <vector>

#include "focal/chow.hpp"
#include "focal/param_poly.hpp"

namespace focal::manifest {

inline constexpr int version = 1;

// A printed value: a formula in the parameters of one context, or a class on a catalog variety.
struct Expectation {
  std::string key;      // reported as paper_ref
  std::string printed;  // formula text as printed, in engine syntax
};

const std::vector<Expectation>& all();
const Expectation& find(const std::string& key);
ParamPoly value(const std::string& key, const ContextPtr& ctx);
GradedClass cls(const std::string& key, const Variety& v);

}  // namespace focal::manifest
