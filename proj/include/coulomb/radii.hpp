#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coulomb/params.hpp"
#include "coulomb/series.hpp"
#include "coulomb/zeros.hpp"

namespace coulomb {

enum class Property { starlike, convex, univalent };

std::string to_string(Property property);
std::string to_string(FunctionKind kind);

struct RadiusQuery {
  CoulombParams params;
  FunctionKind kind;
  Property property;
  double beta = 0.0;
};

// Which algebraic form of the defining equation the bisection runs on.
//   ratio:      the normalized ratio minus beta (r g'/g - beta, ...)
//   polynomial: the equation written in F, F', F'' and reduced to P, P', P'', e.g.
//               r F' - beta (L+1) F  ->  B - beta (L+1) A
//               with A = P, B = (L+1) P + r P', D = L(L+1) P + 2(L+1) r P' + r^2 P''.
enum class EquationForm { ratio, polynomial };

struct RadiusOptions {
  double abscissa_tol = 1e-12;
  EquationForm form = EquationForm::ratio;
  bool fast_path = true;  // beta = 0 starlikeness straight from the zero finder
  std::size_t n_max = kDefaultNMax;
};

struct RadiusResult {
  FunctionKind kind;
  Property property;
  double beta;
  double value;
  double lo;
  double hi;
  double residual;    // defining ratio at `value`, minus beta
  double domain_cap;  // omega (starlike) or omega' / first zero of g' (convex)
  int iterations;
  bool certified;     // false under unsafe parameters
  std::vector<std::string> method_flags;
};

// Radius of starlikeness of order beta: smallest positive root of
// r g'(r)/g(r) = beta (kind g) or r F'(r) - beta (L+1) F(r) = 0 (kind f).
RadiusResult radius_starlike(const RadiusQuery& query, const RadiusOptions& options = {});

// Radius of convexity of order beta: smallest positive root of
// 1 + r g''/g' = beta (kind g) or of
// 1 + r F''/F' - L/(L+1) r F'/F = beta (kind f, needs L > -1/2).
RadiusResult radius_convex(const RadiusQuery& query, const RadiusOptions& options = {});

// Equal to the radius of starlikeness with beta = 0; tagged univalent.
RadiusResult radius_univalence(const CoulombParams& params, FunctionKind kind, const RadiusOptions& options = {});

// Dispatches on query.property.
RadiusResult solve_radius(const RadiusQuery& query, const RadiusOptions& options = {});

// The zero target that caps the search interval for a query.
ZeroTarget cap_target(FunctionKind kind, Property property);

struct DomainCap {
  double positive;  // first positive zero (the bracket's right end)
  double value;     // min(positive, |first negative|)
  double positive_lo;
};

DomainCap domain_cap(const CoulombParams& params, ZeroTarget target);

struct MonotonicityReport {
  bool strictly_decreasing;
  std::size_t samples;
  std::string detail;
};

/// Samples the defining ratio at `samples` equispaced interior points of
/// (0, domain_cap) and reports whether it strictly decreases.
MonotonicityReport ratio_monotonicity(const CoulombParams& params, FunctionKind kind, Property property,
                                      std::size_t samples = 64);

}  // namespace coulomb
