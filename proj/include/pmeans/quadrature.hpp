#pragma once

// Adaptive numerical integration and bracketed root finding.
//
// Two independent schemes are provided so that every special-function
// identity in this library can be cross-checked against a quadrature
// value computed with a different node family:
//
//   integrate           globally adaptive 7/15 Gauss-Kronrod
//   integrate_tanh_sinh double-exponential (tanh-sinh) levels
//
// Endpoint singularities (1-t)^{-alpha}, alpha < 1 are supported by both
// schemes (all nodes are interior).  For strong singularities the caller
// must arrange the interval so that the singular factor is an explicit
// power of the integration variable (reflect [a,1] to [0,1-a] and write
// 1-t^p as -expm1(p*log1p(-s))); otherwise the node offset is lost to
// rounding once 1-t is below machine epsilon.  The callers in this
// project (pi_p, beta and Euler-integral oracles) all do this.
//
// Semi-infinite integrals are compactified with t = s/(1-s).

#include <functional>

#include "pmeans/errors.hpp"

namespace pmeans::quad {

struct Options {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_panels = 10000;  // subdivision budget for the adaptive scheme
};

struct Result {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

using Fn = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod 7/15 on [lo, hi].
// Throws InvalidDomain for a malformed interval, DomainError if the
// integrand evaluates non-finite at an interior node, NonConvergence if
// the panel budget is exhausted above tolerance.
Result integrate(const Fn& f, double lo, double hi, const Options& opt = {});

// Tanh-sinh (double-exponential) rule on [lo, hi]; independent node
// family used as the cross-check oracle.
Result integrate_tanh_sinh(const Fn& f, double lo, double hi, const Options& opt = {});

// Integral over [0, inf) of f with f(t) = O(t^-beta), beta > 1, via the
// substitution t = s/(1-s) and the adaptive Gauss-Kronrod scheme.
Result integrate_semi_infinite(const Fn& f, const Options& opt = {});

// Same compactification evaluated with the tanh-sinh rule.
Result integrate_semi_infinite_tanh_sinh(const Fn& f, const Options& opt = {});

struct RootBracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

// Evaluates f at the ends and validates the sign change (throws NoSignChange).
RootBracket make_bracket(const Fn& f, double lo, double hi);

// Bracket-preserving bisection with a secant step per iteration.
// Returns x* inside the bracket with |f(x*)| <= tol.
double find_root(const Fn& f, RootBracket bracket, double tol = 1e-12);
double find_root(const Fn& f, double lo, double hi, double tol = 1e-12);

}  // namespace pmeans::quad
