#pragma once

// Classical special functions: gamma, digamma, beta, incomplete beta and
// the Gauss hypergeometric function 2F1, each with an independent
// representation available for cross-validation.
//
// Conventions:
//  * gamma/digamma/beta are restricted to positive arguments (nothing in
//    this project needs the reflection formulas).
//  * beta_incomplete is the NORMALIZED (regularized) incomplete beta
//    I_s(a,b) = int_0^s u^{a-1}(1-u)^{b-1} du / B(a,b), so that
//    int_0^s u^{a-1}(1-u)^{b-1} du = B(a,b) * beta_incomplete(a,b,s).
//    Conventions differ across libraries; everything here uses the
//    normalized one.

namespace pmeans::sf {

// Gamma(x) for x > 0 (Lanczos approximation, relative error ~1e-15).
double gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

// B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y), exactly by construction.
double beta(double x, double y);

// Normalized incomplete beta I_s(a,b), s in [0,1]; monotone in s.
double beta_incomplete(double a, double b, double s);

// 2F1(a,b;c;z) for z < 1, c not a non-positive integer.
// Power series on [0,1); for z < 0 the Pfaff transformation
// F(a,b;c;z) = (1-z)^{-b} F(b, c-a; c; -z/(1-z)) moves the argument into
// (0,1) where the series has positive terms for the parameter families
// used here.  (For z in (1/2,1) that transformation leaves the unit disk,
// so the series is summed directly; it still converges with ratio z.)
double hyp2f1(double a, double b, double c, double z);

// Raw power series, |z| < 1.  Exposed for path-consistency tests.
double hyp2f1_series(double a, double b, double c, double z);

// Euler-integral representation evaluated by quadrature; requires
// c > b > 0 and z < 1.  Independent oracle for the series paths.
double hyp2f1_integral(double a, double b, double c, double z);

}  // namespace pmeans::sf
