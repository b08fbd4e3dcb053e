#pragma once

// Generalized inverse trigonometric/hyperbolic functions, the forward
// sin_p, and the constants pi_p, a_p = pi_p/2, b_p = arctan_p(1),
// c_p = arcsinh_p(1).
//
// Every arc function has two computation paths:
//   * primary: hypergeometric form (returned value),
//       arcsin_p(x)  = x F(1/p,1/p;1+1/p;x^p)
//       arctan_p(x)  = x (1+x^p)^{-1/p} F(1/p,1/p;1+1/p;x^p/(1+x^p))
//       arcsinh_p(x) = x (1+x^p)^{-1/p} F(1,1/p;1+1/p;x^p/(1+x^p))
//       arctanh_p(x) = x F(1,1/p;1+1/p;x^p)
//   * oracle: adaptive quadrature of the defining integral
//     (the *_quad functions below), used by tests and `eval --oracle`.
//
// arcsin_p(1) = pi_p/2 is returned in closed form so the hot path never
// evaluates an improper integral; the improper-quadrature representation
// of pi_p lives in constants_report().
//
// sin_p inverts arcsin_p on [0, pi_p/2] by a bracketed root solve and is
// extended to all of R by sin_p(pi_p - t) = sin_p(t), oddness and
// 2*pi_p-periodicity.  (The natural period consistent with that
// construction is 2*pi_p; this library uses it throughout.)

namespace pmeans::ptrig {

struct PConstants {
  double pi_p;
  double a_p;  // pi_p / 2
  double b_p;  // arctan_p(1)
  double c_p;  // arcsinh_p(1)
};

// Cross-check report: each constant evaluated through its independent
// representations, plus the largest pairwise residual per constant.
struct PConstantsReport {
  PConstants values;
  double pi_closed_form;   // 2*pi / (p*sin(pi/p))
  double pi_beta;          // (2/p) * B(1-1/p, 1/p)
  double pi_quadrature;    // 2 * improper integral of (1-t^p)^{-1/p}
  double b_hypergeometric; // 2^{-1/p} F(1/p,1/p;1+1/p;1/2)
  double b_digamma;        // (psi((1+p)/(2p)) - psi(1/(2p))) / (2p)
  double b_quadrature;     // integral of (1+t^p)^{-1} over [0,1]
  double c_hypergeometric; // 2^{-1/p} F(1,1/p;1+1/p;1/2)
  double c_quadrature;     // integral of (1+t^p)^{-1/p} over [0,1]
  double pi_residual;
  double b_residual;
  double c_residual;
};

void require_p(double p);  // throws DomainError unless p > 1

double arcsin_p(double p, double x);   // x in [0,1]
double arccos_p(double p, double x);   // x in [0,1]; = arcsin_p((1-x^p)^{1/p})
double arctan_p(double p, double x);   // x >= 0
double arcsinh_p(double p, double x);  // x >= 0
double arctanh_p(double p, double x);  // x in [0,1)
double arccosh_p(double p, double t);  // t >= 1; = arcsinh_p((t^p-1)^{1/p})

// Quadrature paths of the defining integrals (independent oracles).
double arcsin_p_quad(double p, double x);
double arctan_p_quad(double p, double x);
double arcsinh_p_quad(double p, double x);
double arctanh_p_quad(double p, double x);

// Forward generalized sine, total on R.
double sin_p(double p, double theta);

// Fast constants (closed form / hypergeometric representations).
PConstants constants(double p);

// All representations with mutual residuals (runs quadrature).
PConstantsReport constants_report(double p);

}  // namespace pmeans::ptrig
