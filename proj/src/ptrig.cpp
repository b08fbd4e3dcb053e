#include "pmeans/ptrig.hpp"

#include <algorithm>
#include <cmath>

#include "pmeans/errors.hpp"
#include "pmeans/quadrature.hpp"
#include "pmeans/special.hpp"

namespace pmeans::ptrig {
namespace {

// Series convergence degrades as the hypergeometric argument approaches 1
// (ratio -> z); past this point the quadrature path is both faster and
// more reliable, so extreme arguments fall back to it.
constexpr double kSeriesArgLimit = 0.999;

double pi_p_closed(double p) { return 2.0 * M_PI / (p * std::sin(M_PI / p)); }

// 1 - (1-s)^p without cancellation for small s.
double one_minus_pow1m(double p, double s) { return -std::expm1(p * std::log1p(-s)); }

// Improper integral of (1-t^p)^{-1/p} over [0,1]: split at 1/2 and reflect
// the singular piece so the distance to the singularity is the variable.
double arcsin_p_quad_improper(double p) {
  const auto smooth = [p](double t) { return std::pow(1.0 - std::pow(t, p), -1.0 / p); };
  const auto reflected = [p](double s) { return std::pow(one_minus_pow1m(p, s), -1.0 / p); };
  const double left = quad::integrate(smooth, 0.0, 0.5).value;
  const double right = quad::integrate_tanh_sinh(reflected, 0.0, 0.5).value;
  return left + right;
}

}  // namespace

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw DomainError("p exponent: requires p > 1");
}

double arcsin_p(double p, double x) {
  require_p(p);
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("arcsin_p: requires x in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 0.5 * pi_p_closed(p);
  const double z = std::pow(x, p);
  if (z > kSeriesArgLimit) return arcsin_p_quad(p, x);
  return x * sf::hyp2f1(1.0 / p, 1.0 / p, 1.0 + 1.0 / p, z);
}

double arccos_p(double p, double x) {
  require_p(p);
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("arccos_p: requires x in [0,1]");
  if (x == 1.0) return 0.0;
  return arcsin_p(p, std::pow(one_minus_pow1m(p, 1.0 - x), 1.0 / p));
}

double arctan_p(double p, double x) {
  require_p(p);
  if (!(x >= 0.0)) throw DomainError("arctan_p: requires x >= 0");
  if (x == 0.0) return 0.0;
  const double xp = std::pow(x, p);
  const double z = xp / (1.0 + xp);
  if (!(z < kSeriesArgLimit)) return arctan_p_quad(p, x);
  return x * std::pow(1.0 + xp, -1.0 / p) * sf::hyp2f1(1.0 / p, 1.0 / p, 1.0 + 1.0 / p, z);
}

double arcsinh_p(double p, double x) {
  require_p(p);
  if (!(x >= 0.0)) throw DomainError("arcsinh_p: requires x >= 0");
  if (x == 0.0) return 0.0;
  const double xp = std::pow(x, p);
  const double z = xp / (1.0 + xp);
  if (!(z < kSeriesArgLimit)) return arcsinh_p_quad(p, x);
  return x * std::pow(1.0 + xp, -1.0 / p) * sf::hyp2f1(1.0, 1.0 / p, 1.0 + 1.0 / p, z);
}

double arctanh_p(double p, double x) {
  require_p(p);
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("arctanh_p: requires x in [0,1)");
  if (x == 0.0) return 0.0;
  const double z = std::pow(x, p);
  if (z > kSeriesArgLimit) return arctanh_p_quad(p, x);
  return x * sf::hyp2f1(1.0, 1.0 / p, 1.0 + 1.0 / p, z);
}

double arccosh_p(double p, double t) {
  require_p(p);
  if (!(t >= 1.0)) throw DomainError("arccosh_p: requires t >= 1");
  if (t == 1.0) return 0.0;
  // t^p - 1 via expm1 keeps precision for t near 1
  const double w = std::pow(std::expm1(p * std::log(t)), 1.0 / p);
  return arcsinh_p(p, w);
}

double arcsin_p_quad(double p, double x) {
  require_p(p);
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("arcsin_p_quad: requires x in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return arcsin_p_quad_improper(p);
  const auto f = [p](double t) { return std::pow(1.0 - std::pow(t, p), -1.0 / p); };
  if (x < 0.999) return quad::integrate(f, 0.0, x).value;
  // keep the near-singular end resolvable: reflect about t = x
  const auto reflected = [p, x](double s) {
    const double t = x - s;
    return std::pow(1.0 - std::pow(t, p), -1.0 / p);
  };
  return quad::integrate(f, 0.0, 0.5).value +
         quad::integrate_tanh_sinh(reflected, 0.0, x - 0.5).value;
}

double arctan_p_quad(double p, double x) {
  require_p(p);
  if (!(x >= 0.0)) throw DomainError("arctan_p_quad: requires x >= 0");
  if (x == 0.0) return 0.0;
  const auto f = [p](double t) { return 1.0 / (1.0 + std::pow(t, p)); };
  return quad::integrate(f, 0.0, x).value;
}

double arcsinh_p_quad(double p, double x) {
  require_p(p);
  if (!(x >= 0.0)) throw DomainError("arcsinh_p_quad: requires x >= 0");
  if (x == 0.0) return 0.0;
  const auto f = [p](double t) { return std::pow(1.0 + std::pow(t, p), -1.0 / p); };
  return quad::integrate(f, 0.0, x).value;
}

double arctanh_p_quad(double p, double x) {
  require_p(p);
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("arctanh_p_quad: requires x in [0,1)");
  if (x == 0.0) return 0.0;
  const auto f = [p](double t) { return 1.0 / (1.0 - std::pow(t, p)); };
  return quad::integrate(f, 0.0, x).value;
}

double sin_p(double p, double theta) {
  require_p(p);
  const double pip = pi_p_closed(p);
  // reduce to [0, 2 pi_p), then fold to [0, pi_p/2]
  double t = std::fmod(theta, 2.0 * pip);
  if (t < 0.0) t += 2.0 * pip;
  double sign = 1.0;
  if (t > pip) {
    t = 2.0 * pip - t;
    sign = -1.0;
  }
  if (t > 0.5 * pip) t = pip - t;
  if (t == 0.0) return 0.0;
  if (t >= 0.5 * pip) return sign;
  const auto g = [p, t](double s) { return arcsin_p(p, s) - t; };
  const double s = quad::find_root(g, 0.0, 1.0, 1e-12);
  return sign * s;
}

PConstants constants(double p) {
  require_p(p);
  PConstants c;
  c.pi_p = pi_p_closed(p);
  c.a_p = 0.5 * c.pi_p;
  c.b_p = std::pow(2.0, -1.0 / p) * sf::hyp2f1(1.0 / p, 1.0 / p, 1.0 + 1.0 / p, 0.5);
  c.c_p = std::pow(2.0, -1.0 / p) * sf::hyp2f1(1.0, 1.0 / p, 1.0 + 1.0 / p, 0.5);
  return c;
}

PConstantsReport constants_report(double p) {
  require_p(p);
  PConstantsReport r;
  r.values = constants(p);

  r.pi_closed_form = r.values.pi_p;
  r.pi_beta = (2.0 / p) * sf::beta(1.0 - 1.0 / p, 1.0 / p);
  r.pi_quadrature = 2.0 * arcsin_p_quad_improper(p);

  r.b_hypergeometric = r.values.b_p;
  r.b_digamma = (sf::digamma((1.0 + p) / (2.0 * p)) - sf::digamma(1.0 / (2.0 * p))) / (2.0 * p);
  r.b_quadrature = arctan_p_quad(p, 1.0);

  r.c_hypergeometric = r.values.c_p;
  r.c_quadrature = arcsinh_p_quad(p, 1.0);

  const auto spread3 = [](double a, double b, double c) {
    return std::max({std::fabs(a - b), std::fabs(a - c), std::fabs(b - c)});
  };
  r.pi_residual = spread3(r.pi_closed_form, r.pi_beta, r.pi_quadrature);
  r.b_residual = spread3(r.b_hypergeometric, r.b_digamma, r.b_quadrature);
  r.c_residual = std::fabs(r.c_hypergeometric - r.c_quadrature);
  return r;
}

}  // namespace pmeans::ptrig
