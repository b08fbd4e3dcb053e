#include "pmeans/means.hpp"

#include <cmath>

#include "pmeans/errors.hpp"
#include "pmeans/ptrig.hpp"
#include "pmeans/quadrature.hpp"
#include "pmeans/special.hpp"

namespace pmeans::means {

MeanInput::MeanInput(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError("MeanInput: requires finite a > 0 and b > 0");
  a_ = std::max(a, b);
  b_ = std::min(a, b);
  A_ = 0.5 * (a_ + b_);
  x_ = (a_ - b_) / (a_ + b_);
}

double classical_mean(Classical kind, const MeanInput& in) {
  const double a = in.a(), b = in.b(), x = in.x(), A = in.arithmetic();
  if (a == b) return a;
  switch (kind) {
    case Classical::A: return A;
    case Classical::G: return std::sqrt(a * b);
    case Classical::L: return (a - b) / std::log1p((a - b) / b);
    case Classical::P: return A * x / std::asin(x);
    case Classical::T: return A * x / std::atan(x);
    case Classical::M: return A * x / std::asinh(x);
    case Classical::Q: return std::sqrt(0.5 * (a * a + b * b));
  }
  throw DomainError("classical_mean: unknown kind");
}

double power_mean(double p, const MeanInput& in) {
  if (in.a() == in.b()) return in.a();
  if (p == 0.0) return std::sqrt(in.a() * in.b());
  return std::pow(0.5 * (std::pow(in.a(), p) + std::pow(in.b(), p)), 1.0 / p);
}

double agm(const MeanInput& in, double tol) {
  if (!(tol > 0.0)) throw DomainError("agm: tol must be positive");
  double a = in.a(), b = in.b();
  while (a - b > tol * a) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

double bhatia_li_normalizer(double p) {
  if (!(p > 0.0)) throw DomainError("bhatia_li: requires p > 0");
  const auto f = [p](double t) { return std::pow(1.0 + std::pow(t, p), -2.0 / p); };
  return quad::integrate_semi_infinite(f).value;
}

double bhatia_li(double p, const MeanInput& in) {
  if (!(p > 0.0)) throw DomainError("bhatia_li: requires p > 0");
  if (in.a() == in.b()) return in.a();
  // scale b to 1 (homogeneity) to keep t^p+a^p well inside range
  const double r = in.a() / in.b();
  const auto f = [p, r](double t) {
    const double tp = std::pow(t, p);
    return std::pow((tp + std::pow(r, p)) * (tp + 1.0), -1.0 / p);
  };
  const double denom = quad::integrate_semi_infinite(f).value;
  return in.b() * bhatia_li_normalizer(p) / denom;
}

double schwab_borchardt(double p, double x, double y) {
  ptrig::require_p(p);
  if (!(x > 0.0) || !(y > 0.0))
    throw DomainError("schwab_borchardt: requires x > 0 and y > 0");
  if (x == y) return x;
  const double z = 1.0 - std::pow(x / y, p);
  return y / sf::hyp2f1(1.0 / p, 1.0 / p, 1.0 + 1.0 / p, z);
}

double neuman_mean(NeumanKind kind, double p, const MeanInput& in) {
  ptrig::require_p(p);
  if (in.a() == in.b()) return in.a();
  const double ah = std::pow(in.a(), 0.5 * p);
  const double bh = std::pow(in.b(), 0.5 * p);
  const double v = (ah - bh) / (ah + bh);
  const double scale = power_mean(0.5 * p, in);
  switch (kind) {
    case NeumanKind::L: return scale * v / ptrig::arctanh_p(p, v);
    case NeumanKind::P: return scale * v / ptrig::arcsin_p(p, v);
    case NeumanKind::T: return scale * v / ptrig::arctan_p(p, v);
    case NeumanKind::M: return scale * v / ptrig::arcsinh_p(p, v);
  }
  throw DomainError("neuman_mean: unknown kind");
}

double tilde_ratio(TildeKind kind, double p, double x) {
  ptrig::require_p(p);
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("tilde_ratio: requires x in [0,1)");
  if (x == 0.0) return 1.0;
  switch (kind) {
    case TildeKind::P: return x / ptrig::arcsin_p(p, x);
    case TildeKind::T: return x / ptrig::arctan_p(p, x);
    case TildeKind::L: return x / ptrig::arctanh_p(p, x);
    case TildeKind::M: return x / ptrig::arcsinh_p(p, x);
  }
  throw DomainError("tilde_ratio: unknown kind");
}

double tilde_mean(TildeKind kind, double p, const MeanInput& in) {
  return in.arithmetic() * tilde_ratio(kind, p, in.x());
}

const char* to_string(Classical kind) {
  switch (kind) {
    case Classical::A: return "A";
    case Classical::G: return "G";
    case Classical::L: return "L";
    case Classical::P: return "P";
    case Classical::T: return "T";
    case Classical::M: return "M";
    case Classical::Q: return "Q";
  }
  return "?";
}

const char* to_string(NeumanKind kind) {
  switch (kind) {
    case NeumanKind::L: return "NeumanL_p";
    case NeumanKind::P: return "NeumanP_p";
    case NeumanKind::T: return "NeumanT_p";
    case NeumanKind::M: return "NeumanM_p";
  }
  return "?";
}

const char* to_string(TildeKind kind) {
  switch (kind) {
    case TildeKind::P: return "TildeP_p";
    case TildeKind::T: return "TildeT_p";
    case TildeKind::L: return "TildeL_p";
    case TildeKind::M: return "TildeM_p";
  }
  return "?";
}

}  // namespace pmeans::means
