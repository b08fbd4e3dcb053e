#include "pmeans/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "pmeans/errors.hpp"
#include "pmeans/means.hpp"
#include "pmeans/ptrig.hpp"
#include "pmeans/quadrature.hpp"
#include "pmeans/special.hpp"

namespace pmeans::ineq {

namespace {

using means::TildeKind;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double tilde(TildeKind k, double p, double x) { return means::tilde_ratio(k, p, x); }

ClaimReport make(std::string id, const char* variant, double p, double q, double x,
                 double lhs, double rhs, const Tolerances& tol) {
  ClaimReport r;
  r.claim_id = std::move(id);
  r.variant = variant;
  r.p = p;
  r.q = q;
  r.x = x;
  r.a = std::isnan(x) ? kNaN : 1.0 + x;
  r.b = std::isnan(x) ? kNaN : 1.0 - x;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  if (r.margin < -tol.equality)
    r.status = Status::violated;
  else if (r.margin <= tol.equality)
    r.status = Status::holds_equality;
  else
    r.status = Status::holds;
  return r;
}

double integ(const quad::Fn& f, double x) { return quad::integrate(f, 0.0, x).value; }

// base integrands of the lemma claims
quad::Fn f_tan(double p) {  // (1+t^p)^{-1},   decreasing
  return [p](double t) { return 1.0 / (1.0 + std::pow(t, p)); };
}
quad::Fn f_tanh(double p) {  // (1-t^p)^{-1},  increasing
  return [p](double t) { return 1.0 / (1.0 - std::pow(t, p)); };
}
quad::Fn f_sin(double p) {  // (1-t^p)^{-1/p}, increasing
  return [p](double t) { return std::pow(1.0 - std::pow(t, p), -1.0 / p); };
}
quad::Fn f_sinh(double p) {  // (1+t^p)^{-1/p}, decreasing
  return [p](double t) { return std::pow(1.0 + std::pow(t, p), -1.0 / p); };
}

// Polya-Szego constant for bounds 0<alpha<=f<=A, 0<beta<=g<=B:
// K = ( sqrt(AB/(alpha beta)) + sqrt(alpha beta/(AB)) )^2 / 4.
double polya_szego_constant(double alpha, double A, double beta, double B) {
  const double rho = (A * B) / (alpha * beta);
  const double s = std::sqrt(rho);
  return 0.25 * (s + 1.0 / s) * (s + 1.0 / s);
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::holds_equality: return "holds-with-equality";
    case Status::violated: return "violated";
    case Status::error: return "error";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "holds") return Status::holds;
  if (s == "holds-with-equality") return Status::holds_equality;
  if (s == "violated") return Status::violated;
  if (s == "error") return Status::error;
  throw std::invalid_argument("unknown status: " + s);
}

std::vector<double> Axis::points() const {
  if (count <= 0) return {};
  if (count == 1) return {lo};
  if (!(lo <= hi)) throw InvalidDomain("axis: requires lo <= hi");
  std::vector<double> pts;
  pts.reserve(count);
  if (log_spacing) {
    if (!(lo > 0.0)) throw InvalidDomain("axis: log spacing requires lo > 0");
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < count; ++i)
      pts.push_back(std::exp(llo + (lhi - llo) * i / (count - 1)));
  } else {
    for (int i = 0; i < count; ++i) pts.push_back(lo + (hi - lo) * i / (count - 1));
  }
  return pts;
}

double u2(double p, double q, double x) {
  return q * std::pow(x, q - p) + (q - p) * std::pow(x, q) - p;
}

double solve_x0(double p, double q) {
  if (!(1.0 < p && p < q)) throw DomainError("solve_x0: requires 1 < p < q");
  const auto f = [p, q](double x) { return u2(p, q, x); };
  return quad::find_root(f, 0.0, 1.0, 1e-12);
}

double solve_f4_flip(double p, double q) {
  if (!(1.0 < p && p < q)) throw DomainError("solve_f4_flip: requires 1 < p < q");
  const auto psi = [p, q](double x) {
    return (1.0 + std::pow(x, q)) * ptrig::arctan_p(q, x) -
           (1.0 + std::pow(x, p)) * ptrig::arctan_p(p, x);
  };
  const double x0 = solve_x0(p, q);
  if (psi(x0) < 0.0 && psi(1.0) > 0.0) return quad::find_root(psi, x0, 1.0, 1e-13);
  // fallback: ladder scan for the sign change
  double prev_x = 1e-3, prev_f = psi(prev_x);
  for (int i = 1; i <= 1000; ++i) {
    const double xi = 1e-3 + (1.0 - 1e-3) * i / 1000.0;
    const double fi = psi(xi);
    if (prev_f < 0.0 && fi >= 0.0) return quad::find_root(psi, prev_x, xi, 1e-13);
    prev_x = xi;
    prev_f = fi;
  }
  throw NonConvergence("solve_f4_flip: no sign change located");
}

double solve_t_ratio_crossing(double p, double q) {
  if (!(1.0 < p && p < q)) throw DomainError("solve_t_ratio_crossing: requires 1 < p < q");
  const double bp = ptrig::constants(p).b_p;
  const double bq = ptrig::constants(q).b_p;
  const auto chi = [p, q, bp, bq](double x) {
    return bp * ptrig::arctan_p(q, x) - bq * ptrig::arctan_p(p, x);
  };
  // chi < 0 near 0 and chi -> 0^+ at 1; locate the interior crossing
  double prev_x = 1e-3, prev_f = chi(prev_x);
  for (int i = 1; i <= 2000; ++i) {
    const double xi = 1e-3 + (0.9999 - 1e-3) * i / 2000.0;
    const double fi = chi(xi);
    if (prev_f < 0.0 && fi >= 0.0) return quad::find_root(chi, prev_x, xi, 1e-14);
    prev_x = xi;
    prev_f = fi;
  }
  throw NonConvergence("solve_t_ratio_crossing: no sign change located");
}

std::vector<ClaimReport> check_chain(double p, double x, const Tolerances& tol) {
  const double Lt = tilde(TildeKind::L, p, x);
  const double Pt = tilde(TildeKind::P, p, x);
  const double Mt = tilde(TildeKind::M, p, x);
  const double Tt = tilde(TildeKind::T, p, x);
  const double Lcl = x == 0.0 ? 1.0 : x / std::atanh(x);
  const double Qcl = std::sqrt(1.0 + x * x);
  std::vector<ClaimReport> out;
  out.push_back(make("T1.1", kVariantDerived, p, kNaN, x, Lcl, Lt, tol));
  out.push_back(make("T1.2", kVariantDerived, p, kNaN, x, Lt, Pt, tol));
  out.push_back(make("T1.3", kVariantDerived, p, kNaN, x, Pt, 1.0, tol));
  out.push_back(make("T1.4", kVariantDerived, p, kNaN, x, 1.0, Mt, tol));
  out.push_back(make("T1.5", kVariantDerived, p, kNaN, x, Mt, Tt, tol));
  out.push_back(make("T1.6", kVariantDerived, p, kNaN, x, Tt, Qcl, tol));
  return out;
}

namespace {

double arc_ratio(int pair_index, double p, double q, double x) {
  switch (pair_index) {
    case 1: return ptrig::arcsin_p(p, x) / ptrig::arcsin_p(q, x);
    case 2: return ptrig::arcsinh_p(p, x) / ptrig::arcsinh_p(q, x);
    case 3: return ptrig::arctanh_p(p, x) / ptrig::arctanh_p(q, x);
    case 4: return ptrig::arctan_p(p, x) / ptrig::arctan_p(q, x);
  }
  throw DomainError("ratio pair index must be 1..4");
}

void monotone_cells(std::vector<ClaimReport>& out, const std::string& id, const char* variant,
                    double p, double q, const std::vector<double>& xs,
                    const std::vector<double>& fs, bool increasing_claim, double split,
                    const Tolerances& tol) {
  // split = NaN: one direction everywhere.  Otherwise decreasing left of
  // split, increasing right; the cell containing the split is exempt.
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    bool increasing = increasing_claim;
    if (!std::isnan(split)) {
      if (xs[i] < split && xs[i + 1] > split) continue;  // flip cell
      increasing = xs[i] >= split;
    }
    const double lhs = increasing ? fs[i] : fs[i + 1];
    const double rhs = increasing ? fs[i + 1] : fs[i];
    out.push_back(make(id, variant, p, q, xs[i], lhs, rhs, tol));
  }
}

}  // namespace

std::vector<ClaimReport> check_ratio_monotonicity(int pair_index, double p, double q,
                                                  const std::vector<double>& xs_in,
                                                  const Tolerances& tol) {
  if (!(1.0 < p && p < q)) throw DomainError("check_ratio_monotonicity: requires 1 < p < q");
  std::vector<double> xs = xs_in;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> fs;
  fs.reserve(xs.size());
  for (double x : xs) fs.push_back(arc_ratio(pair_index, p, q, x));

  std::vector<ClaimReport> out;
  const std::string id = "T2a." + std::to_string(pair_index);
  switch (pair_index) {
    case 1:
    case 3:
      monotone_cells(out, id, kVariantDerived, p, q, xs, fs, true, kNaN, tol);
      break;
    case 2:
      monotone_cells(out, id, kVariantDerived, p, q, xs, fs, false, kNaN, tol);
      break;
    case 4: {
      const double x1 = solve_f4_flip(p, q);
      monotone_cells(out, id, kVariantDerived, p, q, xs, fs, false, x1, tol);
      const double x0 = solve_x0(p, q);
      monotone_cells(out, id, kVariantPrinted, p, q, xs, fs, false, x0, tol);
      break;
    }
    default:
      throw DomainError("check_ratio_monotonicity: pair index must be 1..4");
  }
  return out;
}

std::vector<ClaimReport> check_x0(double p, double q, const Tolerances& tol) {
  const double x0 = solve_x0(p, q);
  const double residual = std::fabs(u2(p, q, x0));
  std::vector<ClaimReport> out;
  out.push_back(make("T2b.1", kVariantDerived, p, q, x0, residual, 1e-12, tol));
  return out;
}

namespace {

std::vector<ClaimReport> ratio_bounds_at(double p, double q, double x, double x0, double xc,
                                         const Tolerances& tol) {
  const auto cp = ptrig::constants(p);
  const auto cq = ptrig::constants(q);
  const double rP = tilde(TildeKind::P, p, x) / tilde(TildeKind::P, q, x);
  const double rM = tilde(TildeKind::M, p, x) / tilde(TildeKind::M, q, x);
  const double rL = tilde(TildeKind::L, p, x) / tilde(TildeKind::L, q, x);
  const double rT = tilde(TildeKind::T, p, x) / tilde(TildeKind::T, q, x);
  std::vector<ClaimReport> out;
  out.push_back(make("T2c.1", kVariantDerived, p, q, x, cq.pi_p / cp.pi_p, rP, tol));
  out.push_back(make("T2c.2", kVariantDerived, p, q, x, rP, 1.0, tol));
  out.push_back(make("T2c.3", kVariantDerived, p, q, x, 1.0, rM, tol));
  out.push_back(make("T2c.4", kVariantDerived, p, q, x, rM, cq.c_p / cp.c_p, tol));
  // stated with the subscripts L_p/L_q, but Lt is increasing in its order
  // (arctanh_p decreases in p), so that ratio is < 1; the derivation
  // supports the reciprocal.
  out.push_back(make("T2c.5", kVariantDerived, p, q, x, 1.0, 1.0 / rL, tol));
  out.push_back(make("T2c.5", kVariantPrinted, p, q, x, 1.0, rL, tol));
  out.push_back(make("T2c.6", kVariantDerived, p, q, x, 1.0 / rL, q / p, tol));
  out.push_back(make("T2c.6", kVariantPrinted, p, q, x, rL, q / p, tol));
  const double level = cq.b_p / cp.b_p;
  const auto branch = [&](const char* variant, double split) {
    if (x < split)
      out.push_back(make("T2c.7", variant, p, q, x, rT, level, tol));
    else
      out.push_back(make("T2c.7", variant, p, q, x, level, rT, tol));
  };
  branch(kVariantDerived, xc);
  branch(kVariantPrinted, x0);
  return out;
}

}  // namespace

std::vector<ClaimReport> check_ratio_bounds(double p, double q, double x,
                                            const Tolerances& tol) {
  if (!(2.0 <= p && p < q)) throw DomainError("check_ratio_bounds: requires 2 <= p < q");
  return ratio_bounds_at(p, q, x, solve_x0(p, q), solve_t_ratio_crossing(p, q), tol);
}

std::vector<ClaimReport> check_product_bounds(double p, double x, const Tolerances& tol) {
  const double z = std::pow(x, p);
  const double Pt = tilde(TildeKind::P, p, x);
  const double Mt = tilde(TildeKind::M, p, x);
  const double Pt2 = tilde(TildeKind::P, 2.0 * p, x);
  std::vector<ClaimReport> out;
  out.push_back(make("T3.1", kVariantDerived, p, kNaN, x, Pt * Mt, Pt2 * Pt2, tol));
  const double k_printed =
      std::pow(std::pow(1.0 + z, 2.0 / p) + std::pow(1.0 - z, 2.0 / p), 2.0) /
      (4.0 * std::pow(1.0 - z * z, 1.0 / p));
  const double rho = std::pow((1.0 + z) / (1.0 - z), 1.0 / (2.0 * p));
  const double k_derived = 0.25 * (rho + 1.0) * (rho + 1.0) / rho;
  out.push_back(make("T3.2", kVariantDerived, p, kNaN, x, Pt2 * Pt2, k_derived * Pt * Mt, tol));
  out.push_back(make("T3.2", kVariantPrinted, p, kNaN, x, Pt2 * Pt2, k_printed * Pt * Mt, tol));
  return out;
}

std::vector<ClaimReport> check_sum_bounds(double p, double x, const Tolerances& tol) {
  const double z = std::pow(x, p);
  const double Pt = tilde(TildeKind::P, p, x);
  const double Mt = tilde(TildeKind::M, p, x);
  const double Pt2 = tilde(TildeKind::P, 2.0 * p, x);
  std::vector<ClaimReport> out;
  const double r_derived = std::pow((1.0 + z) / (1.0 - z), 1.0 / (2.0 * p));
  const double r_printed = (1.0 + z) * std::pow(1.0 - z, -1.0 / (2.0 * p));
  const auto sum_claim = [&](const char* variant, double r) {
    out.push_back(make("T4.1", variant, p, kNaN, x, 1.0 / Pt + r / Mt, (r + 1.0) / Pt2, tol));
  };
  sum_claim(kVariantDerived, r_derived);
  sum_claim(kVariantPrinted, r_printed);

  const double lhs26 = std::pow(Pt2, 2.0 * p) *
                       (std::pow(Pt, -p) + std::pow(Mt, -p));
  const double omz2 = 1.0 - z * z;  // 1 - x^{2p}
  const double R_printed =
      std::pow(std::pow(omz2, 1.0 / (2.0 * p)) + std::pow(omz2, -1.0 / (2.0 * p)),
               1.0 / (2.0 * p)) /
      std::pow(2.0, 2.0 * p - 1.0);
  const double R_derived =
      std::pow(std::pow(omz2, 1.0 / (4.0 * p)) + std::pow(omz2, -1.0 / (4.0 * p)),
               2.0 * p) /
      std::pow(2.0, 2.0 * p - 1.0);
  out.push_back(make("T4.2", kVariantDerived, p, kNaN, x, lhs26, R_derived, tol));
  out.push_back(make("T4.2", kVariantPrinted, p, kNaN, x, lhs26, R_printed, tol));
  return out;
}

std::vector<ClaimReport> check_chebyshev_gruss(double p, double x, const Tolerances& tol) {
  const double z = std::pow(x, p);
  const double Lt = tilde(TildeKind::L, p, x);
  const double Tt = tilde(TildeKind::T, p, x);
  const double Lt2 = tilde(TildeKind::L, 2.0 * p, x);
  std::vector<ClaimReport> out;
  out.push_back(make("T5.1", kVariantDerived, p, kNaN, x, Tt * Lt, Lt2, tol));
  const double lhs = 1.0 / (Tt * Lt) - 1.0 / Lt2;
  const double rhs = z * z / (4.0 * (1.0 - z * z));
  out.push_back(make("T5.2", kVariantDerived, p, kNaN, x, lhs, rhs, tol));
  return out;
}

std::vector<ClaimReport> check_single_bounds_TL(double p, double x, const Tolerances& tol) {
  const double z = std::pow(x, p);
  const double Tt = tilde(TildeKind::T, p, x);
  const double Lt = tilde(TildeKind::L, p, x);
  std::vector<ClaimReport> out;
  out.push_back(make("T6.1", kVariantDerived, p, kNaN, x, Tt, 1.0 + z / (1.0 + p), tol));
  out.push_back(make("T6.2", kVariantDerived, p, kNaN, x,
                     4.0 * (1.0 + z) * (1.0 + z / (p + 1.0)) / ((z + 2.0) * (z + 2.0)), Tt,
                     tol));
  out.push_back(make("T6.3", kVariantDerived, p, kNaN, x, Lt, 1.0 - z / (1.0 + p), tol));
  out.push_back(make("T6.4", kVariantDerived, p, kNaN, x,
                     4.0 * (1.0 - z) * (1.0 - z / (1.0 + p)) / ((2.0 - z) * (2.0 - z)), Lt,
                     tol));
  return out;
}

std::vector<ClaimReport> check_single_bounds_PM(double p, double x, const Tolerances& tol) {
  const double z = std::pow(x, p);
  const double AP = 1.0 / tilde(TildeKind::P, p, x);  // arcsin_p(x)/x
  const double AM = 1.0 / tilde(TildeKind::M, p, x);  // arcsinh_p(x)/x
  const double B = sf::beta(1.0 / p, 1.0 + 1.0 / p);
  // int_0^x (1-t^p)^{1/p} dt through the incomplete-beta factorization
  const double Js = (1.0 / p) * B * sf::beta_incomplete(1.0 / p, 1.0 + 1.0 / p, z);
  const double j = integ([p](double t) { return std::pow(1.0 + std::pow(t, p), 1.0 / p); }, x);
  std::vector<ClaimReport> out;
  out.push_back(make("T7.1", kVariantDerived, p, kNaN, x, x / Js, AP, tol));
  out.push_back(make("T7.1", kVariantPrinted, p, kNaN, x, p * x / B, AP, tol));
  const double alpha = std::pow(1.0 - z, 1.0 / p);
  out.push_back(make("T7.2", kVariantDerived, p, kNaN, x, AP,
                     x * (1.0 + alpha) * (1.0 + alpha) / (4.0 * alpha * Js), tol));
  out.push_back(make("T7.2", kVariantPrinted, p, kNaN, x, AP,
                     p * x * (2.0 - z) * (2.0 - z) / (4.0 * (1.0 - z)), tol));
  out.push_back(make("T7.3", kVariantDerived, p, kNaN, x, x / j, AM, tol));
  const double A1 = std::pow(1.0 + z, 1.0 / p);
  out.push_back(make("T7.4", kVariantDerived, p, kNaN, x, AM,
                     x * (1.0 + A1) * (1.0 + A1) / (4.0 * j * A1), tol));
  out.push_back(make("T7.4", kVariantPrinted, p, kNaN, x, AM,
                     x * (1.0 + A1) / (4.0 * j * A1), tol));
  return out;
}

std::vector<ClaimReport> check_constant_ratio_bounds(double p, double x,
                                                     const Tolerances& tol) {
  const auto c = ptrig::constants(p);
  const double Pt = tilde(TildeKind::P, p, x);
  const double Mt = tilde(TildeKind::M, p, x);
  const double Tt = tilde(TildeKind::T, p, x);
  const double ap_derived = c.a_p;          // pi_p / 2 (the proof's limit value)
  const double ap_printed = 0.5 * M_PI;     // pi / 2 (as stated)
  std::vector<ClaimReport> out;
  out.push_back(make("T8.1", kVariantDerived, p, kNaN, x, (c.b_p / c.c_p) * Tt, Mt, tol));
  out.push_back(make("T8.2", kVariantDerived, p, kNaN, x, Mt, Tt, tol));
  out.push_back(make("T8.3", kVariantDerived, p, kNaN, x, (c.c_p / ap_derived) * Mt, Pt, tol));
  out.push_back(make("T8.3", kVariantPrinted, p, kNaN, x, (c.c_p / ap_printed) * Mt, Pt, tol));
  out.push_back(make("T8.4", kVariantDerived, p, kNaN, x, Pt, Mt, tol));
  out.push_back(make("T8.5", kVariantDerived, p, kNaN, x, (c.b_p / ap_derived) * Tt, Pt, tol));
  out.push_back(make("T8.5", kVariantPrinted, p, kNaN, x, (c.b_p / ap_printed) * Tt, Pt, tol));
  out.push_back(make("T8.6", kVariantDerived, p, kNaN, x, Pt, Tt, tol));
  return out;
}

namespace {

std::vector<ClaimReport> corollary_c1(double p, double x, const Tolerances& tol) {
  const double z = std::pow(x, p);
  const double Lt = tilde(TildeKind::L, p, x);
  const double Mt = tilde(TildeKind::M, p, x);
  const double lg = std::log1p(-z);   // log(1-x^p), negative
  const double lgp = std::log1p(z);   // log(1+x^p)
  std::vector<ClaimReport> out;
  out.push_back(make("C1.1", kVariantDerived, p, kNaN, x, 1.0 / (1.0 - lg / p), Lt, tol));
  out.push_back(make("C1.2", kVariantDerived, p, kNaN, x, Lt, 1.0 / (1.0 - lg / (1.0 + p)), tol));
  const double u = std::pow(1.0 + z, -1.0 / p);
  const auto m_clauses = [&](const char* variant, double fac) {
    out.push_back(make("C1.3", variant, p, kNaN, x, fac / (1.0 + lgp / p), Mt, tol));
    out.push_back(make("C1.4", variant, p, kNaN, x, Mt, fac / (1.0 + lgp / (1.0 + p)), tol));
  };
  m_clauses(kVariantDerived, 1.0 / u);
  m_clauses(kVariantPrinted, u);
  return out;
}

std::vector<ClaimReport> corollary_c2(double p, double x, const Tolerances& tol) {
  const double z = std::pow(x, p);
  const double Pt = tilde(TildeKind::P, p, x);
  const double Lt = tilde(TildeKind::L, p, x);
  std::vector<ClaimReport> out;
  out.push_back(make("C2.1", kVariantDerived, p, kNaN, x, std::pow(1.0 - z, 1.0 / p) * Pt, Lt, tol));
  // right side Pt/A^{p-1} is coherent only at A = 1, where it is Pt
  out.push_back(make("C2.2", kVariantDerived, p, kNaN, x, Lt, Pt, tol));
  return out;
}

std::vector<ClaimReport> corollary_c3(double p, double x, const Tolerances& tol) {
  std::vector<ClaimReport> out;
  const auto turan = [&](const char* id, TildeKind k, bool squared_larger) {
    const double mid = tilde(k, p, x);
    const double lo = tilde(k, p - 1.0, x);
    const double hi = tilde(k, p + 1.0, x);
    if (squared_larger)
      out.push_back(make(id, kVariantDerived, p, kNaN, x, lo * hi, mid * mid, tol));
    else
      out.push_back(make(id, kVariantDerived, p, kNaN, x, mid * mid, lo * hi, tol));
  };
  turan("C3.1", TildeKind::P, true);
  turan("C3.2", TildeKind::L, true);
  turan("C3.3", TildeKind::T, false);
  return out;
}

std::vector<ClaimReport> corollary_c4(double p, double q, double x, const Tolerances& tol) {
  std::vector<ClaimReport> out;
  const double lhs = std::sqrt(tilde(TildeKind::P, p, x) * tilde(TildeKind::P, q, x));
  const double rhs = tilde(TildeKind::P, std::sqrt(p * q), x);
  out.push_back(make("C4.1", kVariantDerived, p, q, x, lhs, rhs, tol));
  return out;
}

std::vector<ClaimReport> corollary_c5(double x, const Tolerances& tol) {
  const double P3 = tilde(TildeKind::P, 3.0, x), P4 = tilde(TildeKind::P, 4.0, x);
  const double L3 = tilde(TildeKind::L, 3.0, x), L4 = tilde(TildeKind::L, 4.0, x);
  const double T3 = tilde(TildeKind::T, 3.0, x), T4 = tilde(TildeKind::T, 4.0, x);
  const double P = x == 0.0 ? 1.0 : x / std::asin(x);
  const double L = x == 0.0 ? 1.0 : x / std::atanh(x);
  const double T = x == 0.0 ? 1.0 : x / std::atan(x);
  std::vector<ClaimReport> out;
  out.push_back(make("C5.1", kVariantDerived, kNaN, kNaN, x, P, P3 * P3 / P4, tol));
  out.push_back(make("C5.2", kVariantDerived, kNaN, kNaN, x, P3 * P3 / P4, P3 * P3 / L4, tol));
  out.push_back(make("C5.3", kVariantDerived, kNaN, kNaN, x, L, L3 * L3 / L4, tol));
  out.push_back(make("C5.4", kVariantDerived, kNaN, kNaN, x, L3 * L3 / L4, L3 * L3 / L, tol));
  out.push_back(make("C5.5", kVariantDerived, kNaN, kNaN, x, T3 * T3 / T4, T, tol));
  out.push_back(make("C5.6", kVariantDerived, kNaN, kNaN, x, T3 * T3 / T, T3 * T3 / T4, tol));
  return out;
}

std::vector<ClaimReport> corollary_c6(double p, double x, const Tolerances& tol) {
  const auto c = ptrig::constants(p);
  const double Pt = tilde(TildeKind::P, p, x);
  std::vector<ClaimReport> out;
  out.push_back(make("C6.1", kVariantDerived, p, kNaN, x, 2.0 / c.pi_p, Pt, tol));
  const double p2_derived = tilde(TildeKind::P, 2.0 * p, x);
  const double p2_printed =
      means::neuman_mean(means::NeumanKind::P, 2.0 * p, means::MeanInput(1.0 + x, 1.0 - x));
  out.push_back(make("C6.2", kVariantDerived, p, kNaN, x, Pt, p2_derived, tol));
  out.push_back(make("C6.2", kVariantPrinted, p, kNaN, x, Pt, p2_printed, tol));
  out.push_back(make("C6.3", kVariantDerived, p, kNaN, x, p2_derived, 1.0, tol));
  out.push_back(make("C6.3", kVariantPrinted, p, kNaN, x, p2_printed, 1.0, tol));
  return out;
}

}  // namespace

std::vector<ClaimReport> check_corollaries(double p, double q, double x,
                                           const Tolerances& tol) {
  std::vector<ClaimReport> out;
  const auto append = [&out](std::vector<ClaimReport> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  append(corollary_c1(p, x, tol));
  append(corollary_c2(p, x, tol));
  if (p >= 3.0) append(corollary_c3(p, x, tol));
  if (!std::isnan(q)) append(corollary_c4(p, q, x, tol));
  append(corollary_c5(x, tol));
  append(corollary_c6(p, x, tol));
  return out;
}

namespace {

std::vector<ClaimReport> lemma_l1(double p, double x, const Tolerances& tol) {
  std::vector<ClaimReport> out;
  const double isin = integ(f_sin(p), x);
  const double isinh = integ(f_sinh(p), x);
  const double isin2 = integ(f_sin(2.0 * p), x);
  out.push_back(make("L1.1", kVariantDerived, p, kNaN, x, isin2 * isin2, isin * isinh, tol));
  int clause = 2;
  const quad::Fn fs[4] = {
      [p](double t) { return 1.0 + std::pow(t, p); },
      [p](double t) { return 1.0 - std::pow(t, p); },
      [p](double t) { return std::pow(1.0 - std::pow(t, p), 1.0 / p); },
      [p](double t) { return std::pow(1.0 + std::pow(t, p), 1.0 / p); }};
  for (const auto& F : fs) {
    const double iF = integ(F, x);
    const double iInv = integ([&F](double t) { return 1.0 / F(t); }, x);
    out.push_back(make("L1." + std::to_string(clause++), kVariantDerived, p, kNaN, x, x * x,
                       iF * iInv, tol));
  }
  return out;
}

std::vector<ClaimReport> lemma_l2(double p, double x, const Tolerances& tol) {
  std::vector<ClaimReport> out;
  const double z = std::pow(x, p);
  const double isin = integ(f_sin(p), x);
  const double isinh = integ(f_sinh(p), x);
  const double isin2 = integ(f_sin(2.0 * p), x);
  const double k_printed =
      std::pow(std::pow(1.0 + z, 2.0 / p) + std::pow(1.0 - z, 2.0 / p), 2.0) /
      (4.0 * std::pow(1.0 - z * z, 1.0 / p));
  // sqrt(F) in [1, (1-z)^{-1/(2p)}], sqrt(G) in [(1+z)^{-1/(2p)}, 1]
  const double k_derived = polya_szego_constant(1.0, std::pow(1.0 - z, -0.5 / p),
                                                std::pow(1.0 + z, -0.5 / p), 1.0);
  out.push_back(make("L2.1", kVariantDerived, p, kNaN, x, isin * isinh,
                     k_derived * isin2 * isin2, tol));
  out.push_back(make("L2.1", kVariantPrinted, p, kNaN, x, isin * isinh,
                     k_printed * isin2 * isin2, tol));
  // Schweizer (upper orientation): int F * int 1/F <= x^2 (alpha+A)^2/(4 alpha A)
  struct Case { quad::Fn F; double alpha, A; };
  const Case cases[4] = {
      {[p](double t) { return 1.0 + std::pow(t, p); }, 1.0, 1.0 + z},
      {[p](double t) { return 1.0 - std::pow(t, p); }, 1.0 - z, 1.0},
      {[p](double t) { return std::pow(1.0 - std::pow(t, p), 1.0 / p); },
       std::pow(1.0 - z, 1.0 / p), 1.0},
      {[p](double t) { return std::pow(1.0 + std::pow(t, p), 1.0 / p); }, 1.0,
       std::pow(1.0 + z, 1.0 / p)}};
  int clause = 2;
  for (const auto& c : cases) {
    const double iF = integ(c.F, x);
    const double iInv = integ([&c](double t) { return 1.0 / c.F(t); }, x);
    const double bound =
        x * x * (c.alpha + c.A) * (c.alpha + c.A) / (4.0 * c.alpha * c.A);
    out.push_back(make("L2." + std::to_string(clause++), kVariantDerived, p, kNaN, x,
                       iF * iInv, bound, tol));
  }
  return out;
}

std::vector<ClaimReport> lemma_l3(double p, double x, const Tolerances& tol) {
  std::vector<ClaimReport> out;
  const double itan = integ(f_tan(p), x);
  const double itanh = integ(f_tanh(p), x);
  const double isin = integ(f_sin(p), x);
  const double isinh = integ(f_sinh(p), x);
  const double itanh2 = integ(f_tanh(2.0 * p), x);
  // opposite monotonicity: int f int g >= x int fg
  out.push_back(make("L3.1", kVariantDerived, p, kNaN, x, x * itanh2, itan * itanh, tol));
  // same monotonicity (both increasing): int h int g <= x int hg
  const double ihg = integ([p](double t) { return std::pow(1.0 - std::pow(t, p), -1.0 - 1.0 / p); }, x);
  out.push_back(make("L3.2", kVariantDerived, p, kNaN, x, isin * itanh, x * ihg, tol));
  // same monotonicity (both decreasing): int f int s <= x int fs
  const double ifs = integ([p](double t) { return std::pow(1.0 + std::pow(t, p), -1.0 - 1.0 / p); }, x);
  out.push_back(make("L3.3", kVariantDerived, p, kNaN, x, itan * isinh, x * ifs, tol));
  return out;
}

std::vector<ClaimReport> lemma_l4(double p, double x, const Tolerances& tol) {
  std::vector<ClaimReport> out;
  const double z = std::pow(x, p);
  const double itan = integ(f_tan(p), x);
  const double itanh = integ(f_tanh(p), x);
  const double itanh2 = integ(f_tanh(2.0 * p), x);
  const double bound1 = 0.25 * x * x * (z / (1.0 + z)) * (z / (1.0 - z));
  out.push_back(make("L4.1", kVariantDerived, p, kNaN, x,
                     std::fabs(x * itanh2 - itan * itanh), bound1, tol));
  const double isin = integ(f_sin(p), x);
  const double isinh = integ(f_sinh(p), x);
  const double ihs = integ([p](double t) { return std::pow(1.0 - std::pow(t, 2.0 * p), -1.0 / p); }, x);
  const double bound2 = 0.25 * x * x * (std::pow(1.0 - z, -1.0 / p) - 1.0) *
                        (1.0 - std::pow(1.0 + z, -1.0 / p));
  out.push_back(make("L4.2", kVariantDerived, p, kNaN, x,
                     std::fabs(x * ihs - isin * isinh), bound2, tol));
  return out;
}

std::vector<ClaimReport> lemma_l5(double p, double x, const Tolerances& tol) {
  std::vector<ClaimReport> out;
  const double isin = integ(f_sin(p), x);
  const double isinh = integ(f_sinh(p), x);
  const double ia2 = integ([p](double t) { return std::pow(1.0 - std::pow(t, 2.0 * p), -1.0 / p); }, x);
  out.push_back(make("L5.1", kVariantDerived, p, kNaN, x,
                     std::pow(isin, p) + std::pow(isinh, p), 2.0 * std::pow(ia2, p), tol));
  return out;
}

std::vector<ClaimReport> lemma_l6(double p, double x, const Tolerances& tol) {
  std::vector<ClaimReport> out;
  const double z = std::pow(x, p);
  const double isin = integ(f_sin(p), x);
  const double isinh = integ(f_sinh(p), x);
  const double isin2 = integ(f_sin(2.0 * p), x);
  const double M = std::pow((1.0 + z) / (1.0 - z), 1.0 / (2.0 * p));
  out.push_back(make("L6.1", kVariantDerived, p, kNaN, x, isin + M * isinh,
                     (M + 1.0) * isin2, tol));
  return out;
}

}  // namespace

std::vector<ClaimReport> check_integral_lemmas(double p, double x, const Tolerances& tol) {
  std::vector<ClaimReport> out;
  const auto append = [&out](std::vector<ClaimReport> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  append(lemma_l1(p, x, tol));
  append(lemma_l2(p, x, tol));
  append(lemma_l3(p, x, tol));
  append(lemma_l4(p, x, tol));
  append(lemma_l5(p, x, tol));
  append(lemma_l6(p, x, tol));
  return out;
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry = {
      {"T1", "chain of means L <= Lt < Pt < A < Mt < Tt <= Q", true, false, true, 2.0},
      {"T2a", "ratio monotonicity of the four arc-function ratios", true, true, true, 1.0},
      {"T2b", "root x0 of q x^(q-p) + (q-p) x^q - p", true, true, false, 1.0},
      {"T2c", "two-sided tilde-mean ratio bounds between orders", true, true, true, 2.0},
      {"T3", "product bounds Pt*Mt <= Pt2p^2 <= k Pt*Mt", true, false, true, 2.0},
      {"T4", "Diaz-Metcalf sum bound and R(x,p) power bound", true, false, true, 2.0},
      {"T5", "Chebyshev/Gruss bounds for Tt, Lt, Lt2p", true, false, true, 2.0},
      {"T6", "two-sided bounds for Tt/A and Lt/A", true, false, true, 2.0},
      {"T7", "two-sided bounds for A/Pt and A/Mt", true, false, true, 2.0},
      {"T8", "constant-ratio bounds with b_p, c_p, a_p", true, false, true, 2.0},
      {"C1", "logarithmic sandwich bounds for Lt and Mt", true, false, true, 2.0},
      {"C2", "(1-x^p)^{1/p} Pt < Lt < Pt", true, false, true, 2.0},
      {"C3", "Turan-type inequalities for Pt, Lt, Tt", true, false, true, 3.0},
      {"C4", "geometric convexity: Pt_sqrt(pq) >= sqrt(Pt_p Pt_q)", true, true, true, 2.0},
      {"C5", "fixed-order special cases at p = 3, 4", false, false, true, 2.0},
      {"C6", "(2/pi_p) A < Pt_p < P_2p < A", true, false, true, 2.0},
      {"L1", "Cauchy-Bouniakowski instances", true, false, true, 2.0},
      {"L2", "Polya-Szego / Schweizer instances", true, false, true, 2.0},
      {"L3", "Chebyshev instances", true, false, true, 2.0},
      {"L4", "Gruss instances", true, false, true, 2.0},
      {"L5", "Minkowski instance", true, false, true, 2.0},
      {"L6", "Diaz-Metcalf instance", true, false, true, 2.0},
  };
  return registry;
}

namespace {

bool family_selected(const std::vector<std::string>& families, const std::string& name) {
  if (families.empty()) return true;
  for (const auto& f : families)
    if (name.rfind(f, 0) == 0) return true;  // prefix match: "T2" selects T2a..c
  return false;
}

void append_error_row(std::vector<ClaimReport>& out, const std::string& family, double p,
                      double q, double x, const std::string& what) {
  ClaimReport r;
  r.claim_id = family;
  r.variant = kVariantDerived;
  r.p = p;
  r.q = q;
  r.x = x;
  r.a = kNaN;
  r.b = kNaN;
  r.lhs = kNaN;
  r.rhs = kNaN;
  r.margin = kNaN;
  r.status = Status::error;
  r.note = what;
  out.push_back(r);
}

}  // namespace

std::vector<ClaimReport> scan(const std::vector<std::string>& families, const GridSpec& grid,
                              const Tolerances& tol) {
  const std::vector<double> ps = grid.p.points();
  std::vector<double> qs = grid.q.points();
  if (qs.empty()) qs = ps;  // default: pairs from the p axis
  const std::vector<double> xs = grid.x.points();

  std::vector<ClaimReport> out;
  const auto append = [&out](std::vector<ClaimReport> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };

  for (const ClaimInfo& info : claim_registry()) {
    if (!family_selected(families, info.family)) continue;
    const std::string& f = info.family;

    if (!info.needs_p) {  // C5: x only
      for (double x : xs) {
        try {
          append(corollary_c5(x, tol));
        } catch (const std::exception& e) {
          append_error_row(out, f, kNaN, kNaN, x, e.what());
        }
      }
      continue;
    }

    for (double p : ps) {
      if (!(p > 1.0) || p < info.min_p) continue;

      if (info.needs_q) {
        for (double q : qs) {
          if (!(q > p)) continue;
          try {
            if (f == "T2a") {
              for (int idx = 1; idx <= 4; ++idx)
                append(check_ratio_monotonicity(idx, p, q, xs, tol));
            } else if (f == "T2b") {
              append(check_x0(p, q, tol));
            } else if (f == "T2c") {
              const double x0 = solve_x0(p, q);
              const double xc = solve_t_ratio_crossing(p, q);
              for (double x : xs) append(ratio_bounds_at(p, q, x, x0, xc, tol));
            } else if (f == "C4") {
              for (double x : xs) append(corollary_c4(p, q, x, tol));
            }
          } catch (const std::exception& e) {
            append_error_row(out, f, p, q, kNaN, e.what());
          }
        }
        continue;
      }

      for (double x : xs) {
        try {
          if (f == "T1") append(check_chain(p, x, tol));
          else if (f == "T3") append(check_product_bounds(p, x, tol));
          else if (f == "T4") append(check_sum_bounds(p, x, tol));
          else if (f == "T5") append(check_chebyshev_gruss(p, x, tol));
          else if (f == "T6") append(check_single_bounds_TL(p, x, tol));
          else if (f == "T7") append(check_single_bounds_PM(p, x, tol));
          else if (f == "T8") append(check_constant_ratio_bounds(p, x, tol));
          else if (f == "C1") append(corollary_c1(p, x, tol));
          else if (f == "C2") append(corollary_c2(p, x, tol));
          else if (f == "C3") append(corollary_c3(p, x, tol));
          else if (f == "C6") append(corollary_c6(p, x, tol));
          else if (f == "L1") append(lemma_l1(p, x, tol));
          else if (f == "L2") append(lemma_l2(p, x, tol));
          else if (f == "L3") append(lemma_l3(p, x, tol));
          else if (f == "L4") append(lemma_l4(p, x, tol));
          else if (f == "L5") append(lemma_l5(p, x, tol));
          else if (f == "L6") append(lemma_l6(p, x, tol));
        } catch (const std::exception& e) {
          append_error_row(out, f, p, kNaN, x, e.what());
        }
      }
    }
  }

  // rows grouped by claim id, then lexicographic grid point, then variant
  const auto key_less = [](double u, double v) {
    const double a = std::isnan(u) ? -std::numeric_limits<double>::infinity() : u;
    const double b = std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
    return a < b;
  };
  std::stable_sort(out.begin(), out.end(), [&](const ClaimReport& l, const ClaimReport& r) {
    if (l.claim_id != r.claim_id) return l.claim_id < r.claim_id;
    if (l.p != r.p && !(std::isnan(l.p) && std::isnan(r.p))) return key_less(l.p, r.p);
    if (l.q != r.q && !(std::isnan(l.q) && std::isnan(r.q))) return key_less(l.q, r.q);
    if (l.x != r.x && !(std::isnan(l.x) && std::isnan(r.x))) return key_less(l.x, r.x);
    return l.variant < r.variant;
  });
  return out;
}

Summary summarize(const std::vector<ClaimReport>& reports) {
  std::map<std::pair<std::string, std::string>, SummaryRow> rows;
  Summary s;
  for (const auto& r : reports) {
    auto& row = rows[{r.claim_id, r.variant}];
    if (row.points == 0) {
      row.claim_id = r.claim_id;
      row.variant = r.variant;
      row.min_margin = std::numeric_limits<double>::infinity();
    }
    ++row.points;
    if (r.status == Status::error) {
      ++row.errors;
      ++s.errors;
      continue;
    }
    row.min_margin = std::min(row.min_margin, r.margin);
    if (r.status == Status::violated) {
      ++row.violations;
      if (r.variant == kVariantPrinted)
        ++s.printed_violations;
      else
        ++s.derived_violations;
    }
  }
  for (auto& [key, row] : rows) s.rows.push_back(row);
  return s;
}

}  // namespace pmeans::ineq
