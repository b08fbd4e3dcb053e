#include "pmeans/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace pmeans::quad {
namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the
// embedded 7-point Gauss weights.  QUADPACK dqk15 values.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi;
  double value;
  double error;
};

// Gauss-Kronrod 7/15 on one panel with the QUADPACK error heuristic.
Panel gk15(const Fn& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  double fv[15];
  double fc = f(center);
  double resg = kWg[3] * fc;
  double resk = kWgk[7] * fc;
  double resabs = std::fabs(resk);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    const double sum = f1 + f2;
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv[j] - reskh) + std::fabs(fv[14 - j] - reskh));

  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.value = resk * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
  p.error = err;
  if (!std::isfinite(p.value) || !std::isfinite(p.error))
    throw DomainError("integrand is not finite at an interior node");
  return p;
}

double tolerance_for(const Options& opt, double value) {
  return std::max(opt.abs_tol, opt.rel_tol * std::fabs(value));
}

bool splittable(const Panel& p) {
  const double mid = 0.5 * (p.lo + p.hi);
  return mid > p.lo && mid < p.hi;
}

}  // namespace

Result integrate(const Fn& f, double lo, double hi, const Options& opt) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw InvalidDomain("integrate: need finite lo < hi");
  if (!(opt.abs_tol > 0.0) || !(opt.rel_tol > 0.0))
    throw InvalidDomain("integrate: tolerances must be positive");

  std::vector<Panel> panels;
  panels.push_back(gk15(f, lo, hi));
  int splits = 0;

  // Deterministic worst-first refinement: largest error, ties by position.
  auto worst = [&]() {
    int iw = -1;
    for (int i = 0; i < static_cast<int>(panels.size()); ++i) {
      if (!splittable(panels[i])) continue;
      if (iw < 0 || panels[i].error > panels[iw].error ||
          (panels[i].error == panels[iw].error && panels[i].lo < panels[iw].lo))
        iw = i;
    }
    return iw;
  };

  for (;;) {
    double total = 0.0, err = 0.0;
    for (const Panel& p : panels) total += p.value;
    for (const Panel& p : panels) err += p.error;
    if (err <= tolerance_for(opt, total)) break;
    if (splits >= opt.max_panels)
      throw NonConvergence("integrate: panel budget exhausted above tolerance");
    const int iw = worst();
    if (iw < 0) {
      // Nothing left to split; interval widths are at rounding resolution.
      if (err <= 100.0 * tolerance_for(opt, total)) break;
      throw NonConvergence("integrate: stalled at rounding resolution above tolerance");
    }
    const Panel p = panels[iw];
    const double mid = 0.5 * (p.lo + p.hi);
    panels[iw] = gk15(f, p.lo, mid);
    panels.push_back(gk15(f, mid, p.hi));
    ++splits;
  }

  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  Result r;
  for (const Panel& p : panels) r.value += p.value;
  for (const Panel& p : panels) r.error_estimate += p.error;
  r.subdivisions = splits;
  return r;
}

Result integrate_tanh_sinh(const Fn& f, double lo, double hi, const Options& opt) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw InvalidDomain("integrate_tanh_sinh: need finite lo < hi");

  const double half = 0.5 * (hi - lo);
  const double pi_half = 1.5707963267948966;

  // One node evaluation: u is the tanh-sinh variable, returns w(u)*f(x(u)).
  // The offset from the nearer endpoint is d = half*(1-|tanh|), computed
  // through 2/(e^{2y}+1) so it stays exact down to denormals, and
  // 1/cosh^2(y) == d0*(2-d0) with d0 = 1-|tanh|.
  auto term = [&](double u) -> double {
    const double y = pi_half * std::sinh(u);
    const double d0 = 2.0 / (std::exp(2.0 * std::fabs(y)) + 1.0);  // 1-|tanh(y)|
    const double offset = half * d0;
    double x;
    if (u >= 0.0)
      x = hi - offset;
    else
      x = lo + offset;
    if (x <= lo || x >= hi) return 0.0;  // node collapsed onto an endpoint
    const double w = pi_half * std::cosh(u) * d0 * (2.0 - d0);
    const double fx = f(x);
    if (!std::isfinite(fx))
      throw DomainError("integrate_tanh_sinh: integrand not finite at interior node");
    return w * fx;
  };

  const double u_max = 6.56;  // sinh(6.56) ~ 353; offsets stay representable
  double h = 1.0;
  double sum = term(0.0);
  for (double u = h; u <= u_max; u += h) sum += term(u) + term(-u);
  double prev = sum * h * half;

  Result r;
  int level = 1;
  for (; level <= 12; ++level) {
    h *= 0.5;
    for (double u = h; u <= u_max; u += 2.0 * h) sum += term(u) + term(-u);
    const double cur = sum * h * half;
    const double diff = std::fabs(cur - prev);
    prev = cur;
    if (level >= 3 && diff <= 0.5 * tolerance_for(opt, cur)) {
      r.value = cur;
      r.error_estimate = diff;
      r.subdivisions = level;
      return r;
    }
    r.error_estimate = diff;
  }
  r.value = prev;
  r.subdivisions = level;
  if (r.error_estimate > 100.0 * tolerance_for(opt, r.value))
    throw NonConvergence("integrate_tanh_sinh: level budget exhausted above tolerance");
  return r;
}

namespace {

// t = s/(1-s) maps [0,inf) to [0,1); algebraic tails t^-beta, beta >= 2
// become bounded near s=1.
Fn compactify(const Fn& f) {
  return [f](double s) -> double {
    if (s >= 1.0) return 0.0;
    const double om = 1.0 - s;
    const double t = s / om;
    const double ft = f(t);
    if (ft == 0.0) return 0.0;
    return ft / (om * om);
  };
}

}  // namespace

Result integrate_semi_infinite(const Fn& f, const Options& opt) {
  return integrate(compactify(f), 0.0, 1.0, opt);
}

Result integrate_semi_infinite_tanh_sinh(const Fn& f, const Options& opt) {
  return integrate_tanh_sinh(compactify(f), 0.0, 1.0, opt);
}

RootBracket make_bracket(const Fn& f, double lo, double hi) {
  if (!(lo < hi)) throw InvalidDomain("make_bracket: need lo < hi");
  RootBracket b{lo, hi, f(lo), f(hi)};
  if (!(b.f_lo * b.f_hi < 0.0) && b.f_lo != 0.0 && b.f_hi != 0.0)
    throw NoSignChange("make_bracket: f(lo) and f(hi) have the same sign");
  return b;
}

double find_root(const Fn& f, RootBracket b, double tol) {
  if (!(tol > 0.0)) throw InvalidDomain("find_root: tol must be positive");
  if (b.f_lo == 0.0) return b.lo;
  if (b.f_hi == 0.0) return b.hi;
  if (!(b.f_lo * b.f_hi < 0.0)) throw NoSignChange("find_root: bracket has no sign change");

  double best_x = std::fabs(b.f_lo) < std::fabs(b.f_hi) ? b.lo : b.hi;
  double best_f = std::min(std::fabs(b.f_lo), std::fabs(b.f_hi));
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (b.lo + b.hi);
    double x = mid;
    // Secant candidate, accepted only strictly inside the bracket.
    const double denom = b.f_hi - b.f_lo;
    if (denom != 0.0) {
      const double xs = b.lo - b.f_lo * (b.hi - b.lo) / denom;
      if (std::isfinite(xs) && xs > b.lo && xs < b.hi) x = (iter % 2 == 0) ? xs : mid;
    }
    if (!(x > b.lo && x < b.hi)) x = mid;
    if (!(x > b.lo && x < b.hi)) break;  // bracket at rounding resolution
    const double fx = f(x);
    if (std::fabs(fx) < best_f) {
      best_f = std::fabs(fx);
      best_x = x;
    }
    if (std::fabs(fx) <= tol) return x;
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (b.f_lo < 0.0)) {
      b.lo = x;
      b.f_lo = fx;
    } else {
      b.hi = x;
      b.f_hi = fx;
    }
  }
  if (best_f <= tol) return best_x;
  throw NonConvergence("find_root: |f| did not reach tol within the bracket");
}

double find_root(const Fn& f, double lo, double hi, double tol) {
  return find_root(f, make_bracket(f, lo, hi), tol);
}

}  // namespace pmeans::quad
