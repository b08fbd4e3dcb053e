#pragma once

// Bivariate means: classical (A, G, L, P, T, M, Q, power mean), the
// arithmetic-geometric mean, the Bhatia-Li integral family M_p, the
// p-Schwab-Borchardt mean SB_p with Neuman's L_p/P_p/T_p/M_p, and the
// tilde means
//
//   Ptilde_p = A x / arcsin_p(x),  Ttilde_p = A x / arctan_p(x),
//   Ltilde_p = A x / arctanh_p(x), Mtilde_p = A x / arcsinh_p(x),
//
// with x = (a-b)/(a+b).  Inputs are normalized to a >= b internally and
// a == b is admitted, returning the common value (continuous extension).
// All means are homogeneous of degree 1.

#include <string>

namespace pmeans::means {

// Ordered positive pair with the derived normalized coordinates.
class MeanInput {
public:
  // Accepts any positive pair; stores it ordered so a() >= b().
  MeanInput(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  double x() const { return x_; }          // (a-b)/(a+b), in [0,1)
  double arithmetic() const { return A_; } // (a+b)/2

private:
  double a_, b_, x_, A_;
};

enum class Classical { A, G, L, P, T, M, Q };
enum class NeumanKind { L, P, T, M };
enum class TildeKind { P, T, L, M };

// Exact formulas; P, T, M use the classical (p = 2) arc functions from
// <cmath> so they stay independent of the hypergeometric machinery.
double classical_mean(Classical kind, const MeanInput& in);

// Power mean A_p = ((a^p+b^p)/2)^{1/p}; p = 0 returns G.
double power_mean(double p, const MeanInput& in);

// Arithmetic-geometric mean; iterates until |a_n-b_n| <= tol*a_n.
double agm(const MeanInput& in, double tol = 1e-15);

// Bhatia-Li interpolating mean, p > 0:
//   M_p(a,b) = n_p / int_0^inf dt/((t^p+a^p)(t^p+b^p))^{1/p},
//   n_p      = int_0^inf dt/(1+t^p)^{2/p},
// both integrals by semi-infinite quadrature.  M_1 = L, M_2 = AGM.
double bhatia_li(double p, const MeanInput& in);

// The normalizer n_p (exposed for the p = 2 oracle check against pi/2).
double bhatia_li_normalizer(double p);

// SB_p(x,y) = y / F(1/p,1/p;1+1/p;1-(x/y)^p); x = y returns the common
// value.  For x > y the hypergeometric argument is negative and the
// evaluation runs through the Pfaff-transformed series.
double schwab_borchardt(double p, double x, double y);

// Neuman means built on SB_p:  A_{p/2} v_p / arc_p(v_p) with
// v_p = (a^{p/2}-b^{p/2})/(a^{p/2}+b^{p/2}); arc = arctanh, arcsin,
// arctan, arcsinh for L_p, P_p, T_p, M_p.
double neuman_mean(NeumanKind kind, double p, const MeanInput& in);

// Tilde means; evaluation is permitted for any p > 1 (the mean property
// b < value < a is guaranteed for p >= 2).
double tilde_mean(TildeKind kind, double p, const MeanInput& in);

// Normalized-coordinate evaluator: tilde_mean / A = x / arc_p(x).
// The inequality harness works entirely in these coordinates (A = 1).
double tilde_ratio(TildeKind kind, double p, double x);

const char* to_string(Classical kind);
const char* to_string(NeumanKind kind);
const char* to_string(TildeKind kind);

}  // namespace pmeans::means
