#pragma once

#include "pencil/binary_form.hpp"
#include "pencil/multi_form.hpp"
#include "pencil/rational.hpp"

#include <optional>

namespace pencil {

/// The bracket (a b) = a1 b2 - b1 a2.
MultiForm bracket(PairId a, PairId b);

/// Cayley operator d^2/da1 db2 - d^2/db1 da2, by formal differentiation.
MultiForm omega(const MultiForm& f, PairId a, PairId b);
MultiForm omega_power(const MultiForm& f, PairId a, PairId b, int power);

/// Replace both source pairs by the target pair ({a, b -> to}).
MultiForm substitute(const MultiForm& f, PairId from1, PairId from2, PairId to);

/// h(m,n;q) = (m+n-2q+1)! / ((m+n-q+1)! q!), for 0 <= q <= min(m,n).
Rational h_factor(int m, int n, int q);

/// mu(p,q;l,m) = l!/(l-m)! * (p+q-l+2m+1)!/(p+q-l+m+1)!, for l >= m >= 0.
///
/// For G bihomogeneous of orders (p,q) in (x,y):
///   [Omega_xy^l (x y)^m G]_{x,y->u} = mu(p,q;l,m) [Omega_xy^(l-m) G]_{x,y->u}
Rational mu_factor(int p, int q, int l, int m);

/// T(ab, ce) = (a b)(c e)^(2r-1) f_a^(d-1) f_b^(d-1) f_c^(d-2r+1) f_e^(d-2r+1).
MultiForm zeta_term(PairId a, PairId b, PairId c, PairId e, int d, int r, const LinearSymbol& f);

/// Image of f_t^(4(d-r)) under the alternating map into quadrihomogeneous forms:
///   T(xy,zw) - T(xz,yw) + T(xw,yz) - T(yw,xz) + T(zw,xy) - T(zy,xw).
MultiForm zeta_image(int d, int r, const LinearSymbol& f);

/// h(d,d;2i-1) h(d,d;2j-1) [Omega_xy^(2i-1) Omega_zw^(2j-1) Q]_{x,y->u; z,w->v}, then
/// h(2d-4i+2,2d-4j+2;q) [Omega_uv^q .]_{u,v->t} with q = 2(r-i-j+1).
/// Q must have degree d in each of x,y,z,w and no other active pair.
BinaryForm beta_chain(const MultiForm& q, int d, int r, int i, int j);

/// c with g = c * base, or nullopt when g is not a multiple of base.
std::optional<Rational> proportionality(const BinaryForm& g, const BinaryForm& base);

struct OmegaChainResult {
    int d = 0;
    int r = 0;
    int i = 0;
    int j = 0;
    LinearSymbol f{1, 0};
    BinaryForm output;
    Rational ratio;  // output / f_t^(4(d-r))
};

/// beta_chain applied to Q, reduced to its multiple of f_t^(4(d-r)). Throws
/// FormulaViolation when the output is not proportional.
OmegaChainResult run_omega_chain(const MultiForm& q, int d, int r, int i, int j, const LinearSymbol& f);

/// The eigenvalue of the projection chain on zeta_image; equals theta(d,r,i,j).
Rational verify_theta(int d, int r, int i, int j, const LinearSymbol& f);

/// Contraction counts for the chain on T(xw,yz); c_iii and c_iii_dd use the
/// forms that need no case split.
struct CConstants {
    Rational c_i;
    Rational c_i_d;
    Rational c_ii;
    Rational c_ii_d;
    Rational c_iii;
    Rational c_iii_d;
    Rational c_iii_dd;
};

CConstants c_constants(int d, int r, int i, int j);

/// h(d,d;2i-1) h(d,d;2j-1) (-cI cI' - (2d-2j+2)(2j-1) cII cII' - cIII cIII' + cIII cIII''),
/// the predicted multiple of f_t^(4(d-r)) produced by the chain on T(xw,yz).
Rational c_aggregate(int d, int r, int i, int j);

} // namespace pencil
