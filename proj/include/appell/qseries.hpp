#ifndef APPELL_QSERIES_HPP
#define APPELL_QSERIES_HPP

#include "appell/types.hpp"

namespace appell {

/// Coefficient of x^n in theta: theta_n = (-1)^n q^{n(n-1)/2}.
cplx theta_coefficient(int n, cplx q);

/// Odd theta function theta(x; q) = sum_{n in Z} q^{n(n-1)/2} (-x)^n.
/// Terms are accumulated in pairs (n, -n) ascending in |n|. Vanishes exactly
/// on x in q^Z (terms n and 1-n cancel pairwise at x = 1).
Eval theta_ex(cplx x, const TauPoint& tp, const Truncation& tr);
cplx theta(cplx x, const TauPoint& tp, const Truncation& tr = {});

/// Independent oracle: theta(x) = prod_{k>=1}(1-q^k) prod_{k>=0}(1-x q^k) prod_{k>=1}(1-q^k/x).
Eval theta_product_oracle_ex(cplx x, const TauPoint& tp, const Truncation& tr);
cplx theta_product_oracle(cplx x, const TauPoint& tp, const Truncation& tr = {});

/// d/dz theta(e^{2 pi i z}; q) = sum 2 pi i n theta_n x^n, evaluated at x = e^{2 pi i z}.
Eval theta_dz_ex(cplx x, const TauPoint& tp, const Truncation& tr);

/// Odd Jacobi theta in half-characteristic normalization,
///   theta_hc(z; tau) = sum_{nu in 1/2+Z} e^{pi i nu^2 tau + 2 pi i nu (z + 1/2)}.
/// Related to the x-series by the recorded elementary factor
///   theta_hc(z; tau) = -i e^{pi i tau/4} e^{-pi i z} theta(e^{2 pi i z}; q),
/// which is how it is computed here. This is the normalization in which the
/// modular S-factor has the clean shape (c tau + d)^{1/2} exp(pi i z^2 / (c tau + d))
/// times a point-independent eighth root of unity.
cplx theta_half_char(cplx z, const TauPoint& tp, const Truncation& tr = {});

/// True when x lies within relative radius `rel` of some q^n (n in Z).
/// If n_hit is non-null it receives the resonant exponent.
bool near_q_power(cplx x, cplx q, double rel, int* n_hit = nullptr);

/// Appell numerator A(x, y) = sum_{n in Z} q^{n(n-1)/2} (-x)^n / (q^n - y).
/// y = 0 is admitted (closed form A(x, 0) = theta(x/q)).
Eval appell_numerator_ex(cplx x, cplx y, const TauPoint& tp, const Truncation& tr,
                         const ExclusionPolicy& ex = {});
cplx appell_numerator(cplx x, cplx y, const TauPoint& tp, const Truncation& tr = {},
                      const ExclusionPolicy& ex = {});

/// Appell-Lerch sum kappa(x, y; q) = A(x, y) / theta(x).
Eval kappa_ex(cplx x, cplx y, const TauPoint& tp, const Truncation& tr,
              const ExclusionPolicy& ex = {});
cplx kappa(cplx x, cplx y, const TauPoint& tp, const Truncation& tr = {},
           const ExclusionPolicy& ex = {});
cplx kappa(const JacobiPoint& p, const Truncation& tr = {}, const ExclusionPolicy& ex = {});

/// Residue of kappa in the y-variable at y = q^n:
///   res = -(-1)^n q^{n(n-1)/2} x^n / theta(x).
cplx kappa_residue_y(int n, cplx x, const TauPoint& tp, const Truncation& tr = {},
                     const ExclusionPolicy& ex = {});

} // namespace appell

#endif
