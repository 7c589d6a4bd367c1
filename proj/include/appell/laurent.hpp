#ifndef APPELL_LAURENT_HPP
#define APPELL_LAURENT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "appell/types.hpp"

namespace appell {

/// Finitely supported two-sided coefficient sequence over C.
struct LaurentPoly {
    int n_min = 0;
    int n_max = -1; // empty when n_max < n_min
    std::vector<cplx> coeffs;

    LaurentPoly() = default;
    LaurentPoly(int lo, int hi) : n_min(lo), n_max(hi), coeffs(hi >= lo ? hi - lo + 1 : 0) {}

    bool contains(int n) const { return n >= n_min && n <= n_max; }
    cplx coeff(int n) const { return contains(n) ? coeffs[n - n_min] : cplx(0.0); }
    cplx& at(int n);

    nlohmann::ordered_json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);
};

/// Evaluate sum coeffs[n] x^n over the support.
cplx eval_laurent(const LaurentPoly& f, cplx x);

/// Theta coefficients theta_n = (-1)^n q^{n(n-1)/2} on [-N, N].
LaurentPoly theta_coeff_poly(const TauPoint& tp, int N);

/// Monomial automorphy factor J(x) = c x^{-m}.
struct MonomialFactor {
    cplx c;
    int m = 0;
};

struct Obstruction {
    int index;
    cplx value;
};

struct SolveOutcome {
    enum class Kind { solved, obstructed };
    Kind kind = Kind::solved;
    std::optional<LaurentPoly> solution;
    std::vector<Obstruction> obstructions;
    /// Free-parameter convention used for m != 0 (seed coefficients in [0,|m|) set to 0).
    std::string note;

    bool solved() const { return kind == Kind::solved; }
};

struct SolveOptions {
    double obstruction_threshold = 1e-10;
    double resonance_rtol = 1e-8;
};

/// Solve f(qx) = c x^{-m} f(x) + g(x) on Laurent coefficients over [range_lo, range_hi].
///
/// m = 0: a_n = g_n / (q^n - c); a resonant index (q^n = c within tolerance)
/// with g_n above the detection threshold is an obstruction, with g_n = 0 it is
/// skipped (a_n = 0), and in between it raises conditioning_error.
///
/// m != 0: the recurrence a_{n+m} = (a_n q^n - g_n) / c is closed with the m
/// seed coefficients in [0, |m|) set to 0 (particular solution; the homogeneous
/// dimension is reported by section_space_dim).
SolveOutcome solve_twist_eq(const MonomialFactor& factor, const LaurentPoly& g,
                            const TauPoint& tp, int range_lo, int range_hi,
                            const SolveOptions& opts = {});

/// Dimension of the space of holomorphic solutions of f(qx) = c x^{-m} f(x) on C*:
/// m for m >= 1, 0 for m <= -1, and for m = 0 it is 1 exactly when c lies in q^Z.
int section_space_dim(const MonomialFactor& factor, const TauPoint& tp,
                      double resonance_rtol = 1e-8);

} // namespace appell

#endif
