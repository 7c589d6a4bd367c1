#include "appell/laurent.hpp"

#include <cmath>

#include "appell/qseries.hpp"

namespace appell {

cplx& LaurentPoly::at(int n) {
    if (!contains(n)) throw domain_error("laurent index outside support");
    return coeffs[n - n_min];
}

nlohmann::ordered_json LaurentPoly::to_json() const {
    nlohmann::ordered_json j;
    j["support"] = {n_min, n_max};
    auto arr = nlohmann::ordered_json::array();
    for (int n = n_min; n <= n_max; ++n) {
        const cplx c = coeff(n);
        if (c != cplx(0.0)) arr.push_back({n, c.real(), c.imag()});
    }
    j["coeffs"] = arr;
    return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    const auto& sup = j.at("support");
    LaurentPoly f(sup.at(0).get<int>(), sup.at(1).get<int>());
    for (const auto& row : j.at("coeffs")) {
        const int n = row.at(0).get<int>();
        f.at(n) = cplx(row.at(1).get<double>(), row.at(2).get<double>());
    }
    return f;
}

cplx eval_laurent(const LaurentPoly& f, cplx x) {
    if (!finite(x) || x == cplx(0.0)) throw domain_error("x must be finite and nonzero");
    cplx s = 0.0;
    for (int n = f.n_min; n <= f.n_max; ++n) s += f.coeff(n) * std::pow(x, n);
    if (!finite(s)) throw domain_error("laurent evaluation is nonfinite");
    return s;
}

LaurentPoly theta_coeff_poly(const TauPoint& tp, int N) {
    LaurentPoly f(-N, N);
    for (int n = -N; n <= N; ++n) f.at(n) = theta_coefficient(n, tp.q);
    return f;
}

namespace {

bool resonant(cplx qn, cplx c, double rtol) { return std::abs(qn - c) <= rtol * std::abs(qn); }

} // namespace

SolveOutcome solve_twist_eq(const MonomialFactor& factor, const LaurentPoly& g,
                            const TauPoint& tp, int range_lo, int range_hi,
                            const SolveOptions& opts) {
    if (factor.c == cplx(0.0)) throw domain_error("monomial factor requires c != 0");
    if (range_hi < range_lo) throw domain_error("empty solve range");
    const int m = factor.m;
    const int pad = std::abs(m);
    if (g.n_max >= g.n_min && (g.n_min - range_lo < pad || range_hi - g.n_max < pad))
        throw domain_error("range too small: must contain the support of g widened by |m|");

    const cplx q = tp.q;
    SolveOutcome out;

    if (m == 0) {
        LaurentPoly f(range_lo, range_hi);
        for (int n = range_lo; n <= range_hi; ++n) {
            const cplx qn = std::pow(q, n);
            const cplx gn = g.coeff(n);
            if (resonant(qn, factor.c, opts.resonance_rtol)) {
                if (gn == cplx(0.0)) continue; // resonant but consistent; keep a_n = 0
                if (std::abs(gn) < opts.obstruction_threshold)
                    throw conditioning_error("resonant index " + std::to_string(n) +
                                             " with |g_n| below detection threshold");
                out.obstructions.push_back({n, gn});
                continue;
            }
            f.at(n) = gn / (qn - factor.c);
        }
        if (!out.obstructions.empty()) {
            out.kind = SolveOutcome::Kind::obstructed;
            return out;
        }
        out.kind = SolveOutcome::Kind::solved;
        out.solution = std::move(f);
        return out;
    }

    // m != 0: a_{n+m} = (a_n q^n - g_n) / c with seeds in [0, |m|) set to 0.
    LaurentPoly f(range_lo, range_hi);
    out.note = "seed coefficients in [0," + std::to_string(pad) + ") set to 0";
    const int seed_lo = 0, seed_hi = pad - 1;
    if (seed_lo < range_lo || seed_hi > range_hi)
        throw domain_error("range too small to contain the seed block [0,|m|)");
    // Propagate away from the seed block in both directions. Writing the
    // recurrence as a_{n+m} = (a_n q^n - g_n)/c and a_n = (c a_{n+m} + g_n) q^{-n},
    // each coefficient in the range is reached exactly once.
    if (m > 0) {
        for (int n = seed_lo; n + m <= range_hi; ++n)
            f.at(n + m) = (f.coeff(n) * std::pow(q, n) - g.coeff(n)) / factor.c;
        for (int n = seed_lo - 1; n >= range_lo; --n)
            f.at(n) = (factor.c * f.coeff(n + m) + g.coeff(n)) * std::pow(q, -n);
    } else {
        for (int n = seed_hi; n + m >= range_lo; --n)
            f.at(n + m) = (f.coeff(n) * std::pow(q, n) - g.coeff(n)) / factor.c;
        for (int n = seed_hi + 1; n <= range_hi; ++n)
            f.at(n) = (factor.c * f.coeff(n + m) + g.coeff(n)) * std::pow(q, -n);
    }
    out.kind = SolveOutcome::Kind::solved;
    out.solution = std::move(f);
    return out;
}

int section_space_dim(const MonomialFactor& factor, const TauPoint& tp, double resonance_rtol) {
    if (factor.c == cplx(0.0)) throw domain_error("monomial factor requires c != 0");
    if (std::abs(tp.q) >= 1.0) throw domain_error("|q| must be < 1");
    if (factor.m >= 1) return factor.m;
    if (factor.m <= -1) return 0;
    int nh = 0;
    return near_q_power(factor.c, tp.q, resonance_rtol, &nh) ? 1 : 0;
}

} // namespace appell
