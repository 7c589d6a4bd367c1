#include "appell/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace appell {

namespace {

void require_series_domain(cplx x, const TauPoint& tp) {
    if (!finite(x) || x == cplx(0.0)) throw domain_error("x must be finite and nonzero");
    if (!finite(tp.q) || std::abs(tp.q) >= 1.0) throw domain_error("|q| must be < 1");
}

// Envelope of the term pair at |n| = n: 2 |q|^{n(n-1)/2} M^n, M = max(|x|, 1/|x|).
double pair_envelope(double aq, double M, int n) {
    return 2.0 * std::pow(aq, 0.5 * n * (n - 1)) * std::pow(M, n);
}

// Geometric bound for sum_{|n| > N}: envelope ratio is at most |q|^N M there.
double theta_tail_bound(double aq, double M, int N) {
    const double ratio = std::pow(aq, N) * M;
    if (!(ratio < 1.0)) return std::numeric_limits<double>::infinity();
    return pair_envelope(aq, M, N + 1) / (1.0 - ratio);
}

} // namespace

cplx theta_coefficient(int n, cplx q) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(q, 0.5 * n * (n - 1.0));
}

Eval theta_ex(cplx x, const TauPoint& tp, const Truncation& tr) {
    require_series_domain(x, tp);
    const cplx q = tp.q;
    const double aq = std::abs(q);
    const double M = std::max(std::abs(x), 1.0 / std::abs(x));

    const double tail = theta_tail_bound(aq, M, tr.n_max);
    if (!(tail < tr.tol))
        throw truncation_error("theta tail bound " + std::to_string(tail) +
                               " exceeds tol with n_max=" + std::to_string(tr.n_max));

    cplx sum = 1.0; // n = 0
    for (int n = 1; n <= tr.n_max; ++n)
        sum += theta_coefficient(n, q) * std::pow(x, n) +
               theta_coefficient(-n, q) * std::pow(x, -n);
    if (!finite(sum)) throw domain_error("theta sum is nonfinite");
    return {sum, tail};
}

cplx theta(cplx x, const TauPoint& tp, const Truncation& tr) { return theta_ex(x, tp, tr).value; }

Eval theta_product_oracle_ex(cplx x, const TauPoint& tp, const Truncation& tr) {
    require_series_domain(x, tp);
    const cplx q = tp.q;
    const double aq = std::abs(q);
    const double M = std::max({1.0, std::abs(x), 1.0 / std::abs(x)});

    cplx prod = 1.0 - x; // k = 0 factor of the middle product
    cplx qk = 1.0;
    double bound_factor = 0.0;
    int k = 0;
    while (true) {
        ++k;
        qk *= q;
        prod *= (1.0 - qk) * (1.0 - x * qk) * (1.0 - qk / x);
        const double dev = std::abs(qk) * M;
        if (dev < tr.tol * 0.1) {
            // remaining factors deviate from 1 by < 3 dev |q| / (1 - |q|) in total
            bound_factor = 3.0 * dev * aq / (1.0 - aq);
            break;
        }
        if (k > 100000) throw truncation_error("product oracle did not converge");
    }
    if (!finite(prod)) throw domain_error("product oracle is nonfinite");
    return {prod, (std::abs(prod) + 1.0) * bound_factor};
}

cplx theta_product_oracle(cplx x, const TauPoint& tp, const Truncation& tr) {
    return theta_product_oracle_ex(x, tp, tr).value;
}

Eval theta_dz_ex(cplx x, const TauPoint& tp, const Truncation& tr) {
    require_series_domain(x, tp);
    const cplx q = tp.q;
    const double aq = std::abs(q);
    const double M = std::max(std::abs(x), 1.0 / std::abs(x));

    const double tail = 2.0 * two_pi * (tr.n_max + 1) * theta_tail_bound(aq, M, tr.n_max);
    if (!(tail < tr.tol)) throw truncation_error("theta_dz tail bound exceeds tol");

    cplx sum = 0.0;
    for (int n = 1; n <= tr.n_max; ++n) {
        const cplx cpos = theta_coefficient(n, q) * std::pow(x, n);
        const cplx cneg = theta_coefficient(-n, q) * std::pow(x, -n);
        sum += two_pi * iu * static_cast<double>(n) * (cpos - cneg);
    }
    if (!finite(sum)) throw domain_error("theta_dz sum is nonfinite");
    return {sum, tail};
}

cplx theta_half_char(cplx z, const TauPoint& tp, const Truncation& tr) {
    const cplx x = std::exp(two_pi * iu * z);
    const cplx bridge = -iu * std::exp(pi * iu * tp.tau / 4.0) * std::exp(-pi * iu * z);
    return bridge * theta(x, tp, tr);
}

bool near_q_power(cplx x, cplx q, double rel, int* n_hit) {
    const double ax = std::abs(x);
    const double aq = std::abs(q);
    if (ax == 0.0) return false;
    // |q^n| can match |x| only near n0 = log|x| / log|q|
    const double n0 = std::log(ax) / std::log(aq);
    if (std::abs(n0) > 512.0) return false;
    const int lo = static_cast<int>(std::floor(n0)) - 2;
    const int hi = static_cast<int>(std::ceil(n0)) + 2;
    for (int n = lo; n <= hi; ++n) {
        const cplx qn = std::pow(q, n);
        if (std::abs(x - qn) <= rel * std::abs(qn)) {
            if (n_hit) *n_hit = n;
            return true;
        }
    }
    return false;
}

namespace {

// Lower bound on |q^n - y| used only inside tail estimates.
double denom_floor(double aqn, double ay) {
    return std::max(std::abs(aqn - ay), 1e-300);
}

} // namespace

Eval appell_numerator_ex(cplx x, cplx y, const TauPoint& tp, const Truncation& tr,
                         const ExclusionPolicy& ex) {
    require_series_domain(x, tp);
    if (!finite(y)) throw domain_error("y must be finite");
    const cplx q = tp.q;
    const double aq = std::abs(q);
    const double M = std::max(std::abs(x), 1.0 / std::abs(x));

    if (y != cplx(0.0)) {
        int nh = 0;
        if (near_q_power(y, q, ex.pole_rel, &nh))
            throw pole_error("y within exclusion radius of q^" + std::to_string(nh));
    }

    cplx sum = 0.0;
    for (int n = 0; n <= tr.n_max; ++n) {
        sum += theta_coefficient(n, q) * std::pow(x, n) / (std::pow(q, n) - y);
        if (n > 0)
            sum += theta_coefficient(-n, q) * std::pow(x, -n) / (std::pow(q, -n) - y);
    }
    if (!finite(sum)) throw domain_error("appell numerator sum is nonfinite");

    // Tail: explicit envelopes until a geometric remainder closes below tol.
    const double ay = std::abs(y);
    double tail = 0.0;
    bool closed = false;
    for (int n = tr.n_max + 1; n <= tr.n_max + 200; ++n) {
        const double num = std::pow(aq, 0.5 * n * (n - 1)) * std::pow(M, n);
        const double t = num / denom_floor(std::pow(aq, n), ay) +
                         num / denom_floor(std::pow(aq, -n), ay);
        tail += t;
        const double ratio = std::pow(aq, n) * M;
        if (ratio < 1.0 && t / (1.0 - ratio) < tr.tol * 1e-3) {
            tail += t / (1.0 - ratio);
            closed = true;
            break;
        }
    }
    if (!closed || !(tail < tr.tol))
        throw truncation_error("appell numerator tail bound exceeds tol");
    return {sum, tail};
}

cplx appell_numerator(cplx x, cplx y, const TauPoint& tp, const Truncation& tr,
                      const ExclusionPolicy& ex) {
    return appell_numerator_ex(x, y, tp, tr, ex).value;
}

Eval kappa_ex(cplx x, cplx y, const TauPoint& tp, const Truncation& tr,
              const ExclusionPolicy& ex) {
    int nh = 0;
    if (near_q_power(x, tp.q, ex.zero_rel, &nh))
        throw zero_error("theta(x) vanishes at x = q^" + std::to_string(nh) +
                         "; x is within the exclusion radius");
    const Eval th = theta_ex(x, tp, tr);
    const Eval num = appell_numerator_ex(x, y, tp, tr, ex);
    const cplx val = num.value / th.value;
    const double ath = std::abs(th.value);
    const double bound = (num.tail_bound + std::abs(val) * th.tail_bound) / ath;
    return {val, bound};
}

cplx kappa(cplx x, cplx y, const TauPoint& tp, const Truncation& tr, const ExclusionPolicy& ex) {
    return kappa_ex(x, y, tp, tr, ex).value;
}

cplx kappa(const JacobiPoint& p, const Truncation& tr, const ExclusionPolicy& ex) {
    return kappa_ex(p.x, p.y, p.tau, tr, ex).value;
}

cplx kappa_residue_y(int n, cplx x, const TauPoint& tp, const Truncation& tr,
                     const ExclusionPolicy& ex) {
    int nh = 0;
    if (near_q_power(x, tp.q, ex.zero_rel, &nh))
        throw zero_error("theta(x) vanishes at x = q^" + std::to_string(nh));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const cplx num = -sign * std::pow(tp.q, 0.5 * n * (n - 1.0)) * std::pow(x, n);
    return num / theta(x, tp, tr);
}

} // namespace appell
