#ifndef APPELL_TYPES_HPP
#define APPELL_TYPES_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace appell {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr cplx iu{0.0, 1.0};

/// Base class for all evaluation failures raised by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or nonfinite input (wrong domain, |q| >= 1, x == 0, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error("domain: " + msg) {}
};

/// Evaluation point violates a pole-exclusion radius.
class pole_error : public error {
public:
    explicit pole_error(const std::string& msg) : error("pole exclusion: " + msg) {}
};

/// Evaluation point violates a zero-exclusion radius (division by a theta value).
class zero_error : public error {
public:
    explicit zero_error(const std::string& msg) : error("zero exclusion: " + msg) {}
};

/// The a-posteriori tail bound exceeds the requested tolerance.
class truncation_error : public error {
public:
    explicit truncation_error(const std::string& msg) : error("truncation: " + msg) {}
};

/// A division is resonant but the data is too small to classify as an
/// obstruction; the result would be dominated by rounding noise.
class conditioning_error : public error {
public:
    explicit conditioning_error(const std::string& msg) : error("conditioning: " + msg) {}
};

inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Modular parameter tau (Im tau > 0) together with its nome q = e^{2 pi i tau}.
struct TauPoint {
    cplx tau;
    cplx q;

    static TauPoint from_tau(cplx tau) {
        if (!finite(tau) || tau.imag() <= 0.0)
            throw domain_error("tau must be finite with Im(tau) > 0");
        return TauPoint{tau, std::exp(two_pi * iu * tau)};
    }

    /// Principal inverse of q = e^{2 pi i tau}; requires 0 < |q| < 1.
    static TauPoint from_q(cplx q) {
        if (!finite(q) || std::abs(q) >= 1.0 || q == cplx(0.0))
            throw domain_error("q must satisfy 0 < |q| < 1");
        const cplx tau = std::log(q) / (two_pi * iu);
        return TauPoint{tau, q};
    }

    double im_tau() const { return tau.imag(); }
};

/// Point (u, v; tau) with multiplicative coordinates x = e^{2 pi i u}, y = e^{2 pi i v}.
struct JacobiPoint {
    cplx u;
    cplx v;
    TauPoint tau;
    cplx x;
    cplx y;

    static JacobiPoint from_uv(cplx u, cplx v, const TauPoint& tp) {
        if (!finite(u) || !finite(v)) throw domain_error("u, v must be finite");
        return JacobiPoint{u, v, tp, std::exp(two_pi * iu * u), std::exp(two_pi * iu * v)};
    }
};

/// Series truncation request: sum over |n| <= n_max, demand tail bound < tol.
struct Truncation {
    int n_max = 40;
    double tol = 1e-10;
};

/// Relative radii around excluded points (theta zeros, Appell poles).
struct ExclusionPolicy {
    double pole_rel = 1e-8;
    double zero_rel = 1e-8;
};

/// A value together with its a-posteriori truncation tail bound.
struct Eval {
    cplx value;
    double tail_bound;
};

} // namespace appell

#endif
