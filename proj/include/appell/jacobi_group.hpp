#ifndef APPELL_JACOBI_GROUP_HPP
#define APPELL_JACOBI_GROUP_HPP

#include <array>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "appell/types.hpp"

namespace appell {

/// Element of Gamma = SL2(Z) x| (Z^2 x Z^2): an SL2 matrix [[a,b],[c,d]] with
/// tau-direction translations lam = (lam_u, lam_v) and integer translations
/// mu = (mu_u, mu_v) of the two elliptic parameters.
struct JacobiGroupElement {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    std::array<std::int64_t, 2> lam{0, 0};
    std::array<std::int64_t, 2> mu{0, 0};

    bool is_identity() const {
        return a == 1 && b == 0 && c == 0 && d == 1 && lam == std::array<std::int64_t, 2>{0, 0} &&
               mu == std::array<std::int64_t, 2>{0, 0};
    }

    nlohmann::ordered_json to_json() const;
    static JacobiGroupElement from_json(const nlohmann::json& j);
};

JacobiGroupElement identity_element();
JacobiGroupElement gen_S();
JacobiGroupElement gen_T();
/// u -> u + tau (x -> qx)
JacobiGroupElement gen_shift_u_tau();
/// v -> v + tau (y -> qy)
JacobiGroupElement gen_shift_v_tau();
/// u -> u + 1
JacobiGroupElement gen_shift_u_one();
/// v -> v + 1
JacobiGroupElement gen_shift_v_one();

/// Semidirect product compatible with act being a left action:
/// (A1; t1) (A2; t2) = (A1 A2; t1 + t2 A1^{-1}), translations as row vectors.
JacobiGroupElement group_mul(const JacobiGroupElement& g1, const JacobiGroupElement& g2);

JacobiGroupElement group_inverse(const JacobiGroupElement& g);

JacobiGroupElement group_pow(const JacobiGroupElement& g, int n);

bool operator==(const JacobiGroupElement& g1, const JacobiGroupElement& g2);

/// tau' = (a tau + b)/(c tau + d);  u' = u/(c tau + d) + lam_u tau' + mu_u,
/// and v' likewise. Preserves Im tau' > 0.
JacobiPoint act(const JacobiGroupElement& g, const JacobiPoint& p);

/// One generator-power step of a canonical word.
struct GenPower {
    enum class Gen { S, T, LamU, LamV, MuU, MuV };
    Gen gen;
    int exp;
};

JacobiGroupElement generator(GenPower::Gen g);

/// Canonical factorization g = (translations) * (S/T word of the SL2 part),
/// with the SL2 word obtained by continued fractions. Multiplying the returned
/// powers left to right reproduces g exactly.
std::vector<GenPower> factor_element(const JacobiGroupElement& g);

} // namespace appell

#endif
