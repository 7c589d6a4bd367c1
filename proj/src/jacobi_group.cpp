#include "appell/jacobi_group.hpp"

#include <cmath>
#include <cstdlib>

namespace appell {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw domain_error("integer overflow in group arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw domain_error("integer overflow in group arithmetic");
    return r;
}

void require_unimodular(const JacobiGroupElement& g) {
    if (checked_add(checked_mul(g.a, g.d), -checked_mul(g.b, g.c)) != 1)
        throw domain_error("SL2 part must have determinant 1");
}

// Row vector times integer 2x2 matrix: (l, m) -> (a l + c m, b l + d m).
std::array<std::int64_t, 2> transport(std::array<std::int64_t, 2> t, std::int64_t a,
                                      std::int64_t b, std::int64_t c, std::int64_t d) {
    return {checked_add(checked_mul(a, t[0]), checked_mul(c, t[1])),
            checked_add(checked_mul(b, t[0]), checked_mul(d, t[1]))};
}

} // namespace

nlohmann::ordered_json JacobiGroupElement::to_json() const {
    nlohmann::ordered_json j;
    j["sl2"] = {a, b, c, d};
    j["lam"] = {lam[0], lam[1]};
    j["mu"] = {mu[0], mu[1]};
    return j;
}

JacobiGroupElement JacobiGroupElement::from_json(const nlohmann::json& j) {
    JacobiGroupElement g;
    const auto& m = j.at("sl2");
    g.a = m.at(0).get<std::int64_t>();
    g.b = m.at(1).get<std::int64_t>();
    g.c = m.at(2).get<std::int64_t>();
    g.d = m.at(3).get<std::int64_t>();
    g.lam = {j.at("lam").at(0).get<std::int64_t>(), j.at("lam").at(1).get<std::int64_t>()};
    g.mu = {j.at("mu").at(0).get<std::int64_t>(), j.at("mu").at(1).get<std::int64_t>()};
    require_unimodular(g);
    return g;
}

JacobiGroupElement identity_element() { return {}; }
JacobiGroupElement gen_S() { return {0, -1, 1, 0, {0, 0}, {0, 0}}; }
JacobiGroupElement gen_T() { return {1, 1, 0, 1, {0, 0}, {0, 0}}; }
JacobiGroupElement gen_shift_u_tau() { return {1, 0, 0, 1, {1, 0}, {0, 0}}; }
JacobiGroupElement gen_shift_v_tau() { return {1, 0, 0, 1, {0, 1}, {0, 0}}; }
JacobiGroupElement gen_shift_u_one() { return {1, 0, 0, 1, {0, 0}, {1, 0}}; }
JacobiGroupElement gen_shift_v_one() { return {1, 0, 0, 1, {0, 0}, {0, 1}}; }

JacobiGroupElement group_mul(const JacobiGroupElement& g1, const JacobiGroupElement& g2) {
    require_unimodular(g1);
    require_unimodular(g2);
    JacobiGroupElement r;
    r.a = checked_add(checked_mul(g1.a, g2.a), checked_mul(g1.b, g2.c));
    r.b = checked_add(checked_mul(g1.a, g2.b), checked_mul(g1.b, g2.d));
    r.c = checked_add(checked_mul(g1.c, g2.a), checked_mul(g1.d, g2.c));
    r.d = checked_add(checked_mul(g1.c, g2.b), checked_mul(g1.d, g2.d));
    // t1 + t2 A1^{-1}, applied to the u-pair (lam_u, mu_u) and v-pair alike.
    const auto tu = transport({g2.lam[0], g2.mu[0]}, g1.d, -g1.b, -g1.c, g1.a);
    const auto tv = transport({g2.lam[1], g2.mu[1]}, g1.d, -g1.b, -g1.c, g1.a);
    r.lam = {checked_add(g1.lam[0], tu[0]), checked_add(g1.lam[1], tv[0])};
    r.mu = {checked_add(g1.mu[0], tu[1]), checked_add(g1.mu[1], tv[1])};
    return r;
}

JacobiGroupElement group_inverse(const JacobiGroupElement& g) {
    require_unimodular(g);
    JacobiGroupElement r;
    r.a = g.d;
    r.b = -g.b;
    r.c = -g.c;
    r.d = g.a;
    const auto tu = transport({g.lam[0], g.mu[0]}, g.a, g.b, g.c, g.d);
    const auto tv = transport({g.lam[1], g.mu[1]}, g.a, g.b, g.c, g.d);
    r.lam = {-tu[0], -tv[0]};
    r.mu = {-tu[1], -tv[1]};
    return r;
}

JacobiGroupElement group_pow(const JacobiGroupElement& g, int n) {
    JacobiGroupElement base = n < 0 ? group_inverse(g) : g;
    int k = std::abs(n);
    JacobiGroupElement r = identity_element();
    for (int i = 0; i < k; ++i) r = group_mul(r, base);
    return r;
}

bool operator==(const JacobiGroupElement& g1, const JacobiGroupElement& g2) {
    return g1.a == g2.a && g1.b == g2.b && g1.c == g2.c && g1.d == g2.d && g1.lam == g2.lam &&
           g1.mu == g2.mu;
}

JacobiPoint act(const JacobiGroupElement& g, const JacobiPoint& p) {
    require_unimodular(g);
    const cplx tau = p.tau.tau;
    const cplx den = static_cast<double>(g.c) * tau + static_cast<double>(g.d);
    if (den == cplx(0.0)) throw domain_error("c tau + d vanishes");
    const cplx tau2 = (static_cast<double>(g.a) * tau + static_cast<double>(g.b)) / den;
    const TauPoint tp2 = TauPoint::from_tau(tau2);
    const cplx u2 = p.u / den + static_cast<double>(g.lam[0]) * tau2 + static_cast<double>(g.mu[0]);
    const cplx v2 = p.v / den + static_cast<double>(g.lam[1]) * tau2 + static_cast<double>(g.mu[1]);
    return JacobiPoint::from_uv(u2, v2, tp2);
}

JacobiGroupElement generator(GenPower::Gen g) {
    switch (g) {
        case GenPower::Gen::S: return gen_S();
        case GenPower::Gen::T: return gen_T();
        case GenPower::Gen::LamU: return gen_shift_u_tau();
        case GenPower::Gen::LamV: return gen_shift_v_tau();
        case GenPower::Gen::MuU: return gen_shift_u_one();
        case GenPower::Gen::MuV: return gen_shift_v_one();
    }
    throw domain_error("unknown generator");
}

namespace {

// Continued-fraction word for the SL2 part: A = T^{n1} S T^{n2} S ... (+- tail).
std::vector<GenPower> sl2_word(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::vector<GenPower> word;
    while (c != 0) {
        // nearest integer to a/c keeps |a - n c| <= |c|/2
        const double nd = std::nearbyint(static_cast<double>(a) / static_cast<double>(c));
        const std::int64_t n = static_cast<std::int64_t>(nd);
        if (n != 0) word.push_back({GenPower::Gen::T, static_cast<int>(n)});
        a = checked_add(a, -checked_mul(n, c));
        b = checked_add(b, -checked_mul(n, d));
        word.push_back({GenPower::Gen::S, 1});
        // S^{-1} [[a,b],[c,d]] = [[c,d],[-a,-b]]
        std::int64_t na = c, nb = d, nc = -a, nd2 = -b;
        a = na; b = nb; c = nc; d = nd2;
    }
    if (a == 1) {
        if (b != 0) word.push_back({GenPower::Gen::T, static_cast<int>(b)});
    } else {
        // a = d = -1: [[-1,b],[0,-1]] = S^2 T^{-b}
        word.push_back({GenPower::Gen::S, 2});
        if (b != 0) word.push_back({GenPower::Gen::T, static_cast<int>(-b)});
    }
    return word;
}

} // namespace

std::vector<GenPower> factor_element(const JacobiGroupElement& g) {
    require_unimodular(g);
    std::vector<GenPower> word;
    if (g.lam[0] != 0) word.push_back({GenPower::Gen::LamU, static_cast<int>(g.lam[0])});
    if (g.lam[1] != 0) word.push_back({GenPower::Gen::LamV, static_cast<int>(g.lam[1])});
    if (g.mu[0] != 0) word.push_back({GenPower::Gen::MuU, static_cast<int>(g.mu[0])});
    if (g.mu[1] != 0) word.push_back({GenPower::Gen::MuV, static_cast<int>(g.mu[1])});
    auto sl2 = sl2_word(g.a, g.b, g.c, g.d);
    word.insert(word.end(), sl2.begin(), sl2.end());
    return word;
}

} // namespace appell
