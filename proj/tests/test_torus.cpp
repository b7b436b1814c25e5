#include <doctest.h>

#include <algorithm>

#include "rank2/torus.hpp"

using namespace rank2;

namespace {

TorusWeight tw(std::vector<Monomial> vals) {
    TorusWeight t;
    t.omega_values = std::move(vals);
    return t;
}

Monomial q(long k) { return Monomial::q_power(k); }

}  // namespace

TEST_CASE("weight evaluation") {
    const RootSystem& a2 = RootSystem::get(System::A2);
    // the A2 point with alpha values (1, q^2): omega values (q^{2/3}, q^{4/3})
    TorusWeight tc = tw({Monomial(0, 4), Monomial(0, 8)});
    CHECK(eval_root(a2, tc, 0).is_one());
    CHECK(eval_root(a2, tc, 1) == q(2));
    CHECK(eval_weight(tc, {0, 0}).is_one());

    // C2 point with alpha values (q^2, q^{-1}): alpha_1 + 2 alpha_2 evaluates to 1
    const RootSystem& c2 = RootSystem::get(System::C2);
    TorusWeight te = tw({q(1), Monomial()});
    CHECK(eval_root(c2, te, 0) == q(2));
    CHECK(eval_root(c2, te, 1) == q(-1));
    CHECK(eval_root(c2, te, 3).is_one());
}

TEST_CASE("Weyl action on weights") {
    const RootSystem& a1 = RootSystem::get(System::A1);
    TorusWeight ta = tw({q(1)});
    CHECK(weyl_act(a1, a1.identity(), ta) == ta);
    // (s_1 t_a)(X^{alpha_1}) = q^{-2}
    TorusWeight sta = weyl_act(a1, a1.simple_reflection(0), ta);
    CHECK(eval_root(a1, sta, 0) == q(-2));

    // s_2 stabilizes the C2 point with alpha values (q^2, 1)
    const RootSystem& c2 = RootSystem::get(System::C2);
    TorusWeight tb = tw({q(2), q(1)});
    CHECK(weyl_act(c2, c2.simple_reflection(1), tb) == tb);
    CHECK(weyl_act(c2, c2.simple_reflection(0), tb) != tb);

    // group action: (uv) t = u (v t)
    const RootSystem& g2 = RootSystem::get(System::G2);
    TorusWeight t = tw({q(4), q(2)});
    for (int u = 0; u < g2.order(); ++u)
        for (int v = 0; v < g2.order(); ++v)
            CHECK(weyl_act(g2, g2.multiply(u, v), t) == weyl_act(g2, u, weyl_act(g2, v, t)));
}

TEST_CASE("P and Z sets") {
    const RootSystem& a1 = RootSystem::get(System::A1);
    PZSets pz = pz_sets(a1, tw({q(1)}));
    CHECK(pz.p == std::vector<int>{0});
    CHECK(pz.z.empty());

    const RootSystem& c2 = RootSystem::get(System::C2);
    pz = pz_sets(c2, tw({q(2), q(1)}));   // alpha values (q^2, 1)
    CHECK(pz.p == std::vector<int>{0, 2, 3});
    CHECK(pz.z == std::vector<int>{1});

    const RootSystem& g2 = RootSystem::get(System::G2);
    pz = pz_sets(g2, tw({q(4), q(2)}));   // alpha values (q^2, 1)
    CHECK(pz.p == std::vector<int>{0, 2, 3, 4});
    CHECK(pz.z == std::vector<int>{1});

    // Z is permuted consistently: alpha in Z(wt) iff t(X^{w^{-1} alpha}) = 1
    TorusWeight t = tw({q(4), q(2)});
    for (int w = 0; w < g2.order(); ++w) {
        TorusWeight wt = weyl_act(g2, w, t);
        PZSets wpz = pz_sets(g2, wt);
        for (int r = 0; r < g2.num_positive_roots(); ++r) {
            bool in_z = std::find(wpz.z.begin(), wpz.z.end(), r) != wpz.z.end();
            IVec pre = g2.act_alpha(g2.inverse(w), g2.positive_roots()[r]);
            IVec pre_omega(g2.rank(), 0);
            for (int i = 0; i < g2.rank(); ++i)
                for (int j = 0; j < g2.rank(); ++j) pre_omega[j] += pre[i] * g2.cartan()[i][j];
            CHECK(in_z == eval_weight(t, pre_omega).is_one());
        }
    }
}

TEST_CASE("pz_sets is stabilizer-aware") {
    const RootSystem& c2 = RootSystem::get(System::C2);
    TorusWeight tb = tw({q(2), q(1)});
    for (int w = 0; w < c2.order(); ++w) {
        if (weyl_act(c2, w, tb) != tb) continue;
        PZSets a = pz_sets(c2, tb), b = pz_sets(c2, weyl_act(c2, w, tb));
        CHECK(a.p == b.p);
        CHECK(a.z == b.z);
    }
}

TEST_CASE("orbits") {
    const RootSystem& a2 = RootSystem::get(System::A2);
    // regular point: trivial stabilizer
    TorusWeight tg = tw({Monomial(0, 1), Monomial(0, 3)});
    CHECK(orbit(a2, tg).size() == 6);
    CHECK(stabilizer_order(a2, tg) == 1);

    const RootSystem& g2 = RootSystem::get(System::G2);
    TorusWeight te = tw({q(4), q(2)});
    auto orb = orbit(g2, te);
    CHECK(orb.size() == 6);
    CHECK(stabilizer_order(g2, te) == 2);
    for (const auto& e : orb) CHECK(e.all_reps.size() == 2);

    // fully fixed point
    TorusWeight to = tw({Monomial(), Monomial()});
    CHECK(orbit(g2, to).size() == 1);

    // orbit sizes divide |W|
    for (const auto& e : orbit(g2, te)) (void)e;
    CHECK(g2.order() % static_cast<int>(orbit(g2, te).size()) == 0);
}

TEST_CASE("radial exponents") {
    TorusWeight t = tw({q(2), q(1)});
    auto nu = nu_exponents(t);
    CHECK(nu[0] == Rational(1));
    CHECK(nu[1] == Rational(1, 2));

    const RootSystem& a1 = RootSystem::get(System::A1);
    TorusWeight ta = tw({q(1)});
    TorusWeight sta = weyl_act(a1, a1.simple_reflection(0), ta);
    CHECK(nu_exponents(sta)[0] == Rational(-1, 2));

    TorusWeight unitary = tw({Monomial(3, 0), Monomial(7, 0)});
    for (const auto& e : nu_exponents(unitary)) CHECK(e == 0);

    // nu(w t) reads off the permuted radial data
    const RootSystem& c2 = RootSystem::get(System::C2);
    TorusWeight tc = tw({q(4), q(3)});
    for (int w = 0; w < c2.order(); ++w) {
        TorusWeight wt = weyl_act(c2, w, tc);
        auto nuw = nu_exponents(wt);
        for (int i = 0; i < c2.rank(); ++i) {
            IVec omega_i(c2.rank(), 0);
            omega_i[i] = 1;
            Monomial val = eval_weight(tc, c2.act_omega(c2.inverse(w), omega_i));
            CHECK(nuw[i] == Rational(val.v_pow) / Rational(2 * field().d));
        }
    }
}
