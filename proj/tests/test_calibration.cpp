#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "rank2/calibration.hpp"

using namespace rank2;

namespace {

TorusWeight tw(std::vector<Monomial> vals) {
    TorusWeight t;
    t.omega_values = std::move(vals);
    return t;
}

Monomial q(long k) { return Monomial::q_power(k); }

std::multiset<size_t> component_sizes(const RootSystem& rs, const TorusWeight& t) {
    std::multiset<size_t> out;
    for (const auto& c : components(build_graph(rs, t))) out.insert(c.size());
    return out;
}

}  // namespace

TEST_CASE("graphs of the rank-one fixtures") {
    const RootSystem& a1 = RootSystem::get(System::A1);
    // generic point: two vertices, one edge
    CalibrationGraph g = build_graph(a1, tw({Monomial(0, 1)}));
    CHECK(g.vertices.size() == 2);
    CHECK(g.edges.size() == 1);
    // q point: two vertices, no edge
    g = build_graph(a1, tw({q(1)}));
    CHECK(g.vertices.size() == 2);
    CHECK(g.edges.empty());
    // unitary fixed point: a single vertex
    g = build_graph(a1, tw({Monomial()}));
    CHECK(g.vertices.size() == 1);
    CHECK(g.edges.empty());
}

TEST_CASE("component size multisets match the table rows") {
    const RootSystem& a2 = RootSystem::get(System::A2);
    CHECK(component_sizes(a2, tw({q(2), q(2)})) == std::multiset<size_t>{1, 2, 2, 1});

    const RootSystem& c2 = RootSystem::get(System::C2);
    CHECK(component_sizes(c2, tw({q(2), q(1)})) == std::multiset<size_t>{1, 1, 1, 1});

    const RootSystem& g2 = RootSystem::get(System::G2);
    CHECK(component_sizes(g2, tw({q(10), q(6)})) == std::multiset<size_t>{1, 5, 5, 1});
    CHECK(component_sizes(g2, tw({q(4), Monomial(8, 12)})) == std::multiset<size_t>{2, 4, 4, 2});
    CHECK(component_sizes(g2, tw({q(4), q(2)})) == std::multiset<size_t>{1, 1, 2, 1, 1});

    // regular point with empty P: a single component of size |W|
    TorusWeight tg = tw({Monomial(0, 1), Monomial(0, 3)});
    CHECK(component_sizes(a2, tg) == std::multiset<size_t>{6});
}

TEST_CASE("tableaux") {
    const RootSystem& g2 = RootSystem::get(System::G2);
    TorusWeight tc = tw({q(4), Monomial(8, 12)});   // alpha values (q^2, zeta_3)
    // J = {} always contains the identity
    auto shape = tableaux(g2, tc, {});
    REQUIRE(shape.has_value());
    CHECK(std::find(shape->tableaux.begin(), shape->tableaux.end(), g2.identity()) !=
          shape->tableaux.end());
    // J = {a1} has four tableaux
    shape = tableaux(g2, tc, {0});
    REQUIRE(shape.has_value());
    CHECK(shape->tableaux.size() == 4);
    // C2 (q^2, 1) point: J = {a1, a1+a2} is a single tableau
    const RootSystem& c2 = RootSystem::get(System::C2);
    auto shape2 = tableaux(c2, tw({q(2), q(1)}), {0, 2});
    REQUIRE(shape2.has_value());
    CHECK(shape2->tableaux.size() == 1);
    // J must be inside P(t)
    CHECK_THROWS_AS(tableaux(c2, tw({q(2), q(1)}), {1}), std::invalid_argument);
}

TEST_CASE("components and tableaux induce the same partition") {
    struct Case { System s; TorusWeight t; };
    std::vector<Case> cases = {
        {System::A2, tw({q(2), q(2)})},
        {System::C2, tw({q(2), q(1)})},
        {System::C2, tw({q(2), q(2)})},
        {System::G2, tw({q(4), q(2)})},
        {System::G2, tw({q(6), q(4)})},
    };
    for (const auto& c : cases) {
        const RootSystem& rs = RootSystem::get(c.s);
        CalibrationGraph g = build_graph(rs, c.t);
        std::set<std::set<std::string>> from_graph;
        for (const auto& comp : components(g)) {
            std::set<std::string> words;
            for (int v : comp) words.insert(rs.word_str(g.vertices[v].min_rep));
            from_graph.insert(words);
        }
        std::set<std::set<std::string>> from_shapes;
        auto orb = orbit(rs, c.t);
        size_t tableau_total = 0;
        for (const auto& shape : all_placed_shapes(rs, c.t)) {
            std::set<std::string> words;
            for (int w : shape.tableaux) {
                TorusWeight wt = weyl_act(rs, w, c.t);
                for (const auto& e : orb)
                    if (e.weight == wt) words.insert(rs.word_str(e.min_rep));
            }
            from_shapes.insert(words);
            tableau_total += shape.tableaux.size();
        }
        CHECK(from_graph == from_shapes);
        // tableaux partition the minimal coset representatives
        CHECK(tableau_total == static_cast<size_t>(rs.order() / stabilizer_order(rs, c.t)));
    }
}

TEST_CASE("calibratable weights") {
    const RootSystem& a2 = RootSystem::get(System::A2);
    // regular point: condition (a)
    TorusWeight tg = tw({Monomial(0, 1), Monomial(0, 3)});
    CHECK(is_calibratable(a2, tg, 0, 1));
    // A2 point with t(X^{alpha_1}) = 1: (a) fails and (b) never applies in type A2
    TorusWeight tc = tw({Monomial(0, 4), Monomial(0, 8)});
    CHECK(!is_calibratable(a2, tc, 0, 1));

    // G2: s_1 t_e is calibratable through condition (b)
    const RootSystem& g2 = RootSystem::get(System::G2);
    TorusWeight te = tw({q(4), q(2)});
    TorusWeight ste = weyl_act(g2, g2.simple_reflection(0), te);
    CHECK(is_calibratable(g2, ste, 0, 1));
    // but t_e itself is not (its alpha_2 value is 1)
    CHECK(!is_calibratable(g2, te, 0, 1));
}

TEST_CASE("placed skew shapes") {
    const RootSystem& g2 = RootSystem::get(System::G2);
    TorusWeight te = tw({q(4), q(2)});
    auto shape = tableaux(g2, te, {0});
    REQUIRE(shape.has_value());
    CHECK(is_placed_skew(g2, *shape));
    shape = tableaux(g2, te, {0, 2});
    REQUIRE(shape.has_value());
    CHECK(is_placed_skew(g2, *shape));
    shape = tableaux(g2, te, {0, 2, 3});
    REQUIRE(shape.has_value());
    CHECK(is_placed_skew(g2, *shape));
    // neither the empty set nor all of P is skew here
    shape = tableaux(g2, te, {});
    REQUIRE(shape.has_value());
    CHECK(!is_placed_skew(g2, *shape));
    shape = tableaux(g2, te, {0, 2, 3, 4});
    REQUIRE(shape.has_value());
    CHECK(!is_placed_skew(g2, *shape));

    // A2: (t_c, {a2}) is not skew, all its rows are non-calibrated
    const RootSystem& a2 = RootSystem::get(System::A2);
    TorusWeight tc = tw({Monomial(0, 4), Monomial(0, 8)});
    auto s2 = tableaux(a2, tc, {1});
    REQUIRE(s2.has_value());
    CHECK(!is_placed_skew(a2, *s2));

    // regular: every placed shape is skew
    const RootSystem& c2 = RootSystem::get(System::C2);
    TorusWeight tcc = tw({Monomial(6, 12), Monomial(6, 6)});
    for (const auto& s : all_placed_shapes(c2, tcc)) CHECK(is_placed_skew(c2, s));
}

TEST_CASE("DOT export is deterministic and well formed") {
    const RootSystem& c2 = RootSystem::get(System::C2);
    TorusWeight tb = tw({q(2), q(1)});
    CalibrationGraph g = build_graph(c2, tb);
    std::string d1 = to_dot(c2, g, "C2.t_b");
    std::string d2 = to_dot(c2, build_graph(c2, tb), "C2.t_b");
    CHECK(d1 == d2);
    CHECK(d1.find("graph \"C2.t_b\"") == 0);
    CHECK(d1.find("\"e\"") != std::string::npos);
}
