#include <doctest.h>

#include <algorithm>
#include <set>

#include "rank2/classify.hpp"

using namespace rank2;

TEST_CASE("catalog validates and covers every table") {
    const auto& cat = fixture_catalog();
    std::set<std::string> labels;
    for (const auto& f : cat) labels.insert(f.label);
    for (const char* want :
         {"A1.t_a", "A1.t_b", "A1.t_o+", "A1.t_o-", "A2.t_a", "A2.t_b", "A2.t_b*", "A2.t_c",
          "A2.t_d", "A2.t_e", "A2.t_f", "A2.t_g", "A2.t_o", "C2.t_a", "C2.t_b", "C2.t_c", "C2.t_d",
          "C2.t_e", "C2.t_f", "C2.t_g", "G2.t_a", "G2.t_b", "G2.t_c", "G2.t_d", "G2.t_e", "G2.t_f",
          "G2.t_g", "G2.t_h", "G2.t_i", "G2.t_j", "A1xA1.t_a*t_a", "A1xA1.t_a*t_o+",
          "A1xA1.t_o-*t_b"})
        CHECK(labels.count(want));
    // 4 + 16 + 9 + 7 + 10 fixtures
    CHECK(cat.size() == 46);
}

TEST_CASE("pinned fixture values") {
    const RootSystem& c2 = RootSystem::get(System::C2);
    const CentralCharFixture* f = find_fixture(System::C2, "t_b");
    REQUIRE(f != nullptr);
    PZSets pz = pz_sets(c2, f->t);
    CHECK(pz.p == std::vector<int>{0, 2, 3});
    CHECK(pz.z == std::vector<int>{1});

    const RootSystem& g2 = RootSystem::get(System::G2);
    f = find_fixture(System::G2, "t_i");
    REQUIRE(f != nullptr);
    pz = pz_sets(g2, f->t);
    CHECK(pz.p == std::vector<int>{1, 2});
    CHECK(pz.z == std::vector<int>{0});
    CHECK(eval_root(g2, f->t, 0).is_one());
    CHECK(eval_root(g2, f->t, 1) == Monomial::q_power(2));

    f = find_fixture(System::A1, "t_o-");
    REQUIRE(f != nullptr);
    CHECK(f->t.omega_values[0] == Monomial(field().n / 2, 0));
    pz = pz_sets(RootSystem::get(System::A1), f->t);
    CHECK(pz.p.empty());
    CHECK(pz.z == std::vector<int>{0});
}

TEST_CASE("generic oracle picks admissible small exponents") {
    const RootSystem& a1 = RootSystem::get(System::A1);
    TorusWeight t = generic_weight_oracle(a1, {});
    CHECK(t.omega_values[0] == Monomial(0, 1));   // v, one sixth of a q power

    const RootSystem& g2 = RootSystem::get(System::G2);
    TorusWeight th = generic_weight_oracle(g2, {{1, Monomial::q_power(2)}});
    PZSets pz = pz_sets(g2, th);
    CHECK(pz.p == std::vector<int>{1});
    CHECK(pz.z.empty());
    // and it avoids the q^{+-1} walls on every root
    for (int r = 0; r < g2.num_positive_roots(); ++r) {
        Monomial val = eval_root(g2, th, r);
        if (r == 1) continue;
        CHECK(val.v_pow % field().d != 0);
    }
}

TEST_CASE("field validation") {
    CHECK_NOTHROW(validate_field_for({System::G2}));
    set_field(4, 6);
    CHECK_THROWS_AS(validate_field_for({System::G2}), std::invalid_argument);
    CHECK_NOTHROW(validate_field_for({System::A1}));
    set_field(12, 4);
    CHECK_THROWS_AS(validate_field_for({System::A2}), std::invalid_argument);
    set_field(12, 6);
    CHECK_NOTHROW(validate_field_for(
        {System::A1, System::A1xA1, System::A2, System::C2, System::G2}));
}

TEST_CASE("single fixture reconstruction: A1") {
    ReportOptions opt;
    const CentralCharFixture* f = find_fixture(System::A1, "t_a");
    REQUIRE(f != nullptr);
    FixtureReport rep = reconstruct_inventory(*f, opt);
    CHECK(rep.diffs.empty());
    CHECK(rep.orbit_size == 2);
    CHECK(rep.modules.size() == 2);
    for (const auto& m : rep.modules) CHECK(m.dim == 1);
    CHECK(rep.principal_factors.size() == 2);

    f = find_fixture(System::A1, "t_o+");
    rep = reconstruct_inventory(*f, opt);
    CHECK(rep.diffs.empty());
    CHECK(rep.modules.size() == 1);
    CHECK(rep.modules[0].dim == 2);
    CHECK(rep.modules[0].tempered);
    CHECK(!rep.modules[0].square_integrable);
    CHECK(rep.modules[0].j == "nc");
}

TEST_CASE("single fixture reconstruction: C2 t_d") {
    ReportOptions opt;
    const CentralCharFixture* f = find_fixture(System::C2, "t_d");
    REQUIRE(f != nullptr);
    FixtureReport rep = reconstruct_inventory(*f, opt);
    CHECK(rep.diffs.empty());
    CHECK(rep.modules.size() == 2);
    for (const auto& m : rep.modules) {
        CHECK(m.dim == 4);
        CHECK(m.irreducible);
        CHECK(!m.calibrated);
    }
}

TEST_CASE("corrupted fixture yields diffs") {
    ReportOptions opt;
    CentralCharFixture bad = *find_fixture(System::A1, "t_a");
    bad.expected_modules[0].dim = 2;   // no 2-dimensional module with J = {} exists here
    FixtureReport rep = reconstruct_inventory(bad, opt);
    CHECK(!rep.diffs.empty());
}

TEST_CASE("report filters and serialization") {
    ReportOptions opt;
    opt.system_filter = System::A1;
    ClassReport rep = full_report(opt);
    CHECK(rep.fixtures.size() == 4);
    CHECK(rep.total_diffs == 0);

    std::string json = report_to_json(rep);
    CHECK(json.find("\"fixtures\"") != std::string::npos);
    CHECK(json.find("\"A1.t_a\"") != std::string::npos);
    std::string json2 = report_to_json(full_report(opt));
    CHECK(json == json2);   // byte stable

    std::string csv = report_to_csv(rep);
    CHECK(csv.find("A1.t_o+") != std::string::npos);
    std::string text = report_to_text(rep);
    CHECK(text.find("total diffs: 0") != std::string::npos);
}

TEST_CASE("parallel evaluation is deterministic") {
    ReportOptions seq, par;
    seq.system_filter = System::A1;
    par.system_filter = System::A1;
    par.jobs = 4;
    CHECK(report_to_json(full_report(seq)) == report_to_json(full_report(par)));
}

TEST_CASE("graph export") {
    ReportOptions opt;
    opt.system_filter = System::A2;
    auto graphs = export_graphs(opt);
    CHECK(graphs.size() == 9);
    bool found = false;
    for (const auto& [name, dot] : graphs) {
        if (name == "A2.t_d.dot") {
            found = true;
            // three vertices, no edges
            CHECK(dot.find("--") == std::string::npos);
            CHECK(dot.find("\"s2s1\"") != std::string::npos);
        }
    }
    CHECK(found);
}
