#include <doctest.h>

#include <algorithm>
#include <set>

#include "rank2/root_system.hpp"

using namespace rank2;

namespace {

// independent oracle: closure of the generator matrices on omega coordinates
int brute_force_order(const RootSystem& rs) {
    int n = rs.rank();
    auto refl = [&](int i) {
        IMat m(n, IVec(n, 0));
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m[j][k] = (j == k ? 1 : 0) - (k == i ? rs.cartan()[i][j] : 0);
        return m;
    };
    auto mul = [&](const IMat& a, const IMat& b) {
        IMat m(n, IVec(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) m[i][j] += a[i][k] * b[k][j];
        return m;
    };
    std::set<IMat> seen;
    IMat id(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    seen.insert(id);
    bool grown = true;
    while (grown) {
        grown = false;
        std::set<IMat> next = seen;
        for (const auto& m : seen)
            for (int i = 0; i < n; ++i)
                if (next.insert(mul(m, refl(i))).second) grown = true;
        seen = next;
    }
    return static_cast<int>(seen.size());
}

int find_root(const RootSystem& rs, const IVec& alpha) {
    int r = rs.root_index(alpha);
    REQUIRE(r >= 0);
    return r;
}

}  // namespace

TEST_CASE("Weyl group orders match brute-force closure") {
    CHECK(RootSystem::get(System::A1).order() == 2);
    CHECK(RootSystem::get(System::A1xA1).order() == 4);
    CHECK(RootSystem::get(System::A2).order() == 6);
    CHECK(RootSystem::get(System::C2).order() == 8);
    CHECK(RootSystem::get(System::G2).order() == 12);
    for (System s : {System::A1, System::A1xA1, System::A2, System::C2, System::G2})
        CHECK(RootSystem::get(s).order() == brute_force_order(RootSystem::get(s)));
}

TEST_CASE("positive root counts and Cartan data") {
    CHECK(RootSystem::get(System::A1).num_positive_roots() == 1);
    CHECK(RootSystem::get(System::A1xA1).num_positive_roots() == 2);
    CHECK(RootSystem::get(System::A2).num_positive_roots() == 3);
    CHECK(RootSystem::get(System::C2).num_positive_roots() == 4);
    CHECK(RootSystem::get(System::G2).num_positive_roots() == 6);
    CHECK(RootSystem::get(System::A2).cartan()[0][1] == -1);
    CHECK(RootSystem::get(System::C2).cartan()[0][1] == -2);
    CHECK(RootSystem::get(System::G2).cartan()[0][1] == -3);
    CHECK(RootSystem::get(System::A1xA1).braid_order(0, 1) == 2);
    CHECK(RootSystem::get(System::A2).braid_order(0, 1) == 3);
    CHECK(RootSystem::get(System::C2).braid_order(0, 1) == 4);
    CHECK(RootSystem::get(System::G2).braid_order(0, 1) == 6);
    CHECK(RootSystem::get(System::C2).simple_is_long(0));
    CHECK(!RootSystem::get(System::C2).simple_is_long(1));
    CHECK(RootSystem::get(System::G2).simple_is_long(0));
}

TEST_CASE("reflection action on roots") {
    const RootSystem& a2 = RootSystem::get(System::A2);
    // s_1(alpha_1) = -alpha_1
    CHECK(a2.act_alpha(a2.simple_reflection(0), {1, 0}) == IVec{-1, 0});
    // A2: s_1(alpha_2) = alpha_1 + alpha_2
    CHECK(a2.act_alpha(a2.simple_reflection(0), {0, 1}) == IVec{1, 1});
    // C2: s_2(alpha_1) = alpha_1 + 2 alpha_2
    const RootSystem& c2 = RootSystem::get(System::C2);
    CHECK(c2.act_alpha(c2.simple_reflection(1), {1, 0}) == IVec{1, 2});
    // G2: s_2(alpha_1) = alpha_1 + 3 alpha_2
    const RootSystem& g2 = RootSystem::get(System::G2);
    CHECK(g2.act_alpha(g2.simple_reflection(1), {1, 0}) == IVec{1, 3});
}

TEST_CASE("inversion sets") {
    const RootSystem& a2 = RootSystem::get(System::A2);
    CHECK(a2.inversion_set(a2.simple_reflection(0)) == std::vector<int>{0});
    // A2: R(s_2 s_1) = {alpha_1, alpha_1 + alpha_2}
    int s2s1 = a2.multiply(a2.simple_reflection(1), a2.simple_reflection(0));
    CHECK(a2.inversion_set(s2s1) ==
          std::vector<int>{find_root(a2, {1, 0}), find_root(a2, {1, 1})});
    // C2: R(w_0) is all four positive roots
    const RootSystem& c2 = RootSystem::get(System::C2);
    CHECK(c2.inversion_set(c2.longest_element()) == std::vector<int>{0, 1, 2, 3});
    for (System s : {System::A1, System::A1xA1, System::A2, System::C2, System::G2}) {
        const RootSystem& rs = RootSystem::get(s);
        CHECK(rs.inversion_set(rs.identity()).empty());
        for (int w = 0; w < rs.order(); ++w)
            CHECK(static_cast<int>(rs.inversion_set(w).size()) == rs.length(w));
    }
}

TEST_CASE("length changes by one under left multiplication") {
    for (System s : {System::A2, System::C2, System::G2}) {
        const RootSystem& rs = RootSystem::get(s);
        for (int w = 0; w < rs.order(); ++w)
            for (int i = 0; i < rs.rank(); ++i) {
                int sw = rs.multiply(rs.simple_reflection(i), w);
                CHECK(std::abs(rs.length(sw) - rs.length(w)) == 1);
            }
    }
}

TEST_CASE("braid relation for the action matrices") {
    for (System s : {System::A1xA1, System::A2, System::C2, System::G2}) {
        const RootSystem& rs = RootSystem::get(s);
        int m = rs.braid_order(0, 1);
        int lhs = rs.identity(), rhs = rs.identity();
        for (int k = 0; k < m; ++k) {
            lhs = rs.multiply(lhs, rs.simple_reflection(k % 2));
            rhs = rs.multiply(rhs, rs.simple_reflection(1 - k % 2));
        }
        CHECK(lhs == rhs);
        CHECK(lhs == rs.longest_element());
    }
    // A1xA1: the two reflections commute
    const RootSystem& rs = RootSystem::get(System::A1xA1);
    CHECK(rs.multiply(rs.simple_reflection(0), rs.simple_reflection(1)) ==
          rs.multiply(rs.simple_reflection(1), rs.simple_reflection(0)));
}

TEST_CASE("action is a group homomorphism") {
    const RootSystem& g2 = RootSystem::get(System::G2);
    for (int u = 0; u < g2.order(); ++u)
        for (int v = 0; v < g2.order(); ++v) {
            IVec lam{2, -1};
            CHECK(g2.act_omega(g2.multiply(u, v), lam) == g2.act_omega(u, g2.act_omega(v, lam)));
        }
}

TEST_CASE("minimal coset representatives") {
    const RootSystem& c2 = RootSystem::get(System::C2);
    CHECK(c2.min_coset_reps({}).size() == 8);
    auto reps = c2.min_coset_reps({0});
    CHECK(reps.size() == 4);
    for (int w : reps) {
        auto inv = c2.inversion_set(w);
        CHECK(std::find(inv.begin(), inv.end(), 0) == inv.end());
    }
    CHECK(RootSystem::get(System::G2).min_coset_reps({1}).size() == 6);
}

TEST_CASE("reduced words are lexicographically least and parseable") {
    const RootSystem& g2 = RootSystem::get(System::G2);
    CHECK(g2.word_str(g2.identity()) == "e");
    CHECK(g2.word_str(g2.simple_reflection(0)) == "s1");
    // the longest element of G2 has the alternating word starting with s1
    CHECK(g2.word_str(g2.longest_element()) == "s1s2s1s2s1s2");
    for (int w = 0; w < g2.order(); ++w) {
        auto parsed = g2.parse_word(g2.word_str(w));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == w);
    }
    CHECK(!g2.parse_word("s3").has_value());
}

TEST_CASE("root tokens") {
    const RootSystem& g2 = RootSystem::get(System::G2);
    CHECK(g2.root_token(0) == "a1");
    CHECK(g2.root_token(3) == "a1+2a2");
    CHECK(g2.root_token(5) == "2a1+3a2");
    CHECK(g2.parse_root_token("a1+3a2") == 4);
    CHECK(!g2.parse_root_token("a7").has_value());
}
