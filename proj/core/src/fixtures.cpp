#include <algorithm>
#include <functional>
#include <numeric>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rank2/classify.hpp"

namespace rank2 {

namespace {

using Support = std::vector<std::pair<std::string, int>>;

ExpectedModule cal(int dim, std::vector<int> j, bool tempered, bool sq, std::string langlands,
                   std::string triple) {
    ExpectedModule m;
    m.dim = dim;
    m.calibrated = true;
    m.j = std::move(j);
    m.tempered = tempered;
    m.square_integrable = sq;
    m.langlands = std::move(langlands);
    m.indexing_triple = std::move(triple);
    return m;
}

ExpectedModule nc(int dim, Support support, bool tempered, bool sq, std::string langlands,
                  std::string triple) {
    ExpectedModule m;
    m.dim = dim;
    m.calibrated = false;
    m.support = std::move(support);
    m.tempered = tempered;
    m.square_integrable = sq;
    m.langlands = std::move(langlands);
    m.indexing_triple = std::move(triple);
    return m;
}

Monomial q(long k) { return Monomial::q_power(k); }
Monomial one() { return Monomial(); }
Monomial minus_one() { return Monomial(field().n / 2, 0); }

}  // namespace

TorusWeight generic_weight_oracle(const RootSystem& rs, const std::map<int, Monomial>& demands) {
    const int d = field().d;
    const int n = rs.rank();
    // monomial values a weight must avoid on undemanded positive roots:
    // 1 and q^{+-2} keep P/Z exact, q^{+-1} keeps the point off the special
    // loci that flip tempered verdicts
    auto bad = [&](const Monomial& m) {
        if (m.zeta_pow != 0) return false;
        return m.v_pow == 0 || m.v_pow == d || m.v_pow == -d || m.v_pow == 2 * d || m.v_pow == -2 * d;
    };
    // component values ordered 0, 1, -1, 2, -2, ...
    auto nth = [](int k) { return (k % 2 == 1) ? (k + 1) / 2 : -k / 2; };
    const int budget = 6 * d;
    for (int total = 0; total <= budget; ++total) {
        std::vector<int> picks(n, 0);
        // enumerate |p_1| + ... + |p_n| == total in deterministic order
        std::function<const TorusWeight*(int, int)> scan = [&](int pos, int remaining) -> const TorusWeight* {
            static TorusWeight found;
            if (pos == n) {
                if (remaining != 0) return nullptr;
                TorusWeight t;
                for (int i = 0; i < n; ++i) t.omega_values.push_back(Monomial(0, picks[i]));
                for (int r = 0; r < rs.num_positive_roots(); ++r) {
                    Monomial val = eval_root(rs, t, r);
                    auto it = demands.find(r);
                    if (it != demands.end()) {
                        if (val != it->second) return nullptr;
                    } else if (bad(val)) {
                        return nullptr;
                    }
                }
                found = t;
                return &found;
            }
            for (int k = 0; 2 * std::abs(nth(k)) <= 2 * remaining; ++k) {
                int val = nth(k);
                if (std::abs(val) > remaining) continue;
                picks[pos] = val;
                if (const TorusWeight* t = scan(pos + 1, remaining - std::abs(val))) return t;
            }
            return nullptr;
        };
        if (const TorusWeight* t = scan(0, total)) return *t;
    }
    throw std::domain_error("generic_weight_oracle: no admissible weight in search budget");
}

void validate_field_for(const std::vector<System>& systems) {
    int need_n = 1, need_d = 1;
    auto lcm = [](int a, int b) { return a / std::gcd(a, b) * b; };
    for (System s : systems) {
        switch (s) {
            case System::A1:
            case System::A1xA1:
                need_n = lcm(need_n, 2);   // the sign character at the t_o fixtures
                break;
            case System::A2:
                need_d = lcm(need_d, 3);   // cube-root lifts for the t_c / t_d rows
                break;
            case System::C2:
                need_n = lcm(need_n, 2);   // -1 in the t_c row
                break;
            case System::G2:
                need_n = lcm(need_n, 6);   // zeta_3 at t_c, -1 at t_d
                need_d = lcm(need_d, 3);   // q^{2/3} at t_f
                break;
        }
    }
    if (field().n % need_n != 0) {
        std::ostringstream os;
        os << "cyclotomic order N=" << field().n << " must be divisible by " << need_n
           << " for the selected systems (e.g. zeta_3 at G2.t_c, -1 at the sign characters)";
        throw std::invalid_argument(os.str());
    }
    if (field().d % need_d != 0) {
        std::ostringstream os;
        os << "q-root denominator D=" << field().d << " must be divisible by " << need_d
           << " for the selected systems (fractional q-powers in the fixture lifts)";
        throw std::invalid_argument(os.str());
    }
}

namespace {

std::vector<CentralCharFixture> build_a1() {
    std::vector<CentralCharFixture> out;
    {
        CentralCharFixture f;
        f.label = "A1.t_a";
        f.system = System::A1;
        f.t.omega_values = {q(1)};
        f.expected_p = {0};
        f.expected_z = {};
        f.expected_modules = {
            cal(1, {}, false, false, "(t_a,{})", "(t_a,0,1)"),
            cal(1, {0}, true, true, "tempered", "(t_a,e_{a1},1)"),
        };
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "A1.t_b";
        f.system = System::A1;
        f.t = generic_weight_oracle(RootSystem::get(System::A1), {});
        f.expected_p = {};
        f.expected_z = {};
        f.expected_modules = {cal(2, {}, false, false, "(t_b,{})", "(t_b,0,1)")};
        out.push_back(f);
    }
    for (int sign = 0; sign < 2; ++sign) {
        CentralCharFixture f;
        f.label = sign == 0 ? "A1.t_o+" : "A1.t_o-";
        f.system = System::A1;
        f.t.omega_values = {sign == 0 ? one() : minus_one()};
        f.expected_p = {};
        f.expected_z = {0};
        f.expected_modules = {nc(2, {{"e", 2}}, true, false, "tempered", "(t_o,0,1)")};
        f.comment = "one of the two unitary lifts of the trivial character of the root lattice";
        out.push_back(f);
    }
    return out;
}

std::vector<CentralCharFixture> build_a2() {
    const RootSystem& rs = RootSystem::get(System::A2);
    const int d = field().d;
    std::vector<CentralCharFixture> out;
    {
        CentralCharFixture f;
        f.label = "A2.t_a";
        f.system = System::A2;
        f.t.omega_values = {q(2), q(2)};
        f.expected_p = {0, 1};
        f.expected_z = {};
        f.expected_modules = {
            cal(1, {}, false, false, "(t_a,{})", "(t_a,0,1)"),
            cal(2, {1}, false, false, "(s_1t_a,{2})", "(t_a,e_{a2},1)"),
            cal(2, {0}, false, false, "(s_2t_a,{1})", "(t_a,e_{a1},1)"),
            cal(1, {0, 1}, true, true, "tempered", "(t_a,e_{a1}+e_{a2},1)"),
        };
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "A2.t_b";
        f.system = System::A2;
        f.t = generic_weight_oracle(rs, {{1, q(2)}});
        f.expected_p = {1};
        f.expected_z = {};
        f.expected_modules = {
            cal(3, {}, false, false, "(t_b,{})", "(t_b,0,1)"),
            cal(3, {1}, false, false, "(s_2t_b,{2})", "(t_b,e_{a2},1)"),
        };
        out.push_back(f);
    }
    {
        // special point of the t_b family: t_b* = s_2 s_1 t for t(X^{-a1}) =
        // t(X^{-a2}) = q, which makes the J = {a2} module tempered.  On the
        // omega basis the point is (1, q), with alpha values (q^{-1}, q^2).
        CentralCharFixture f;
        f.label = "A2.t_b*";
        f.system = System::A2;
        f.t.omega_values = {one(), q(1)};
        f.expected_p = {1};
        f.expected_z = {};
        f.expected_modules = {
            cal(3, {}, false, false, "(t_b,{})", "(t_b,0,1)"),
            cal(3, {1}, true, false, "(s_2t_b,{2})", "(t_b,e_{a2},1)"),
        };
        f.comment = "tempered special case of t_b";
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "A2.t_c";
        f.system = System::A2;
        f.t.omega_values = {Monomial(0, 2 * d / 3), Monomial(0, 4 * d / 3)};   // alpha values (1, q^2)
        f.expected_p = {1, 2};
        f.expected_z = {0};
        f.expected_modules = {
            nc(3, {{"e", 2}, {"s2", 1}}, false, false, "(t_c,{1})", "(t_c,0,1)"),
            nc(3, {{"s2", 1}, {"s1s2", 2}}, false, false, "(s_2t_c,{2})", "(t_c,e_{a2},1)"),
        };
        f.induced = {{{1}, "e", {TSign::PlusQ}}, {{1}, "s2", {TSign::MinusQInv}}};
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "A2.t_d";
        f.system = System::A2;
        f.t.omega_values = {Monomial(0, 4 * d / 3), Monomial(0, 2 * d / 3)};   // alpha values (q^2, 1)
        f.expected_p = {0, 2};
        f.expected_z = {1};
        f.expected_modules = {
            nc(3, {{"e", 2}, {"s1", 1}}, false, false, "(t_d,{2})", "(t_d,0,1)"),
            nc(3, {{"s1", 1}, {"s2s1", 2}}, false, false, "(s_1t_d,{1})", "(t_d,e_{a1},1)"),
        };
        f.induced = {{{0}, "e", {TSign::PlusQ}}, {{0}, "s1", {TSign::MinusQInv}}};
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "A2.t_e";
        f.system = System::A2;
        f.t = generic_weight_oracle(rs, {{0, one()}});
        f.expected_p = {};
        f.expected_z = {0};
        f.expected_modules = {
            nc(6, {{"e", 2}, {"s2", 2}, {"s1s2", 2}}, false, false, "(t_e,{1})", "(t_e,0,1)")};
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "A2.t_f";
        f.system = System::A2;
        f.t = generic_weight_oracle(rs, {{1, one()}});
        f.expected_p = {};
        f.expected_z = {1};
        f.expected_modules = {
            nc(6, {{"e", 2}, {"s1", 2}, {"s2s1", 2}}, false, false, "(t_f,{2})", "(t_f,0,1)")};
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "A2.t_g";
        f.system = System::A2;
        f.t = generic_weight_oracle(rs, {});
        f.expected_p = {};
        f.expected_z = {};
        f.expected_modules = {cal(6, {}, false, false, "(t_g,{})", "(t_g,0,1)")};
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "A2.t_o";
        f.system = System::A2;
        f.t.omega_values = {one(), one()};
        f.expected_p = {};
        f.expected_z = {0, 1, 2};
        f.expected_modules = {nc(6, {{"e", 6}}, true, false, "tempered", "(t_o,0,1)")};
        f.comment = "Z(t_o) contains every positive root; the table prints only the simple ones";
        out.push_back(f);
    }
    return out;
}

std::vector<CentralCharFixture> build_c2() {
    const RootSystem& rs = RootSystem::get(System::C2);
    std::vector<CentralCharFixture> out;
    {
        CentralCharFixture f;
        f.label = "C2.t_a";
        f.system = System::C2;
        f.t.omega_values = {q(4), q(3)};   // alpha values (q^2, q^2)
        f.expected_p = {0, 1};
        f.expected_z = {};
        f.expected_modules = {
            cal(1, {}, false, false, "(s_1s_2s_1s_2t_a,{})", "(t_a,0,1)"),
            cal(3, {0}, false, false, "(s_1t_a,{1})", "(t_a,e_{a1},1)"),
            cal(3, {1}, false, false, "(s_2t_a,{2})", "(t_a,e_{a2},1)"),
            cal(1, {0, 1}, true, true, "tempered", "(t_a,e_{a1}+e_{a2},1)"),
        };
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "C2.t_b";
        f.system = System::C2;
        f.t.omega_values = {q(2), q(1)};   // alpha values (q^2, 1)
        f.expected_p = {0, 2, 3};
        f.expected_z = {1};
        f.expected_modules = {
            nc(3, {{"e", 2}, {"s1", 1}}, false, false, "(t_b,{2})", "(t_b,0,1)"),
            cal(1, {0}, false, false, "(s_1t_b,{1})", "(t_b,e_{a1},1)"),
            cal(1, {0, 2}, true, false, "tempered", "(t_b,e_{a1+a2},-1)"),
            nc(3, {{"s2s1", 1}, {"s1s2s1", 2}}, true, false, "tempered", "(t_b,e_{a1+a2},1)"),
        };
        f.induced = {{{0}, "e", {TSign::PlusQ}}, {{0}, "s1", {TSign::MinusQInv}}};
        f.comment =
            "the two tempered rows are classically square integrable, but both carry the weight "
            "s2s1 t_b whose radial exponents are (0, -1/2), so the strict exponent criterion "
            "reports them as tempered only";
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "C2.t_c";
        f.system = System::C2;
        f.t.omega_values = {Monomial(field().n / 2, 2 * field().d), Monomial(field().n / 2, field().d)};
        // alpha values (q^2, -1); the lift (-q^2, -q) on the omega basis
        f.expected_p = {0, 3};
        f.expected_z = {};
        f.expected_modules = {
            cal(2, {}, false, false, "(t_c,{2})", "(t_c,0,1)"),
            cal(2, {0}, false, false, "(s_1t_c,{1})", "(t_c,e_{a1},1)"),
            cal(2, {3}, false, false, "(s_1s_2t_c,{1})", "(t_c,e_{a1+2a2},1)"),
            cal(2, {0, 3}, true, true, "tempered", "(t_c,e_{a1}+e_{a1+2a2},1)"),
        };
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "C2.t_d";
        f.system = System::C2;
        f.t.omega_values = {q(2), q(2)};   // alpha values (1, q^2)
        f.expected_p = {1, 2};
        f.expected_z = {0};
        f.expected_modules = {
            nc(4, {{"e", 2}, {"s2", 1}, {"s1s2", 1}}, false, false, "(t_d,{1})", "(t_d,0,1)"),
            nc(4, {{"s2", 1}, {"s1s2", 1}, {"s2s1s2", 2}}, false, false, "(s_2t_d,{2})",
               "(t_d,e_{a2},1)"),
        };
        f.induced = {{{1}, "e", {TSign::PlusQ}}, {{1}, "s2", {TSign::MinusQInv}}};
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "C2.t_e";
        f.system = System::C2;
        f.t.omega_values = {q(1), one()};   // alpha values (q^2, q^{-1})
        f.expected_p = {0};
        f.expected_z = {3};
        f.expected_modules = {
            nc(4, {{"e", 2}, {"s2", 2}}, false, false, "(s_2t_e,{1})", "(t_e,0,1)"),
            nc(4, {{"s1", 2}, {"s2s1", 2}}, true, false, "tempered", "(t_e,e_{a1},1)"),
        };
        f.induced = {{{0}, "e", {TSign::PlusQ}}, {{0}, "s1", {TSign::MinusQInv}}};
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "C2.t_f";
        f.system = System::C2;
        f.t = generic_weight_oracle(rs, {{0, q(2)}});
        f.expected_p = {0};
        f.expected_z = {};
        f.expected_modules = {
            cal(4, {}, false, false, "(t_f,{})", "(t_f,0,1)"),
            cal(4, {0}, false, false, "(s_1t_f,{1})", "(t_f,e_{a1},1)"),
        };
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "C2.t_g";
        f.system = System::C2;
        f.t = generic_weight_oracle(rs, {{1, q(2)}});
        f.expected_p = {1};
        f.expected_z = {};
        f.expected_modules = {
            cal(4, {}, false, false, "(t_g,{})", "(t_g,0,1)"),
            cal(4, {1}, false, false, "(s_2t_g,{2})", "(t_g,e_{a2},1)"),
        };
        out.push_back(f);
    }
    return out;
}

std::vector<CentralCharFixture> build_g2() {
    const RootSystem& rs = RootSystem::get(System::G2);
    const int n = field().n, d = field().d;
    std::vector<CentralCharFixture> out;
    {
        CentralCharFixture f;
        f.label = "G2.t_a";
        f.system = System::G2;
        f.t.omega_values = {q(10), q(6)};   // alpha values (q^2, q^2)
        f.expected_p = {0, 1};
        f.expected_z = {};
        f.expected_modules = {
            cal(1, {}, false, false, "(t_a,{})", "(t_a,0,1)"),
            cal(5, {0}, false, false, "(s_1t_a,{1})", "(t_a,e_{a1},1)"),
            cal(5, {1}, false, false, "(s_2t_a,{2})", "(t_a,e_{a2},1)"),
            cal(1, {0, 1}, true, true, "tempered", "(t_a,e_{a1}+e_{a2},1)"),
        };
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "G2.t_b";
        f.system = System::G2;
        f.t = generic_weight_oracle(rs, {{0, q(2)}});
        f.expected_p = {0};
        f.expected_z = {};
        f.expected_modules = {
            cal(6, {}, false, false, "(t_b,{})", "(t_b,0,1)"),
            cal(6, {0}, false, false, "(s_1t_b,{1})", "(t_b,e_{a1},1)"),
        };
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "G2.t_c";
        f.system = System::G2;
        f.t.omega_values = {q(4), Monomial(2 * n / 3, 2 * d)};   // alpha values (q^2, zeta_3)
        f.expected_p = {0, 4};
        f.expected_z = {};
        f.expected_modules = {
            cal(2, {}, false, false, "(t_c,{2})", "(t_c,0,1)"),
            cal(4, {0}, false, false, "(s_1t_c,{1})", "(t_c,e_{a1},1)"),
            cal(4, {4}, false, false, "(s_1s_2t_c,{1})", "(t_c,e_{a1+3a2},1)"),
            cal(2, {0, 4}, true, true, "tempered", "(t_c,e_{a1}+e_{a1+3a2},1)"),
        };
        f.comment = "the circular part of the alpha_2 value is the pinned cube-root lift";
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "G2.t_d";
        f.system = System::G2;
        f.t.omega_values = {Monomial(n / 2, 4 * d), q(2)};   // alpha values (q^2, -1)
        f.expected_p = {0, 3};
        f.expected_z = {};
        f.expected_modules = {
            cal(3, {}, false, false, "(t_d,{2})", "(t_d,0,1)"),
            cal(3, {0}, false, false, "(s_1t_d,{1})", "(t_d,e_{a1},1)"),
            cal(3, {3}, false, false, "(s_2s_1s_2t_d,{2})", "(t_d,e_{a1+2a2},1)"),
            cal(3, {0, 3}, true, true, "tempered", "(t_d,e_{a1}+e_{a1+2a2},1)"),
        };
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "G2.t_e";
        f.system = System::G2;
        f.t.omega_values = {q(4), q(2)};   // alpha values (q^2, 1)
        f.expected_p = {0, 2, 3, 4};
        f.expected_z = {1};
        f.expected_modules = {
            nc(3, {{"e", 2}, {"s1", 1}}, false, false, "(t_e,{2})", "(t_e,0,1)"),
            cal(1, {0}, false, false, "(s_1t_e,{1})", "(t_e,e_{a1},1)"),
            cal(2, {0, 2}, false, false, "(s_2s_1t_e,{2})", "(t_e,e_{a1+a2},1)"),
            cal(1, {0, 2, 3}, true, true, "tempered", "(t_e,e_{a1}+e_{a1+2a2},(21))"),
            nc(3, {{"s2s1s2s1", 1}, {"s1s2s1s2s1", 2}}, true, true, "tempered",
               "(t_e,e_{a1}+e_{a1+2a2},(3))"),
        };
        f.comment =
            "the starred three-dimensional factor mirrors the unstarred one: generalized "
            "dimensions 1 at s2s1s2s1 t_e and 2 at s1s2s1s2s1 t_e, forced by the weight-sum rule";
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "G2.t_f";
        f.system = System::G2;
        f.t.omega_values = {q(2), Monomial(0, 2 * d / 3)};   // alpha values (q^2, q^{-2/3})
        f.expected_p = {0, 5};
        f.expected_z = {4};
        f.expected_modules = {
            nc(6, {{"e", 2}, {"s1", 1}, {"s2", 2}, {"s2s1", 1}}, false, false, "(t_f,{1})",
               "(t_f,0,1)"),
            nc(6, {{"s1", 1}, {"s2s1", 1}, {"s1s2s1", 2}, {"s2s1s2s1", 2}}, false, false,
               "(s_1t_f,{1})", "(t_f,e_{a1},1)"),
        };
        f.induced = {{{0}, "e", {TSign::PlusQ}}, {{0}, "s1", {TSign::MinusQInv}}};
        f.comment = "the alpha_2 value is pinned to the real cube-root lift of q^{-2}";
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "G2.t_g";
        f.system = System::G2;
        f.t.omega_values = {q(1), one()};   // alpha values (q^2, q^{-1})
        f.expected_p = {0};
        f.expected_z = {3};
        f.expected_modules = {
            nc(6, {{"e", 2}, {"s2", 2}, {"s1s2", 2}}, false, false, "(t_g,{2})", "(t_g,0,1)"),
            nc(6, {{"s1", 2}, {"s2s1", 2}, {"s1s2s1", 2}}, true, false, "tempered",
               "(t_g,e_{a1},1)"),
        };
        f.induced = {{{0}, "e", {TSign::PlusQ}}, {{0}, "s1", {TSign::MinusQInv}}};
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "G2.t_h";
        f.system = System::G2;
        f.t = generic_weight_oracle(rs, {{1, q(2)}});
        f.expected_p = {1};
        f.expected_z = {};
        f.expected_modules = {
            cal(6, {}, false, false, "(t_h,{})", "(t_h,0,1)"),
            cal(6, {1}, false, false, "(s_2t_h,{2})", "(t_h,e_{a2},1)"),
        };
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "G2.t_i";
        f.system = System::G2;
        f.t.omega_values = {q(6), q(4)};   // alpha values (1, q^2)
        f.expected_p = {1, 2};
        f.expected_z = {0};
        f.expected_modules = {
            nc(6, {{"e", 2}, {"s2", 1}, {"s1s2", 1}, {"s2s1s2", 1}, {"s1s2s1s2", 1}}, false, false,
               "(t_i,{1})", "(t_i,0,1)"),
            nc(6, {{"s2", 1}, {"s1s2", 1}, {"s2s1s2", 1}, {"s1s2s1s2", 1}, {"s2s1s2s1s2", 2}},
               false, false, "(s_2t_i,{2})", "(t_i,e_{a2},1)"),
        };
        f.induced = {{{1}, "e", {TSign::PlusQ}}, {{1}, "s2", {TSign::MinusQInv}}};
        out.push_back(f);
    }
    {
        CentralCharFixture f;
        f.label = "G2.t_j";
        f.system = System::G2;
        f.t.omega_values = {one(), q(1)};   // alpha values (q^{-3}, q^2)
        f.expected_p = {1};
        f.expected_z = {5};
        f.expected_modules = {
            nc(6, {{"e", 2}, {"s1", 2}, {"s2s1", 2}}, false, false, "(t_j,{1})", "(t_j,0,1)"),
            nc(6, {{"s2", 2}, {"s1s2", 2}, {"s2s1s2", 2}}, true, false, "tempered",
               "(t_j,e_{a2},1)"),
        };
        f.induced = {{{1}, "e", {TSign::PlusQ}}, {{1}, "s2", {TSign::MinusQInv}}};
        f.comment = "the alpha_1 value is the real square-root lift q^{-3} of q^{-6}";
        out.push_back(f);
    }
    return out;
}

// Cross products of the A1 fixtures realized on the rank-two orthogonal system.
std::vector<CentralCharFixture> build_a1xa1(const std::vector<CentralCharFixture>& a1) {
    const RootSystem& rs = RootSystem::get(System::A1xA1);
    const RootSystem& rs1 = RootSystem::get(System::A1);
    std::vector<CentralCharFixture> out;

    // support of an A1 expected module, materialized for product bookkeeping
    auto a1_support = [&](const CentralCharFixture& f, const ExpectedModule& m) -> Support {
        if (!m.calibrated) return m.support;
        auto shape = tableaux(rs1, f.t, m.j);
        Support s;
        for (int w : shape->tableaux) s.push_back({rs1.word_str(w), 1});
        return s;
    };

    for (const auto& fx : a1) {
        for (const auto& fy : a1) {
            CentralCharFixture f;
            std::string cx = fx.label.substr(3), cy = fy.label.substr(3);
            f.label = "A1xA1." + cx + "*" + cy;
            f.system = System::A1xA1;
            f.t.omega_values = {fx.t.omega_values[0], fy.t.omega_values[0]};
            if (!fx.expected_p.empty()) f.expected_p.push_back(0);
            if (!fy.expected_p.empty()) f.expected_p.push_back(1);
            if (!fx.expected_z.empty()) f.expected_z.push_back(0);
            if (!fy.expected_z.empty()) f.expected_z.push_back(1);
            std::vector<OrbitEntry> orb = orbit(rs, f.t);
            for (const auto& mx : fx.expected_modules) {
                for (const auto& my : fy.expected_modules) {
                    ExpectedModule m;
                    m.dim = mx.dim * my.dim;
                    m.calibrated = mx.calibrated && my.calibrated;
                    for (int r : mx.j) { (void)r; m.j.push_back(0); }
                    for (int r : my.j) { (void)r; m.j.push_back(1); }
                    if (!m.calibrated) {
                        m.j.clear();
                        std::map<int, int> agg;   // orbit index -> dim
                        for (const auto& [wx, dx] : a1_support(fx, mx)) {
                            for (const auto& [wy, dy] : a1_support(fy, my)) {
                                int ex = wx == "e" ? rs.identity() : rs.simple_reflection(0);
                                int ey = wy == "e" ? rs.identity() : rs.simple_reflection(1);
                                TorusWeight w = weyl_act(rs, rs.multiply(ex, ey), f.t);
                                for (size_t k = 0; k < orb.size(); ++k)
                                    if (orb[k].weight == w) agg[static_cast<int>(k)] += dx * dy;
                            }
                        }
                        for (const auto& [k, dim] : agg)
                            m.support.push_back({rs.word_str(orb[k].min_rep), dim});
                    }
                    m.tempered = mx.tempered && my.tempered;
                    m.square_integrable = mx.square_integrable && my.square_integrable;
                    m.langlands = mx.langlands + " x " + my.langlands;
                    m.indexing_triple = mx.indexing_triple + " x " + my.indexing_triple;
                    f.expected_modules.push_back(std::move(m));
                }
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<CentralCharFixture> build_catalog() {
    std::vector<CentralCharFixture> out;
    auto a1 = build_a1();
    out.insert(out.end(), a1.begin(), a1.end());
    auto a1x = build_a1xa1(a1);
    out.insert(out.end(), a1x.begin(), a1x.end());
    auto a2 = build_a2();
    out.insert(out.end(), a2.begin(), a2.end());
    auto c2 = build_c2();
    out.insert(out.end(), c2.begin(), c2.end());
    auto g2 = build_g2();
    out.insert(out.end(), g2.begin(), g2.end());

    // every fixture must reproduce its table row's P and Z sets exactly
    for (const auto& f : out) {
        const RootSystem& rs = RootSystem::get(f.system);
        PZSets pz = pz_sets(rs, f.t);
        if (pz.p != f.expected_p || pz.z != f.expected_z)
            throw std::domain_error("fixture validation failed for " + f.label +
                                    ": P/Z sets do not match the table");
        int total = 0;
        for (const auto& m : f.expected_modules) {
            if (!m.calibrated) {
                int s = 0;
                for (const auto& [w, k] : m.support) s += k;
                if (s != m.dim)
                    throw std::domain_error("fixture validation failed for " + f.label +
                                            ": support dims do not sum to the module dim");
            }
            total += m.dim;
        }
        (void)total;
    }
    return out;
}

}  // namespace

const std::vector<CentralCharFixture>& fixture_catalog() {
    static std::map<std::pair<int, int>, std::vector<CentralCharFixture>> cache;
    auto key = std::make_pair(field().n, field().d);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_catalog()).first;
    return it->second;
}

const CentralCharFixture* find_fixture(System sys, const std::string& char_label) {
    std::string want = system_name(sys) + "." + char_label;
    for (const auto& f : fixture_catalog())
        if (f.label == want) return &f;
    return nullptr;
}

}  // namespace rank2
