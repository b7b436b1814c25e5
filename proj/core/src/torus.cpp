#include "rank2/torus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rank2 {

std::string TorusWeight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < omega_values.size(); ++i) {
        if (i) os << ", ";
        os << omega_values[i].str();
    }
    os << ")";
    return os.str();
}

Monomial eval_weight(const TorusWeight& t, const IVec& lambda) {
    Monomial out;
    for (size_t i = 0; i < lambda.size(); ++i)
        out = out * t.omega_values[i].power(lambda[i]);
    return out;
}

Monomial eval_root(const RootSystem& rs, const TorusWeight& t, int root_idx) {
    return eval_weight(t, rs.root_in_omega(root_idx));
}

TorusWeight weyl_act(const RootSystem& rs, int w, const TorusWeight& t) {
    int winv = rs.inverse(w);
    TorusWeight out;
    out.omega_values.resize(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
        IVec omega_i(rs.rank(), 0);
        omega_i[i] = 1;
        out.omega_values[i] = eval_weight(t, rs.act_omega(winv, omega_i));
    }
    return out;
}

PZSets pz_sets(const RootSystem& rs, const TorusWeight& t) {
    PZSets out;
    const Monomial q2 = Monomial::q_power(2);
    const Monomial qm2 = Monomial::q_power(-2);
    for (int r = 0; r < rs.num_positive_roots(); ++r) {
        Monomial val = eval_root(rs, t, r);
        if (val == q2 || val == qm2) out.p.push_back(r);
        else if (val.is_one()) out.z.push_back(r);
    }
    return out;
}

std::vector<OrbitEntry> orbit(const RootSystem& rs, const TorusWeight& t) {
    std::map<TorusWeight, std::vector<int>> hits;
    for (int w = 0; w < rs.order(); ++w) hits[weyl_act(rs, w, t)].push_back(w);
    std::vector<OrbitEntry> out;
    for (auto& [weight, reps] : hits) {
        OrbitEntry e;
        e.weight = weight;
        e.all_reps = reps;
        e.min_rep = *std::min_element(reps.begin(), reps.end());   // enumeration is (length, lex) sorted
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(),
              [](const OrbitEntry& a, const OrbitEntry& b) { return a.min_rep < b.min_rep; });
    return out;
}

int stabilizer_order(const RootSystem& rs, const TorusWeight& t) {
    int count = 0;
    for (int w = 0; w < rs.order(); ++w)
        if (weyl_act(rs, w, t) == t) ++count;
    return count;
}

std::vector<Rational> nu_exponents(const TorusWeight& t) {
    std::vector<Rational> out;
    for (const auto& m : t.omega_values)
        out.push_back(Rational(m.v_pow) / Rational(2 * field().d));
    return out;
}

}  // namespace rank2
