#include "rank2/calibration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rank2 {

CalibrationGraph build_graph(const RootSystem& rs, const TorusWeight& t) {
    CalibrationGraph g;
    g.system = rs.label();
    g.base = t;
    g.vertices = orbit(rs, t);
    std::map<TorusWeight, int> index;
    for (size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i].weight] = static_cast<int>(i);
    const Monomial q2 = Monomial::q_power(2);
    const Monomial qm2 = Monomial::q_power(-2);
    std::set<std::pair<int, int>> seen;
    for (size_t u = 0; u < g.vertices.size(); ++u) {
        for (int i = 0; i < rs.rank(); ++i) {
            Monomial val = eval_root(rs, g.vertices[u].weight, i);   // alpha_i = positive root i
            if (val == q2 || val == qm2) continue;
            TorusWeight img = weyl_act(rs, rs.simple_reflection(i), g.vertices[u].weight);
            int v = index.at(img);
            if (v == static_cast<int>(u)) continue;   // fixed by s_i, no edge
            int a = std::min<int>(u, v), b = std::max<int>(u, v);
            if (seen.insert({a, b}).second) g.edges.push_back({a, b, i});
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.u, a.v, a.simple) < std::tie(b.u, b.v, b.simple);
    });
    return g;
}

std::vector<std::vector<int>> components(const CalibrationGraph& g) {
    int n = static_cast<int>(g.vertices.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : g.edges) parent[find(e.u)] = find(e.v);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::optional<PlacedShape> tableaux(const RootSystem& rs, const TorusWeight& t,
                                    const std::vector<int>& j) {
    PZSets pz = pz_sets(rs, t);
    for (int r : j)
        if (std::find(pz.p.begin(), pz.p.end(), r) == pz.p.end())
            throw std::invalid_argument("tableaux: J is not a subset of P(t)");
    std::vector<int> js = j;
    std::sort(js.begin(), js.end());
    PlacedShape shape;
    shape.t = t;
    shape.j = js;
    for (int w = 0; w < rs.order(); ++w) {
        std::vector<int> inv = rs.inversion_set(w);
        bool z_clear = true;
        for (int r : pz.z)
            if (std::binary_search(inv.begin(), inv.end(), r)) { z_clear = false; break; }
        if (!z_clear) continue;
        std::vector<int> cap;
        for (int r : pz.p)
            if (std::binary_search(inv.begin(), inv.end(), r)) cap.push_back(r);
        if (cap == js) shape.tableaux.push_back(w);
    }
    if (shape.tableaux.empty()) return std::nullopt;
    return shape;
}

std::vector<PlacedShape> all_placed_shapes(const RootSystem& rs, const TorusWeight& t) {
    PZSets pz = pz_sets(rs, t);
    std::map<std::vector<int>, std::vector<int>> by_j;
    for (int w = 0; w < rs.order(); ++w) {
        std::vector<int> inv = rs.inversion_set(w);
        bool z_clear = true;
        for (int r : pz.z)
            if (std::binary_search(inv.begin(), inv.end(), r)) { z_clear = false; break; }
        if (!z_clear) continue;
        std::vector<int> cap;
        for (int r : pz.p)
            if (std::binary_search(inv.begin(), inv.end(), r)) cap.push_back(r);
        by_j[cap].push_back(w);
    }
    std::vector<PlacedShape> out;
    for (auto& [j, ws] : by_j) {
        PlacedShape s;
        s.t = t;
        s.j = j;
        s.tableaux = ws;
        out.push_back(std::move(s));
    }
    return out;
}

bool is_calibratable(const RootSystem& rs, const TorusWeight& t, int i, int j) {
    if (i == j) throw std::invalid_argument("is_calibratable: equal simple indices");
    if (rs.rank() < 2) return true;
    // (a) no root of the subsystem takes value 1 (for rank 2 the subsystem is all of R)
    bool no_ones = true;
    for (int r = 0; r < rs.num_positive_roots(); ++r)
        if (eval_root(rs, t, r).is_one()) { no_ones = false; break; }
    if (no_ones) return true;
    // (b) only in type C2 or G2
    int m = rs.braid_order(i, j);
    if (m != 4 && m != 6) return false;
    int lng = rs.simple_is_long(i) ? i : j;
    int shrt = 1 - lng;
    if (eval_root(rs, t, lng).is_one() || eval_root(rs, t, shrt).is_one()) return false;
    const Monomial q2 = Monomial::q_power(2);
    for (int u = 0; u < rs.order(); ++u) {
        TorusWeight ut = weyl_act(rs, u, t);
        if (eval_root(rs, ut, lng) == q2 && eval_root(rs, ut, shrt).is_one()) return true;
    }
    return false;
}

bool is_placed_skew(const RootSystem& rs, const PlacedShape& shape) {
    for (int w : shape.tableaux) {
        TorusWeight wt = weyl_act(rs, w, shape.t);
        if (rs.rank() < 2) {
            // rank-one analogue of condition (a): the seminormal denominators
            // must not vanish on any tableau weight
            if (eval_root(rs, wt, 0).is_one()) return false;
            continue;
        }
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = i + 1; j < rs.rank(); ++j)
                if (!is_calibratable(rs, wt, i, j)) return false;
    }
    return true;
}

std::string to_dot(const RootSystem& rs, const CalibrationGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& v = g.vertices[i];
        os << "  \"" << rs.word_str(v.min_rep) << "\" [label=\"" << rs.word_str(v.min_rep)
           << " : " << v.weight.str() << "\"];\n";
    }
    for (const auto& e : g.edges) {
        os << "  \"" << rs.word_str(g.vertices[e.u].min_rep) << "\" -- \""
           << rs.word_str(g.vertices[e.v].min_rep) << "\" [label=\"" << (e.simple + 1) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace rank2
