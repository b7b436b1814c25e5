#include "rank2/classify.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include <json.hpp>

namespace rank2 {

namespace {

using Json = nlohmann::ordered_json;

std::string j_token(const RootSystem& rs, const std::vector<int>& j) {
    std::ostringstream os;
    os << "{";
    for (size_t k = 0; k < j.size(); ++k) os << (k ? "," : "") << rs.root_token(j[k]);
    os << "}";
    return os.str();
}

std::string support_str(const std::vector<std::pair<std::string, int>>& supp) {
    std::ostringstream os;
    for (size_t k = 0; k < supp.size(); ++k) {
        if (k) os << "+";
        os << supp[k].first << ":" << supp[k].second;
    }
    return os.str();
}

}  // namespace

FixtureReport reconstruct_inventory(const CentralCharFixture& fixture, const ReportOptions& opt) {
    (void)opt;
    const RootSystem& rs = RootSystem::get(fixture.system);
    FixtureReport rep;
    rep.label = fixture.label;
    rep.system = fixture.system;
    rep.t = fixture.t;

    PZSets pz = pz_sets(rs, fixture.t);
    rep.p = pz.p;
    rep.z = pz.z;
    if (pz.p != fixture.expected_p || pz.z != fixture.expected_z)
        rep.diffs.push_back("P/Z sets disagree with the table");

    std::vector<OrbitEntry> orb = orbit(rs, fixture.t);
    rep.orbit_size = static_cast<int>(orb.size());

    CalibrationGraph graph = build_graph(rs, fixture.t);
    for (const auto& comp : components(graph)) {
        std::vector<std::string> words;
        for (int v : comp) words.push_back(rs.word_str(graph.vertices[v].min_rep));
        rep.components.push_back(std::move(words));
    }

    // the skew shapes, kept for identifying calibration sets of factors
    std::vector<PlacedShape> skew_shapes;
    for (const auto& shape : all_placed_shapes(rs, fixture.t))
        if (is_placed_skew(rs, shape)) skew_shapes.push_back(shape);

    auto shape_token_for = [&](const ModuleVerdicts& v) -> std::string {
        if (!v.calibrated) return "nc";
        for (const auto& shape : skew_shapes) {
            if (static_cast<int>(shape.tableaux.size()) != v.dim) continue;
            std::vector<std::pair<std::string, int>> words;
            for (int w : shape.tableaux) words.push_back({rs.word_str(w), 1});
            std::sort(words.begin(), words.end());
            auto sorted = v.support;
            std::sort(sorted.begin(), sorted.end());
            if (words == sorted) return j_token(rs, shape.j);
        }
        return "nc";
    };

    auto add_module = [&](const ModuleRep& m) {
        ModuleVerdicts v;
        v.dim = m.dim;
        std::vector<WeightSpace> spaces = weight_decomposition(rs, m, orb);
        for (const auto& ws : spaces)
            v.support.push_back({rs.word_str(orb[ws.orbit_index].min_rep), ws.dim_gen});
        for (const auto& existing : rep.modules)
            if (existing.dim == v.dim && existing.support == v.support) return;   // already known
        v.relations_ok = check_relations(rs, m).ok();
        v.calibrated = true;
        v.tempered = true;
        v.square_integrable = true;
        for (const auto& ws : spaces) {
            if (ws.dim_gen != ws.dim_eigen) v.calibrated = false;
            for (const Rational& e : nu_exponents(ws.weight)) {
                if (e > 0) v.tempered = false;
                if (e >= 0) v.square_integrable = false;
            }
        }
        if (!v.tempered) v.square_integrable = false;
        v.irreducible = is_irreducible(rs, m, orb, &spaces).irreducible;
        v.origin = m.origin;
        v.rep = m;
        v.j = shape_token_for(v);
        rep.modules.push_back(std::move(v));
    };

    // (i) seminormal construction on every placed skew shape
    for (const auto& shape : skew_shapes) add_module(build_calibrated(rs, shape));

    // (ii) the induced modules used by the table analyses
    for (const auto& spec : fixture.induced) {
        auto w = rs.parse_word(spec.weight_word);
        if (!w) throw std::logic_error("bad induced-spec word for " + fixture.label);
        TorusWeight tw = weyl_act(rs, *w, fixture.t);
        ModuleRep ind = build_induced(rs, spec.I, tw, spec.signs);
        if (!check_relations(rs, ind).ok())
            rep.diffs.push_back("induced module fails the defining relations");
        for (const auto& factor : composition_factors(rs, ind, orb)) add_module(factor.rep);
    }

    // (iii) composition factors of the principal series
    ModuleRep principal = build_principal(rs, fixture.t);
    if (!check_relations(rs, principal).ok())
        rep.diffs.push_back("principal series module fails the defining relations");
    std::vector<FactorDescriptor> factors = composition_factors(rs, principal, orb);
    for (const auto& f : factors) add_module(f.rep);
    for (const auto& f : factors) {
        bool merged = false;
        for (auto& entry : rep.principal_factors) {
            if (entry.dim == f.dim && entry.support == f.support) {
                ++entry.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) rep.principal_factors.push_back({f.dim, f.support, 1});
    }

    // cross checks: the dimension sum rule and the irreducibility criterion
    int sum = 0;
    for (const auto& e : rep.principal_factors) sum += e.dim * e.multiplicity;
    if (sum != rs.order())
        rep.diffs.push_back("composition factors of the principal series do not sum to |W|");
    bool principal_irred = factors.size() == 1;
    if (principal_irred != pz.p.empty())
        rep.diffs.push_back("irreducibility of the principal series disagrees with P(t) = {}");

    // reconcile the reconstructed inventory against the table rows
    std::vector<bool> used(rep.modules.size(), false);
    for (const auto& exp : fixture.expected_modules) {
        int found = -1;
        for (size_t i = 0; i < rep.modules.size(); ++i) {
            if (used[i]) continue;
            const auto& got = rep.modules[i];
            if (got.dim != exp.dim) continue;
            if (exp.calibrated) {
                if (got.j == j_token(rs, exp.j)) { found = static_cast<int>(i); break; }
            } else {
                if (!got.calibrated && got.support == exp.support) { found = static_cast<int>(i); break; }
            }
        }
        std::ostringstream who;
        who << "expected module dim=" << exp.dim << " "
            << (exp.calibrated ? "J=" + j_token(rs, exp.j) : "support=" + support_str(exp.support));
        if (found < 0) {
            rep.diffs.push_back(who.str() + " not reconstructed");
            continue;
        }
        used[found] = true;
        const auto& got = rep.modules[found];
        if (!got.relations_ok) rep.diffs.push_back(who.str() + ": relations fail");
        if (!got.irreducible) rep.diffs.push_back(who.str() + ": not irreducible");
        if (got.calibrated != exp.calibrated) rep.diffs.push_back(who.str() + ": calibrated flag differs");
        if (got.tempered != exp.tempered) rep.diffs.push_back(who.str() + ": tempered flag differs");
        if (got.square_integrable != exp.square_integrable)
            rep.diffs.push_back(who.str() + ": square-integrable flag differs");
        if (!exp.calibrated) {
            // no skew shape may reproduce the support of a non-calibrated row
            for (const auto& shape : skew_shapes) {
                if (static_cast<int>(shape.tableaux.size()) != exp.dim) continue;
                std::vector<std::pair<std::string, int>> words;
                for (int w : shape.tableaux) words.push_back({rs.word_str(w), 1});
                if (words == exp.support)
                    rep.diffs.push_back(who.str() + ": a placed skew shape matches an nc row");
            }
        }
    }
    for (size_t i = 0; i < rep.modules.size(); ++i)
        if (!used[i])
            rep.diffs.push_back("reconstructed module dim=" + std::to_string(rep.modules[i].dim) +
                                " support=" + support_str(rep.modules[i].support) +
                                " has no table row");

    {
        std::ostringstream l, ix;
        for (size_t i = 0; i < fixture.expected_modules.size(); ++i) {
            l << (i ? "; " : "") << fixture.expected_modules[i].langlands;
            ix << (i ? "; " : "") << fixture.expected_modules[i].indexing_triple;
        }
        rep.langlands_meta = l.str();
        rep.indexing_meta = ix.str();
    }
    return rep;
}

namespace {

std::vector<const CentralCharFixture*> select_fixtures(const ReportOptions& opt) {
    std::vector<const CentralCharFixture*> out;
    for (const auto& f : fixture_catalog()) {
        if (opt.system_filter && f.system != *opt.system_filter) continue;
        if (opt.label_filter && f.label != *opt.label_filter) continue;
        out.push_back(&f);
    }
    return out;
}

}  // namespace

ClassReport full_report(const ReportOptions& opt) {
    std::vector<const CentralCharFixture*> selected = select_fixtures(opt);
    ClassReport report;
    report.fixtures.resize(selected.size());
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < selected.size(); ++i)
            report.fixtures[i] = reconstruct_inventory(*selected[i], opt);
    } else {
        std::vector<std::future<FixtureReport>> futures(selected.size());
        size_t next = 0;
        while (next < selected.size()) {
            size_t batch_end = std::min(selected.size(), next + static_cast<size_t>(jobs));
            for (size_t i = next; i < batch_end; ++i)
                futures[i] = std::async(std::launch::async,
                                        [&, i] { return reconstruct_inventory(*selected[i], opt); });
            for (size_t i = next; i < batch_end; ++i) report.fixtures[i] = futures[i].get();
            next = batch_end;
        }
    }
    for (const auto& f : report.fixtures) report.total_diffs += static_cast<int>(f.diffs.size());
    return report;
}

std::string report_to_json(const ClassReport& report, bool dump_matrices) {
    Json root;
    root["fixtures"] = Json::array();
    for (const auto& f : report.fixtures) {
        Json jf;
        jf["label"] = f.label;
        jf["system"] = system_name(f.system);
        Json omega = Json::array();
        for (const auto& m : f.t.omega_values) omega.push_back({m.zeta_pow, m.v_pow});
        jf["omega_values"] = omega;
        const RootSystem& rs = RootSystem::get(f.system);
        Json p = Json::array(), z = Json::array();
        for (int r : f.p) p.push_back(rs.root_token(r));
        for (int r : f.z) z.push_back(rs.root_token(r));
        jf["P"] = p;
        jf["Z"] = z;
        jf["orbit_size"] = f.orbit_size;
        jf["components"] = f.components;
        Json mods = Json::array();
        for (const auto& m : f.modules) {
            Json jm;
            jm["dim"] = m.dim;
            Json supp = Json::array();
            for (const auto& [w, d] : m.support)
                for (int k = 0; k < d; ++k) supp.push_back(w);
            jm["support"] = supp;
            jm["calibrated"] = m.calibrated;
            jm["J"] = m.j;
            jm["tempered"] = m.tempered;
            jm["square_integrable"] = m.square_integrable;
            jm["irreducible"] = m.irreducible;
            jm["relations_ok"] = m.relations_ok;
            if (dump_matrices) {
                Json t_mats = Json::array(), x_mats = Json::array();
                auto dump = [](const Matrix& mat) {
                    Json rows = Json::array();
                    for (int i = 0; i < mat.rows(); ++i) {
                        Json row = Json::array();
                        for (int j = 0; j < mat.cols(); ++j) row.push_back(mat.at(i, j).str());
                        rows.push_back(row);
                    }
                    return rows;
                };
                for (const auto& mat : m.rep.t_mats) t_mats.push_back(dump(mat));
                for (const auto& mat : m.rep.x_mats) x_mats.push_back(dump(mat));
                jm["T_matrices"] = t_mats;
                jm["X_matrices"] = x_mats;
            }
            mods.push_back(jm);
        }
        jf["modules"] = mods;
        Json comp = Json::array();
        for (const auto& e : f.principal_factors) {
            Json je;
            je["dim"] = e.dim;
            Json supp = Json::array();
            for (const auto& [w, d] : e.support)
                for (int k = 0; k < d; ++k) supp.push_back(w);
            je["support"] = supp;
            je["multiplicity"] = e.multiplicity;
            comp.push_back(je);
        }
        jf["composition_of_principal"] = comp;
        jf["metadata"] = {{"langlands", f.langlands_meta}, {"indexing_triple", f.indexing_meta}};
        jf["diffs"] = f.diffs;
        root["fixtures"].push_back(jf);
    }
    return root.dump(2) + "\n";
}

std::string report_to_csv(const ClassReport& report) {
    std::ostringstream os;
    os << "label,system,dim,calibrated,J,support,tempered,square_integrable,irreducible,relations_ok\n";
    for (const auto& f : report.fixtures) {
        for (const auto& m : f.modules) {
            os << f.label << "," << system_name(f.system) << "," << m.dim << ","
               << (m.calibrated ? "yes" : "no") << "," << m.j << "," << support_str(m.support) << ","
               << (m.tempered ? "yes" : "no") << "," << (m.square_integrable ? "yes" : "no") << ","
               << (m.irreducible ? "yes" : "no") << "," << (m.relations_ok ? "yes" : "no") << "\n";
        }
    }
    return os.str();
}

std::string report_to_text(const ClassReport& report) {
    std::ostringstream os;
    for (const auto& f : report.fixtures) {
        const RootSystem& rs = RootSystem::get(f.system);
        os << "== " << f.label << "  t = " << f.t.str() << "\n";
        os << "   P = {";
        for (size_t i = 0; i < f.p.size(); ++i) os << (i ? "," : "") << rs.root_token(f.p[i]);
        os << "}  Z = {";
        for (size_t i = 0; i < f.z.size(); ++i) os << (i ? "," : "") << rs.root_token(f.z[i]);
        os << "}  orbit " << f.orbit_size << "  components";
        for (const auto& c : f.components) os << " " << c.size();
        os << "\n";
        for (const auto& m : f.modules) {
            os << "   dim " << m.dim << "  J " << m.j << "  supp " << support_str(m.support)
               << (m.tempered ? "  tempered" : "") << (m.square_integrable ? " square-integrable" : "")
               << (m.irreducible ? "" : "  REDUCIBLE") << (m.relations_ok ? "" : "  RELATIONS-FAIL")
               << "\n";
        }
        os << "   M(t) factors:";
        for (const auto& e : f.principal_factors)
            os << " " << e.dim << "(x" << e.multiplicity << ")";
        os << "\n";
        for (const auto& d : f.diffs) os << "   DIFF: " << d << "\n";
    }
    os << "total diffs: " << report.total_diffs << "\n";
    return os.str();
}

std::vector<std::pair<std::string, std::string>> export_graphs(const ReportOptions& opt) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const CentralCharFixture* f : select_fixtures(opt)) {
        const RootSystem& rs = RootSystem::get(f->system);
        CalibrationGraph g = build_graph(rs, f->t);
        out.push_back({f->label + ".dot", to_dot(rs, g, f->label)});
    }
    return out;
}

}  // namespace rank2
