// Command line driver: classification runs, single-module construction,
// calibration graph export, principal-series composition factors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "rank2/classify.hpp"

namespace {

using namespace rank2;

// Write-to-temp then rename, so failed runs never leave partial files.
void write_atomically(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_atomically(out_path, content);
}

std::vector<System> systems_of_selection(const ReportOptions& opt) {
    std::vector<System> out;
    if (opt.system_filter) {
        out.push_back(*opt.system_filter);
        if (*opt.system_filter == System::A1xA1) out.push_back(System::A1);
    } else {
        out = {System::A1, System::A1xA1, System::A2, System::C2, System::G2};
    }
    return out;
}

int run_verify_all(const ReportOptions& opt, const std::string& format, const std::string& out_path) {
    validate_field_for(systems_of_selection(opt));
    ClassReport report = full_report(opt);
    std::string content;
    if (format == "json") content = report_to_json(report, opt.dump_matrices);
    else if (format == "csv") content = report_to_csv(report);
    else content = report_to_text(report);
    emit(content, out_path);
    return report.total_diffs == 0 ? 0 : 1;
}

ModuleRep construct(const RootSystem& rs, const CentralCharFixture& fixture,
                    const std::string& construction, const std::string& j_tokens,
                    const std::string& i_tokens, const std::string& sign_tokens) {
    if (construction == "principal") return build_principal(rs, fixture.t);
    if (construction == "calibrated") {
        std::vector<int> j;
        std::stringstream ss(j_tokens);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            auto r = rs.parse_root_token(tok);
            if (!r) throw std::invalid_argument("unknown root token: " + tok);
            j.push_back(*r);
        }
        auto shape = tableaux(rs, fixture.t, j);
        if (!shape) throw std::invalid_argument("empty tableau set: (t, J) is not a placed shape");
        return build_calibrated(rs, *shape);
    }
    if (construction == "induced") {
        std::vector<int> I;
        std::vector<TSign> signs;
        {
            std::stringstream ss(i_tokens);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                int idx = std::stoi(tok) - 1;
                if (idx < 0 || idx >= rs.rank()) throw std::invalid_argument("bad simple index: " + tok);
                I.push_back(idx);
            }
        }
        {
            std::stringstream ss(sign_tokens);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                if (tok == "plus") signs.push_back(TSign::PlusQ);
                else if (tok == "minus") signs.push_back(TSign::MinusQInv);
                else throw std::invalid_argument("sign must be plus or minus: " + tok);
            }
        }
        if (signs.empty()) signs.assign(I.size(), TSign::PlusQ);
        return build_induced(rs, I, fixture.t, signs);
    }
    throw std::invalid_argument("construction must be calibrated, principal or induced");
}

int run_module(System sys, const std::string& char_label, const std::string& construction,
               const std::string& j_tokens, const std::string& i_tokens,
               const std::string& sign_tokens, bool dump) {
    validate_field_for({sys, System::A1});
    const CentralCharFixture* fixture = find_fixture(sys, char_label);
    if (!fixture) throw std::invalid_argument("unknown central character: " + char_label);
    const RootSystem& rs = RootSystem::get(sys);
    ModuleRep m = construct(rs, *fixture, construction, j_tokens, i_tokens, sign_tokens);
    std::vector<OrbitEntry> orb = orbit(rs, fixture->t);

    RelationReport rel = check_relations(rs, m);
    auto supp = support_signature(rs, m, orb);
    IrredVerdict irr = is_irreducible(rs, m, orb);
    Temperedness temp = temperedness(rs, m, orb);

    std::cout << fixture->label << " " << m.origin << "\n";
    std::cout << "dim " << m.dim << "\n";
    std::cout << "support";
    for (const auto& [w, d] : supp) std::cout << " " << w << ":" << d;
    std::cout << "\n";
    std::cout << "relations " << (rel.ok() ? "ok" : "FAIL") << "\n";
    for (const auto& f : rel.failures) std::cout << "  " << f << "\n";
    std::cout << "irreducible " << (irr.irreducible ? "yes" : "no") << "\n";
    std::cout << "calibrated " << (is_calibrated_rep(rs, m, orb) ? "yes" : "no") << "\n";
    std::cout << "tempered " << (temp.tempered ? "yes" : "no") << "\n";
    std::cout << "square_integrable " << (temp.square_integrable ? "yes" : "no") << "\n";
    if (dump) {
        for (int i = 0; i < rs.rank(); ++i)
            std::cout << "T_" << (i + 1) << " =\n" << m.t_mats[i].str();
        for (int i = 0; i < rs.rank(); ++i)
            std::cout << "X_omega_" << (i + 1) << " =\n" << m.x_mats[i].str();
    }
    return rel.ok() ? 0 : 1;
}

int run_graph(System sys, const std::string& char_label, const std::string& out_path) {
    validate_field_for({sys, System::A1});
    const CentralCharFixture* fixture = find_fixture(sys, char_label);
    if (!fixture) throw std::invalid_argument("unknown central character: " + char_label);
    const RootSystem& rs = RootSystem::get(sys);
    CalibrationGraph g = build_graph(rs, fixture->t);
    emit(to_dot(rs, g, fixture->label), out_path);
    return 0;
}

int run_factors(System sys, const std::string& char_label) {
    validate_field_for({sys, System::A1});
    const CentralCharFixture* fixture = find_fixture(sys, char_label);
    if (!fixture) throw std::invalid_argument("unknown central character: " + char_label);
    const RootSystem& rs = RootSystem::get(sys);
    std::vector<OrbitEntry> orb = orbit(rs, fixture->t);
    ModuleRep principal = build_principal(rs, fixture->t);
    std::cout << fixture->label << " principal series, dim " << principal.dim << "\n";
    for (const auto& f : composition_factors(rs, principal, orb)) {
        std::cout << "factor dim " << f.dim << " support";
        for (const auto& [w, d] : f.support) std::cout << " " << w << ":" << d;
        std::cout << "\n";
    }
    return 0;
}

int run_catalog(const ReportOptions& opt) {
    validate_field_for(systems_of_selection(opt));
    for (const auto& f : fixture_catalog()) {
        if (opt.system_filter && f.system != *opt.system_filter) continue;
        const RootSystem& rs = RootSystem::get(f.system);
        std::cout << f.label << "  t = " << f.t.str() << "  P = {";
        for (size_t i = 0; i < f.expected_p.size(); ++i)
            std::cout << (i ? "," : "") << rs.root_token(f.expected_p[i]);
        std::cout << "}  Z = {";
        for (size_t i = 0; i < f.expected_z.size(); ++i)
            std::cout << (i ? "," : "") << rs.root_token(f.expected_z[i]);
        std::cout << "}  dims";
        for (const auto& m : f.expected_modules) std::cout << " " << m.dim;
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of irreducible modules of rank-one and rank-two affine Hecke algebras"};
    app.require_subcommand(1);

    int n = 12, d = 6;
    app.add_option("--n", n, "cyclotomic order N of the coefficient field")->capture_default_str();
    app.add_option("--d", d, "root denominator D with q = v^D")->capture_default_str();

    std::string format = "text", out_path, system_tok, j_tokens, i_tokens, sign_tokens;
    bool dump = false;
    int jobs = 1;
    if (const char* env = std::getenv("RANK2_JOBS")) jobs = std::max(1, std::atoi(env));

    auto* verify = app.add_subcommand("verify-all", "reconstruct and check every fixture");
    verify->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("-o,--output", out_path, "output file (atomic write)");
    verify->add_option("--system", system_tok, "restrict to one root system");
    verify->add_flag("--dump-matrices", dump, "include matrices in JSON output");
    verify->add_option("--jobs", jobs, "parallel fixture evaluation");

    auto* module_cmd = app.add_subcommand("module", "construct and verify a single module");
    std::string char_label, construction;
    module_cmd->add_option("system", system_tok, "A1|A1xA1|A2|C2|G2")->required();
    module_cmd->add_option("char", char_label, "central character label, e.g. t_b")->required();
    module_cmd->add_option("construction", construction, "calibrated|principal|induced")->required();
    module_cmd->add_option("--j", j_tokens, "calibration set, e.g. a1,a1+a2");
    module_cmd->add_option("--i", i_tokens, "parabolic indices for induced, e.g. 2");
    module_cmd->add_option("--sign", sign_tokens, "plus|minus per index");
    module_cmd->add_flag("--dump-matrices", dump, "print the matrices");

    auto* graph_cmd = app.add_subcommand("graph", "emit the calibration graph in DOT form");
    graph_cmd->add_option("system", system_tok, "A1|A1xA1|A2|C2|G2")->required();
    graph_cmd->add_option("char", char_label, "central character label")->required();
    graph_cmd->add_option("-o,--output", out_path, "output file (atomic write)");

    auto* factors_cmd = app.add_subcommand("factors", "composition factors of the principal series");
    factors_cmd->add_option("system", system_tok, "A1|A1xA1|A2|C2|G2")->required();
    factors_cmd->add_option("char", char_label, "central character label")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "list the fixture catalog");
    catalog_cmd->add_option("--system", system_tok, "restrict to one root system");

    CLI11_PARSE(app, argc, argv);

    try {
        rank2::set_field(n, d);
        ReportOptions opt;
        opt.dump_matrices = dump;
        opt.jobs = jobs;
        if (!system_tok.empty()) {
            auto sys = parse_system(system_tok);
            if (!sys) throw std::invalid_argument("unknown system: " + system_tok);
            opt.system_filter = sys;
        }
        if (verify->parsed()) return run_verify_all(opt, format, out_path);
        if (module_cmd->parsed()) {
            if (!opt.system_filter) throw std::invalid_argument("system required");
            return run_module(*opt.system_filter, char_label, construction, j_tokens, i_tokens,
                              sign_tokens, dump);
        }
        if (graph_cmd->parsed()) {
            if (!opt.system_filter) throw std::invalid_argument("system required");
            return run_graph(*opt.system_filter, char_label, out_path);
        }
        if (factors_cmd->parsed()) {
            if (!opt.system_filter) throw std::invalid_argument("system required");
            return run_factors(*opt.system_filter, char_label);
        }
        if (catalog_cmd->parsed()) return run_catalog(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
