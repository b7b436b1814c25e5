#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank2/module.hpp"

namespace rank2 {

/// One row group of a classification table: the pinned central character,
/// its expected P/Z sets and the expected inventory of irreducibles.
struct ExpectedModule {
    int dim = 0;
    bool calibrated = false;
    std::vector<int> j;                                    // calibration set when calibrated
    std::vector<std::pair<std::string, int>> support;      // (orbit word, dim_gen); empty for calibrated rows
    bool tempered = false;
    bool square_integrable = false;
    std::string langlands;
    std::string indexing_triple;
};

struct InducedSpec {
    std::vector<int> I;          // simple indices of the parabolic
    std::string weight_word;     // the inducing character sits at (this element) * t
    std::vector<TSign> signs;
};

struct CentralCharFixture {
    std::string label;           // "C2.t_b"
    System system;
    TorusWeight t;
    std::vector<int> expected_p, expected_z;
    std::vector<ExpectedModule> expected_modules;
    std::vector<InducedSpec> induced;
    std::string comment;
};

/// Every central character of the classification tables, values pinned on
/// the omega basis; generic rows are chosen by the exponent oracle.
/// Throws std::domain_error if any fixture fails its P/Z validation.
const std::vector<CentralCharFixture>& fixture_catalog();

/// Deterministic generic-weight chooser: smallest omega exponent vector
/// (by |.|_1 then lex) whose root values match the demanded monomials and
/// avoid {1, q^{+-1}, q^{+-2}} elsewhere.
TorusWeight generic_weight_oracle(const RootSystem& rs, const std::map<int, Monomial>& demands);

/// Field parameters required by the fixtures of the given systems.
void validate_field_for(const std::vector<System>& systems);

struct ModuleVerdicts {
    int dim = 0;
    std::vector<std::pair<std::string, int>> support;
    bool calibrated = false;
    std::string j = "nc";        // token list or "nc"
    bool tempered = false;
    bool square_integrable = false;
    bool irreducible = false;
    bool relations_ok = false;
    std::string origin;
    ModuleRep rep;
};

struct CompositionEntry {
    int dim = 0;
    std::vector<std::pair<std::string, int>> support;
    int multiplicity = 0;
};

struct FixtureReport {
    std::string label;
    System system;
    TorusWeight t;
    std::vector<int> p, z;
    int orbit_size = 0;
    std::vector<std::vector<std::string>> components;   // words per component
    std::vector<ModuleVerdicts> modules;                // reconstructed inventory
    std::vector<CompositionEntry> principal_factors;
    std::vector<std::string> diffs;
    std::string langlands_meta;
    std::string indexing_meta;
};

struct ReportOptions {
    std::optional<System> system_filter;
    std::optional<std::string> label_filter;
    bool dump_matrices = false;
    int jobs = 1;
};

FixtureReport reconstruct_inventory(const CentralCharFixture& fixture, const ReportOptions& opt);

struct ClassReport {
    std::vector<FixtureReport> fixtures;
    int total_diffs = 0;
};

ClassReport full_report(const ReportOptions& opt);

std::string report_to_json(const ClassReport& report, bool dump_matrices = false);
std::string report_to_csv(const ClassReport& report);
std::string report_to_text(const ClassReport& report);

/// One DOT document per selected fixture, keyed by "<label>.dot".
std::vector<std::pair<std::string, std::string>> export_graphs(const ReportOptions& opt);

const CentralCharFixture* find_fixture(System sys, const std::string& char_label);

}  // namespace rank2
