#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rank2/calibration.hpp"
#include "rank2/matrix.hpp"
#include "rank2/torus.hpp"

namespace rank2 {

/// A finite dimensional representation: one matrix per generator T_i and per
/// fundamental-weight generator X^{omega_i}, with labelled basis.
struct ModuleRep {
    System system;
    int dim = 0;
    std::vector<Matrix> t_mats;
    std::vector<Matrix> x_mats;
    std::vector<std::string> basis_labels;
    std::string origin;
};

enum class TSign { PlusQ, MinusQInv };
CycScalar tsign_value(TSign s);   // q or -q^{-1}

/// Seminormal construction on the standard tableaux of a placed skew shape.
/// Throws std::invalid_argument if the shape is not skew, std::domain_error
/// if a diagonal denominator vanishes.
ModuleRep build_calibrated(const RootSystem& rs, const PlacedShape& shape);

/// Principal series: basis T_w tensor v_t over all of W.
ModuleRep build_principal(const RootSystem& rs, const TorusWeight& t);

/// Induction from the one-dimensional character of the parabolic subalgebra
/// attached to I, with T_i acting by q or -q^{-1} as specified.
/// Precondition per sign: t(X^{alpha_i}) = q^2 (PlusQ) resp. q^{-2} (MinusQInv).
ModuleRep build_induced(const RootSystem& rs, const std::vector<int>& I,
                        const TorusWeight& t, const std::vector<TSign>& signs);

/// Outer tensor product of two A1 modules as an A1xA1 module.
ModuleRep tensor_module(const ModuleRep& m1, const ModuleRep& m2);

/// X^lambda as a matrix on the module (lambda in omega coordinates).
Matrix x_lambda(const ModuleRep& m, const IVec& lambda);

struct RelationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Exact verification of the defining relations: quadratic, braid,
/// X-commutativity, the commutation rule on a generator set of lattice
/// vectors, and the central-scalar check for the W-symmetrized X sum.
RelationReport check_relations(const RootSystem& rs, const ModuleRep& m);

struct WeightSpace {
    TorusWeight weight;
    int orbit_index = -1;    // position in the ambient orbit table
    Matrix gen_basis;        // columns spanning the generalized weight space
    Matrix eig_basis;        // columns spanning the plain weight space
    int dim_gen = 0;
    int dim_eigen = 0;
};

/// Jordan decomposition of the commuting X action against the given orbit.
/// Throws std::domain_error if any residual space remains.
std::vector<WeightSpace> weight_decomposition(const RootSystem& rs, const ModuleRep& m,
                                              const std::vector<OrbitEntry>& orb);

/// Matrix of tau_i : M_t^gen -> M_{s_i t}^gen in the decomposition bases.
/// Throws std::domain_error when t(X^{alpha_i}) = 1.
Matrix tau_matrix(const RootSystem& rs, const ModuleRep& m,
                  const std::vector<WeightSpace>& spaces, int from, int i);

/// Smallest subspace containing the seed columns and stable under all
/// generator matrices; returned as a column basis in reduced form.
Matrix submodule_closure(const ModuleRep& m, const Matrix& seeds);

ModuleRep restrict_module(const ModuleRep& m, const Matrix& basis, const std::string& origin);
ModuleRep quotient_module(const ModuleRep& m, const Matrix& sub_basis, const std::string& origin);

struct IrredVerdict {
    bool irreducible = false;
    Matrix certificate;      // proper nonzero submodule basis when reducible
};

/// Joint-eigenvector generation test; eigenspaces of dimension up to two are
/// handled exactly via the pencil of eigenvectors.  Throws
/// std::runtime_error on an eigenspace of dimension three or more.
/// A precomputed decomposition may be supplied to avoid recomputation.
IrredVerdict is_irreducible(const RootSystem& rs, const ModuleRep& m,
                            const std::vector<OrbitEntry>& orb,
                            const std::vector<WeightSpace>* spaces = nullptr);

struct FactorDescriptor {
    int dim = 0;
    std::vector<std::pair<std::string, int>> support;   // (orbit word label, generalized dim), sorted
    ModuleRep rep;
};

/// Composition series by repeatedly splitting off a minimal submodule.
std::vector<FactorDescriptor> composition_factors(const RootSystem& rs, const ModuleRep& m,
                                                  const std::vector<OrbitEntry>& orb);

struct Temperedness {
    bool tempered = false;
    bool square_integrable = false;
};
Temperedness temperedness(const RootSystem& rs, const ModuleRep& m,
                          const std::vector<OrbitEntry>& orb);

/// Support signature of a module against an orbit: (word, dim_gen) pairs.
std::vector<std::pair<std::string, int>> support_signature(const RootSystem& rs, const ModuleRep& m,
                                                           const std::vector<OrbitEntry>& orb);

/// True when every generalized weight space equals its plain weight space.
bool is_calibrated_rep(const RootSystem& rs, const ModuleRep& m,
                       const std::vector<OrbitEntry>& orb);

}  // namespace rank2
