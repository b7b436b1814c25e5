#pragma once

#include <string>
#include <vector>

#include "rank2/root_system.hpp"
#include "rank2/scalar.hpp"

namespace rank2 {

/// A monomial-valued character of the weight lattice, pinned by its values
/// on the fundamental weights.
struct TorusWeight {
    std::vector<Monomial> omega_values;

    bool operator==(const TorusWeight& o) const { return omega_values == o.omega_values; }
    bool operator!=(const TorusWeight& o) const { return !(*this == o); }
    bool operator<(const TorusWeight& o) const { return omega_values < o.omega_values; }
    std::string str() const;
};

Monomial eval_weight(const TorusWeight& t, const IVec& lambda);
Monomial eval_root(const RootSystem& rs, const TorusWeight& t, int root_idx);

/// (w t)(X^lambda) = t(X^{w^{-1} lambda}).
TorusWeight weyl_act(const RootSystem& rs, int w, const TorusWeight& t);

struct PZSets {
    std::vector<int> p;   // positive roots with value q^{+-2}
    std::vector<int> z;   // positive roots with value 1
};
PZSets pz_sets(const RootSystem& rs, const TorusWeight& t);

struct OrbitEntry {
    TorusWeight weight;
    int min_rep;                 // least (length, word) Weyl element mapping the base point here
    std::vector<int> all_reps;   // every such element
};

/// The orbit W t with duplicate weights merged; entries ordered by min_rep.
std::vector<OrbitEntry> orbit(const RootSystem& rs, const TorusWeight& t);

int stabilizer_order(const RootSystem& rs, const TorusWeight& t);

/// <omega_i, nu(t)> for each i, read off the radial part: v_pow / (2D).
std::vector<Rational> nu_exponents(const TorusWeight& t);

}  // namespace rank2
