#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rank2/cyclotomic.hpp"

namespace rank2 {

enum class System { A1, A1xA1, A2, C2, G2 };

std::optional<System> parse_system(const std::string& token);
std::string system_name(System s);

using IVec = std::vector<int>;
using IMat = std::vector<std::vector<int>>;   // row-major

/// A Weyl group element: its lexicographically least reduced word together
/// with its action matrices on weight-lattice (omega) and root-lattice
/// (alpha) coordinates.
struct WeylElement {
    int index = 0;
    std::vector<int> word;    // simple reflection indices, 0-based, applied right to left
    IMat omega_action;        // lambda |-> M * lambda on omega coordinates
    IMat alpha_action;        // same element acting on alpha coordinates
};

class RootSystem {
public:
    static const RootSystem& get(System s);

    System label() const { return label_; }
    int rank() const { return rank_; }
    const IMat& cartan() const { return cartan_; }                    // cartan[i][j] = <alpha_i, alpha_j^vee>
    const std::vector<IVec>& positive_roots() const { return pos_roots_; }
    int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
    const std::vector<std::vector<Rational>>& omega_in_alpha() const { return omega_in_alpha_; }
    int braid_order(int i, int j) const;                              // m_ij
    bool simple_is_long(int i) const;                                 // rank-2 non-simply-laced only

    const std::vector<WeylElement>& weyl() const { return weyl_; }
    int order() const { return static_cast<int>(weyl_.size()); }
    const WeylElement& element(int idx) const { return weyl_[idx]; }
    int identity() const { return 0; }
    int longest_element() const { return static_cast<int>(weyl_.size()) - 1; }
    int simple_reflection(int i) const { return simple_idx_[i]; }
    int multiply(int a, int b) const { return mult_[a][b]; }          // element a * b
    int inverse(int a) const { return inv_[a]; }
    int length(int a) const { return static_cast<int>(weyl_[a].word.size()); }

    IVec act_omega(int w, const IVec& lambda) const;
    IVec act_alpha(int w, const IVec& beta) const;

    /// alpha-coordinates of a positive root expressed in the omega basis
    /// (rows of the Cartan matrix); always integral.
    IVec root_in_omega(int root_idx) const;

    /// R(w) = { alpha > 0 | w alpha < 0 }, as indices into positive_roots().
    std::vector<int> inversion_set(int w) const;

    /// Minimal length coset representatives of W / W_I.
    std::vector<int> min_coset_reps(const std::vector<int>& I) const;

    int root_index(const IVec& alpha_coords) const;        // -1 if not a positive root
    std::string root_token(int root_idx) const;            // "a1", "a1+2a2", ...
    std::optional<int> parse_root_token(const std::string& token) const;

    std::string word_str(int w) const;                     // "e", "s1", "s2s1", ...
    std::optional<int> parse_word(const std::string& s) const;

private:
    RootSystem(System label);
    System label_;
    int rank_;
    IMat cartan_;
    std::vector<IVec> pos_roots_;
    std::vector<std::vector<Rational>> omega_in_alpha_;
    int m12_ = 0;
    std::vector<WeylElement> weyl_;
    std::vector<int> simple_idx_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;

    void enumerate_weyl();
};

}  // namespace rank2
