#include "rank2/root_system.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace rank2 {

std::optional<System> parse_system(const std::string& token) {
    if (token == "A1") return System::A1;
    if (token == "A1xA1") return System::A1xA1;
    if (token == "A2") return System::A2;
    if (token == "C2") return System::C2;
    if (token == "G2") return System::G2;
    return std::nullopt;
}

std::string system_name(System s) {
    switch (s) {
        case System::A1: return "A1";
        case System::A1xA1: return "A1xA1";
        case System::A2: return "A2";
        case System::C2: return "C2";
        case System::G2: return "G2";
    }
    return "?";
}

namespace {

IMat simple_reflection_omega(const IMat& cartan, int i, int n) {
    IMat m(n, IVec(n, 0));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            m[j][k] = (j == k ? 1 : 0) - (k == i ? cartan[i][j] : 0);
        }
    }
    return m;
}

IMat simple_reflection_alpha(const IMat& cartan, int i, int n) {
    IMat m(n, IVec(n, 0));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            m[j][k] = (j == k ? 1 : 0) - (j == i ? cartan[k][i] : 0);
        }
    }
    return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    int n = static_cast<int>(a.size());
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (int j = 0; j < n; ++j) m[i][j] += a[i][k] * b[k][j];
    return m;
}

IVec mat_apply(const IMat& a, const IVec& v) {
    int n = static_cast<int>(a.size());
    IVec out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += a[i][j] * v[j];
    return out;
}

}  // namespace

RootSystem::RootSystem(System label) : label_(label) {
    switch (label) {
        case System::A1:
            rank_ = 1;
            cartan_ = {{2}};
            pos_roots_ = {{1}};
            omega_in_alpha_ = {{Rational(1, 2)}};
            break;
        case System::A1xA1:
            rank_ = 2;
            cartan_ = {{2, 0}, {0, 2}};
            pos_roots_ = {{1, 0}, {0, 1}};
            omega_in_alpha_ = {{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1, 2)}};
            break;
        case System::A2:
            rank_ = 2;
            cartan_ = {{2, -1}, {-1, 2}};
            pos_roots_ = {{1, 0}, {0, 1}, {1, 1}};
            omega_in_alpha_ = {{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}};
            break;
        case System::C2:
            rank_ = 2;
            cartan_ = {{2, -2}, {-1, 2}};
            pos_roots_ = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
            omega_in_alpha_ = {{Rational(1), Rational(1)}, {Rational(1, 2), Rational(1)}};
            break;
        case System::G2:
            rank_ = 2;
            cartan_ = {{2, -3}, {-1, 2}};
            pos_roots_ = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
            omega_in_alpha_ = {{Rational(2), Rational(3)}, {Rational(1), Rational(2)}};
            break;
    }
    if (rank_ == 2) {
        int c = cartan_[0][1] * cartan_[1][0];
        switch (c) {
            case 0: m12_ = 2; break;
            case 1: m12_ = 3; break;
            case 2: m12_ = 4; break;
            case 3: m12_ = 6; break;
            default: throw std::logic_error("unexpected Cartan product");
        }
    }
    // sanity: omega_in_alpha inverts the alpha-in-omega rows of the Cartan matrix
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            Rational acc(0);
            for (int k = 0; k < rank_; ++k) acc += omega_in_alpha_[i][k] * Rational(cartan_[k][j]);
            if (acc != (i == j ? 1 : 0))
                throw std::logic_error("alpha/omega conversion tables are not mutually inverse");
        }
    enumerate_weyl();
}

void RootSystem::enumerate_weyl() {
    std::map<IMat, int> seen;
    WeylElement e;
    e.index = 0;
    e.omega_action = IMat(rank_, IVec(rank_, 0));
    e.alpha_action = e.omega_action;
    for (int i = 0; i < rank_; ++i) {
        e.omega_action[i][i] = 1;
        e.alpha_action[i][i] = 1;
    }
    weyl_.push_back(e);
    seen[e.omega_action] = 0;

    std::vector<IMat> gen_omega, gen_alpha;
    for (int i = 0; i < rank_; ++i) {
        gen_omega.push_back(simple_reflection_omega(cartan_, i, rank_));
        gen_alpha.push_back(simple_reflection_alpha(cartan_, i, rank_));
    }

    // breadth first by length; within a level words are produced in
    // lexicographic order, so the first word found for an element is the
    // lexicographically least among its reduced words
    std::vector<int> level{0};
    while (!level.empty()) {
        std::vector<int> next;
        for (int idx : level) {
            for (int i = 0; i < rank_; ++i) {
                IMat om = mat_mul(weyl_[idx].omega_action, gen_omega[i]);
                if (seen.count(om)) continue;
                WeylElement w;
                w.index = static_cast<int>(weyl_.size());
                w.word = weyl_[idx].word;
                w.word.push_back(i);
                w.omega_action = om;
                w.alpha_action = mat_mul(weyl_[idx].alpha_action, gen_alpha[i]);
                seen[om] = w.index;
                weyl_.push_back(w);
                next.push_back(w.index);
            }
        }
        level = next;
    }

    simple_idx_.assign(rank_, -1);
    for (int i = 0; i < rank_; ++i) simple_idx_[i] = seen.at(gen_omega[i]);

    int n = static_cast<int>(weyl_.size());
    mult_.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mult_[a][b] = seen.at(mat_mul(weyl_[a].omega_action, weyl_[b].omega_action));
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mult_[a][b] == 0) inv_[a] = b;
}

const RootSystem& RootSystem::get(System s) {
    static const RootSystem a1(System::A1);
    static const RootSystem a1xa1(System::A1xA1);
    static const RootSystem a2(System::A2);
    static const RootSystem c2(System::C2);
    static const RootSystem g2(System::G2);
    switch (s) {
        case System::A1: return a1;
        case System::A1xA1: return a1xa1;
        case System::A2: return a2;
        case System::C2: return c2;
        case System::G2: return g2;
    }
    throw std::logic_error("unreachable");
}

int RootSystem::braid_order(int i, int j) const {
    if (i == j) throw std::invalid_argument("braid_order: equal indices");
    return m12_;
}

bool RootSystem::simple_is_long(int i) const {
    if (rank_ != 2 || m12_ < 4) throw std::invalid_argument("simple_is_long: only for C2/G2");
    // |<alpha_i, alpha_j^vee>| > |<alpha_j, alpha_i^vee>| exactly for the long root
    int j = 1 - i;
    return std::abs(cartan_[i][j]) > std::abs(cartan_[j][i]);
}

IVec RootSystem::act_omega(int w, const IVec& lambda) const { return mat_apply(weyl_[w].omega_action, lambda); }

IVec RootSystem::act_alpha(int w, const IVec& beta) const { return mat_apply(weyl_[w].alpha_action, beta); }

IVec RootSystem::root_in_omega(int root_idx) const {
    const IVec& r = pos_roots_[root_idx];
    IVec out(rank_, 0);
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i) out[j] += r[i] * cartan_[i][j];
    return out;
}

std::vector<int> RootSystem::inversion_set(int w) const {
    std::vector<int> out;
    for (int r = 0; r < num_positive_roots(); ++r) {
        IVec img = act_alpha(w, pos_roots_[r]);
        bool negative = false;
        for (int c : img) {
            if (c < 0) { negative = true; break; }
            if (c > 0) break;
        }
        if (negative) out.push_back(r);
    }
    return out;
}

std::vector<int> RootSystem::min_coset_reps(const std::vector<int>& I) const {
    for (int i : I)
        if (i < 0 || i >= rank_) throw std::invalid_argument("min_coset_reps: bad subset");
    std::vector<int> out;
    for (const auto& w : weyl_) {
        bool ok = true;
        for (int i : I) {
            IVec img = act_alpha(w.index, pos_roots_[i]);
            for (int c : img) {
                if (c < 0) { ok = false; break; }
                if (c > 0) break;
            }
            if (!ok) break;
        }
        if (ok) out.push_back(w.index);
    }
    return out;
}

int RootSystem::root_index(const IVec& alpha_coords) const {
    for (int r = 0; r < num_positive_roots(); ++r)
        if (pos_roots_[r] == alpha_coords) return r;
    return -1;
}

std::string RootSystem::root_token(int root_idx) const {
    const IVec& r = pos_roots_[root_idx];
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank_; ++i) {
        if (r[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (r[i] != 1) os << r[i];
        os << "a" << (i + 1);
    }
    return os.str();
}

std::optional<int> RootSystem::parse_root_token(const std::string& token) const {
    for (int r = 0; r < num_positive_roots(); ++r)
        if (root_token(r) == token) return r;
    return std::nullopt;
}

std::string RootSystem::word_str(int w) const {
    const auto& word = weyl_[w].word;
    if (word.empty()) return "e";
    std::ostringstream os;
    for (int i : word) os << "s" << (i + 1);
    return os.str();
}

std::optional<int> RootSystem::parse_word(const std::string& s) const {
    if (s == "e") return 0;
    int cur = 0;
    size_t p = 0;
    while (p < s.size()) {
        if (s[p] != 's' || p + 1 >= s.size()) return std::nullopt;
        int i = s[p + 1] - '1';
        if (i < 0 || i >= rank_) return std::nullopt;
        cur = multiply(cur, simple_reflection(i));
        p += 2;
    }
    return cur;
}

}  // namespace rank2
