#include "rank2/module.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rank2 {

CycScalar tsign_value(TSign s) {
    return s == TSign::PlusQ ? CycScalar::q_power(1) : -CycScalar::q_power(-1);
}

namespace {

CycScalar mono(const Monomial& m) { return CycScalar::from_monomial(m); }

IVec omega_unit(int rank, int i) {
    IVec v(rank, 0);
    v[i] = 1;
    return v;
}

IVec vec_add(const IVec& a, const IVec& b, int mult) {
    IVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + mult * b[i];
    return out;
}

}  // namespace

ModuleRep build_calibrated(const RootSystem& rs, const PlacedShape& shape) {
    if (!is_placed_skew(rs, shape))
        throw std::invalid_argument("build_calibrated: shape is not a placed skew shape");
    const int dim = static_cast<int>(shape.tableaux.size());
    std::map<int, int> pos;
    for (int k = 0; k < dim; ++k) pos[shape.tableaux[k]] = k;

    ModuleRep m;
    m.system = rs.label();
    m.dim = dim;
    std::vector<TorusWeight> weights;
    for (int w : shape.tableaux) {
        weights.push_back(weyl_act(rs, w, shape.t));
        m.basis_labels.push_back(rs.word_str(w));
    }

    for (int i = 0; i < rs.rank(); ++i) {
        Matrix x(dim, dim);
        for (int k = 0; k < dim; ++k) x.at(k, k) = mono(weights[k].omega_values[i]);
        m.x_mats.push_back(std::move(x));
    }
    const CycScalar qq = q_minus_qinv();
    const CycScalar qinv = CycScalar::q_power(-1);
    for (int i = 0; i < rs.rank(); ++i) {
        Matrix t(dim, dim);
        for (int k = 0; k < dim; ++k) {
            Monomial val = eval_root(rs, weights[k], i);
            if (val.is_one())
                throw std::domain_error("build_calibrated: vanishing denominator 1 - (wt)(X^{-alpha_i})");
            CycScalar diag = qq / (CycScalar(1) - mono(val.inverse()));
            t.at(k, k) = diag;
            int sw = rs.multiply(rs.simple_reflection(i), shape.tableaux[k]);
            auto it = pos.find(sw);
            if (it != pos.end()) t.at(it->second, k) = qinv + diag;
        }
        m.t_mats.push_back(std::move(t));
    }
    {
        std::ostringstream os;
        os << "calibrated(J={";
        for (size_t r = 0; r < shape.j.size(); ++r) os << (r ? "," : "") << rs.root_token(shape.j[r]);
        os << "})";
        m.origin = os.str();
    }
    RelationReport rep = check_relations(rs, m);
    if (!rep.ok())
        throw std::logic_error("build_calibrated: defining relations failed: " + rep.failures.front());
    return m;
}

namespace {

// Shared engine for principal series and parabolic induction: the basis is
// T_w tensor v_t over minimal coset representatives, T_i acts by the
// quadratic relation, and X^lambda is pushed through T_w with the
// commutation rule, expanded in closed form:
//   n = <lambda, alpha_i^vee> > 0:  (q - q^{-1}) sum_{k=0}^{n-1} X^{lambda - k alpha_i}
//   n < 0:                         -(q - q^{-1}) sum_{k=1}^{-n} X^{lambda + k alpha_i}
struct InductionBuilder {
    const RootSystem& rs;
    TorusWeight t;
    std::vector<int> basis;            // Weyl indices, (length, lex) sorted
    std::map<int, int> pos;            // Weyl index -> basis position
    std::vector<Matrix> t_mats;
    std::map<std::pair<IVec, int>, Vec> memo;

    InductionBuilder(const RootSystem& rs_, const TorusWeight& t_, const std::vector<int>& I,
                     const std::vector<TSign>& signs)
        : rs(rs_), t(t_) {
        basis = rs.min_coset_reps(I);
        std::sort(basis.begin(), basis.end());
        for (size_t k = 0; k < basis.size(); ++k) pos[basis[k]] = static_cast<int>(k);
        const int dim = static_cast<int>(basis.size());
        const CycScalar qq = q_minus_qinv();
        for (int i = 0; i < rs.rank(); ++i) {
            Matrix ti(dim, dim);
            for (int k = 0; k < dim; ++k) {
                int w = basis[k];
                int sw = rs.multiply(rs.simple_reflection(i), w);
                auto it = pos.find(sw);
                if (it != pos.end()) {
                    ti.at(it->second, k) = CycScalar(1);
                    if (rs.length(sw) < rs.length(w)) ti.at(k, k) = qq;
                } else {
                    // s_i w = w s_j for a unique j in I; T_j acts on v_t by its sign
                    bool found = false;
                    for (size_t a = 0; a < I.size(); ++a) {
                        if (rs.multiply(w, rs.simple_reflection(I[a])) == sw) {
                            ti.at(k, k) = tsign_value(signs[a]);
                            found = true;
                            break;
                        }
                    }
                    if (!found) throw std::logic_error("induction: no exchange letter found");
                }
            }
            t_mats.push_back(std::move(ti));
        }
    }

    Vec x_on_basis(const IVec& lambda, int k) {
        auto key = std::make_pair(lambda, k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const int dim = static_cast<int>(basis.size());
        Vec out(dim);
        int w = basis[k];
        if (w == rs.identity()) {
            out[k] = mono(eval_weight(t, lambda));
        } else {
            int i = rs.element(w).word.front();
            int rest = rs.multiply(rs.simple_reflection(i), w);   // shorter, still a coset rep
            int krest = pos.at(rest);
            IVec slam = rs.act_omega(rs.simple_reflection(i), lambda);
            out = t_mats[i].apply(x_on_basis(slam, krest));
            int n = lambda[i];
            const CycScalar qq = q_minus_qinv();
            IVec alpha_i(rs.rank());
            for (int j = 0; j < rs.rank(); ++j) alpha_i[j] = rs.cartan()[i][j];
            if (n > 0) {
                for (int kk = 0; kk < n; ++kk) {
                    Vec c = x_on_basis(vec_add(lambda, alpha_i, -kk), krest);
                    for (int r = 0; r < dim; ++r) out[r] += qq * c[r];
                }
            } else if (n < 0) {
                for (int kk = 1; kk <= -n; ++kk) {
                    Vec c = x_on_basis(vec_add(lambda, alpha_i, kk), krest);
                    for (int r = 0; r < dim; ++r) out[r] -= qq * c[r];
                }
            }
        }
        memo[key] = out;
        return out;
    }

    ModuleRep build(const std::string& origin) {
        ModuleRep m;
        m.system = rs.label();
        m.dim = static_cast<int>(basis.size());
        m.t_mats = t_mats;
        for (int i = 0; i < rs.rank(); ++i) {
            Matrix x(m.dim, m.dim);
            for (int k = 0; k < m.dim; ++k) {
                Vec col = x_on_basis(omega_unit(rs.rank(), i), k);
                for (int r = 0; r < m.dim; ++r) x.at(r, k) = col[r];
            }
            m.x_mats.push_back(std::move(x));
        }
        for (int w : basis) m.basis_labels.push_back("T_" + rs.word_str(w));
        m.origin = origin;
        return m;
    }
};

}  // namespace

ModuleRep build_principal(const RootSystem& rs, const TorusWeight& t) {
    InductionBuilder b(rs, t, {}, {});
    return b.build("principal");
}

ModuleRep build_induced(const RootSystem& rs, const std::vector<int>& I, const TorusWeight& t,
                        const std::vector<TSign>& signs) {
    if (I.size() != signs.size()) throw std::invalid_argument("build_induced: one sign per index");
    for (size_t a = 0; a < I.size(); ++a) {
        Monomial val = eval_root(rs, t, I[a]);
        Monomial need = Monomial::q_power(signs[a] == TSign::PlusQ ? 2 : -2);
        if (val != need)
            throw std::domain_error(
                "build_induced: character inconsistency, t(X^{alpha_i}) must be q^2 for T_i -> q "
                "and q^{-2} for T_i -> -q^{-1}");
    }
    InductionBuilder b(rs, t, I, signs);
    std::ostringstream os;
    os << "induced(I={";
    for (size_t a = 0; a < I.size(); ++a)
        os << (a ? "," : "") << (I[a] + 1) << (signs[a] == TSign::PlusQ ? "+" : "-");
    os << "})";
    return b.build(os.str());
}

ModuleRep tensor_module(const ModuleRep& m1, const ModuleRep& m2) {
    if (m1.system != System::A1 || m2.system != System::A1)
        throw std::invalid_argument("tensor_module: both factors must be A1 modules");
    ModuleRep m;
    m.system = System::A1xA1;
    m.dim = m1.dim * m2.dim;
    Matrix i1 = Matrix::identity(m1.dim), i2 = Matrix::identity(m2.dim);
    m.t_mats.push_back(Matrix::kronecker(m1.t_mats[0], i2));
    m.t_mats.push_back(Matrix::kronecker(i1, m2.t_mats[0]));
    m.x_mats.push_back(Matrix::kronecker(m1.x_mats[0], i2));
    m.x_mats.push_back(Matrix::kronecker(i1, m2.x_mats[0]));
    for (const auto& a : m1.basis_labels)
        for (const auto& b : m2.basis_labels) m.basis_labels.push_back(a + "(x)" + b);
    m.origin = "tensor(" + m1.origin + ", " + m2.origin + ")";
    return m;
}

Matrix x_lambda(const ModuleRep& m, const IVec& lambda) {
    Matrix out = Matrix::identity(m.dim);
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] == 0) continue;
        Matrix base = lambda[i] > 0 ? m.x_mats[i] : m.x_mats[i].inverse();
        out = out * base.power(std::abs(lambda[i]));
    }
    return out;
}

RelationReport check_relations(const RootSystem& rs, const ModuleRep& m) {
    RelationReport rep;
    const CycScalar q = CycScalar::q_power(1);
    const CycScalar qinv = CycScalar::q_power(-1);
    const Matrix id = Matrix::identity(m.dim);

    for (int i = 0; i < rs.rank(); ++i) {
        Matrix lhs = (m.t_mats[i] - Matrix::scalar(m.dim, q)) * (m.t_mats[i] + Matrix::scalar(m.dim, qinv));
        if (!lhs.is_zero()) rep.failures.push_back("quadratic relation fails for T_" + std::to_string(i + 1));
    }
    if (rs.rank() == 2) {
        int mij = rs.braid_order(0, 1);
        Matrix lhs = id, rhs = id;
        for (int k = 0; k < mij; ++k) {
            lhs = lhs * m.t_mats[k % 2];
            rhs = rhs * m.t_mats[1 - k % 2];
        }
        if (lhs != rhs) rep.failures.push_back("braid relation fails");
        if (m.x_mats[0] * m.x_mats[1] != m.x_mats[1] * m.x_mats[0])
            rep.failures.push_back("X generators do not commute");
    }

    // commutation rule on omega's, alpha's and three deterministic pseudo-random vectors
    std::vector<IVec> lambdas;
    for (int i = 0; i < rs.rank(); ++i) lambdas.push_back(omega_unit(rs.rank(), i));
    for (int i = 0; i < rs.rank(); ++i) {
        IVec a(rs.rank());
        for (int j = 0; j < rs.rank(); ++j) a[j] = rs.cartan()[i][j];
        lambdas.push_back(a);
    }
    std::mt19937 rng(6046u);
    for (int k = 0; k < 3; ++k) {
        IVec a(rs.rank());
        for (int j = 0; j < rs.rank(); ++j) a[j] = static_cast<int>(rng() % 7) - 3;
        lambdas.push_back(a);
    }
    const CycScalar qq = q_minus_qinv();
    std::map<IVec, Matrix> xcache;
    auto xl_of = [&](const IVec& lam) -> const Matrix& {
        auto it = xcache.find(lam);
        if (it == xcache.end()) it = xcache.emplace(lam, x_lambda(m, lam)).first;
        return it->second;
    };
    for (const IVec& lam : lambdas) {
        const Matrix& xl = xl_of(lam);
        for (int i = 0; i < rs.rank(); ++i) {
            IVec slam = rs.act_omega(rs.simple_reflection(i), lam);
            Matrix rhs = m.t_mats[i] * xl_of(slam);
            int n = lam[i];
            IVec alpha_i(rs.rank());
            for (int j = 0; j < rs.rank(); ++j) alpha_i[j] = rs.cartan()[i][j];
            Matrix corr(m.dim, m.dim);
            if (n > 0)
                for (int k = 0; k < n; ++k) corr = corr + xl_of(vec_add(lam, alpha_i, -k));
            else if (n < 0)
                for (int k = 1; k <= -n; ++k) corr = corr - xl_of(vec_add(lam, alpha_i, k));
            rhs = rhs + corr.scaled(qq);
            if (xl * m.t_mats[i] != rhs) {
                std::ostringstream os;
                os << "commutation rule fails for T_" << (i + 1) << " at lambda=(";
                for (size_t j = 0; j < lam.size(); ++j) os << (j ? "," : "") << lam[j];
                os << ")";
                rep.failures.push_back(os.str());
            }
        }
    }

    // the W-symmetrized sum over X^{w omega_1} must act by a scalar
    Matrix central(m.dim, m.dim);
    for (int w = 0; w < rs.order(); ++w)
        central = central + xl_of(rs.act_omega(w, omega_unit(rs.rank(), 0)));
    CycScalar c;
    if (!is_scalar_matrix(central, c)) rep.failures.push_back("symmetrized X sum is not scalar");
    return rep;
}

namespace {

// Rows spanning the annihilator of the column space, so ker(rows) = span(b).
Matrix annihilator_rows(const Matrix& b) { return b.transpose().kernel().transpose(); }

// Generalized kernel of a single operator via the nullspace chain
// N_{j+1} = { v | A v in N_j }; avoids forming high matrix powers.
Matrix generalized_kernel(const Matrix& a) {
    Matrix ker = a.kernel();
    while (ker.cols() > 0 && ker.cols() < a.rows()) {
        Matrix q = annihilator_rows(ker);
        Matrix next = (q * a).kernel();
        if (next.cols() == ker.cols()) break;
        ker = std::move(next);
    }
    return ker;
}

Matrix subspace_intersection(const Matrix& b1, const Matrix& b2) {
    if (b1.cols() == 0 || b2.cols() == 0) return Matrix(b1.rows(), 0);
    Matrix joint = Matrix::h_concat(b1, b2.scaled(CycScalar(-1)));
    Matrix ker = joint.kernel();
    Matrix coeffs(b1.cols(), ker.cols());
    for (int i = 0; i < b1.cols(); ++i)
        for (int j = 0; j < ker.cols(); ++j) coeffs.at(i, j) = ker.at(i, j);
    return (b1 * coeffs).column_space();
}

}  // namespace

std::vector<WeightSpace> weight_decomposition(const RootSystem& rs, const ModuleRep& m,
                                              const std::vector<OrbitEntry>& orb) {
    std::vector<WeightSpace> out;
    int total = 0;
    for (size_t idx = 0; idx < orb.size(); ++idx) {
        const TorusWeight& t = orb[idx].weight;
        Matrix gen, eig_stack;
        for (int i = 0; i < rs.rank(); ++i) {
            Matrix shifted = m.x_mats[i] - Matrix::scalar(m.dim, mono(t.omega_values[i]));
            Matrix gen_i = generalized_kernel(shifted);
            gen = (i == 0) ? gen_i : subspace_intersection(gen, gen_i);
            eig_stack = (i == 0) ? shifted : Matrix::v_concat(eig_stack, shifted);
            if (gen.cols() == 0) break;
        }
        WeightSpace ws;
        ws.weight = t;
        ws.orbit_index = static_cast<int>(idx);
        ws.gen_basis = gen;
        ws.eig_basis = eig_stack.kernel();
        ws.dim_gen = ws.gen_basis.cols();
        ws.dim_eigen = ws.eig_basis.cols();
        if (ws.dim_gen > 0 && ws.dim_eigen == 0)
            throw std::logic_error("weight_decomposition: generalized space without eigenvector");
        total += ws.dim_gen;
        if (ws.dim_gen > 0) out.push_back(std::move(ws));
    }
    if (total != m.dim)
        throw std::domain_error("weight_decomposition: residual space outside the supplied orbit");
    return out;
}

Matrix tau_matrix(const RootSystem& rs, const ModuleRep& m,
                  const std::vector<WeightSpace>& spaces, int from, int i) {
    const WeightSpace& src = spaces[from];
    if (eval_root(rs, src.weight, i).is_one())
        throw std::domain_error("tau: undefined on a weight space with t(X^{alpha_i}) = 1");
    TorusWeight target = weyl_act(rs, rs.simple_reflection(i), src.weight);
    const WeightSpace* dst = nullptr;
    for (const auto& ws : spaces)
        if (ws.weight == target) { dst = &ws; break; }

    IVec neg_alpha(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) neg_alpha[j] = -rs.cartan()[i][j];
    Matrix xneg = x_lambda(m, neg_alpha);
    const Matrix& b = src.gen_basis;
    Matrix restr = b.solve(xneg * b);                               // X^{-alpha_i} on M_t^gen
    Matrix a = Matrix::identity(b.cols()) - restr;                  // invertible since value != 1
    Matrix images = m.t_mats[i] * b - (b * a.inverse()).scaled(q_minus_qinv());
    if (dst == nullptr) {
        if (!images.is_zero())
            throw std::logic_error("tau: image escapes the weight decomposition");
        return Matrix(0, b.cols());
    }
    return dst->gen_basis.solve(images);
}

Matrix submodule_closure(const ModuleRep& m, const Matrix& seeds) {
    Matrix basis = seeds.column_space();
    while (true) {
        Matrix ext = basis;
        for (const auto& g : m.t_mats) ext = Matrix::h_concat(ext, g * basis);
        for (const auto& g : m.x_mats) ext = Matrix::h_concat(ext, g * basis);
        Matrix next = ext.column_space();
        if (next.cols() == basis.cols()) return basis;
        basis = next;
    }
}

ModuleRep restrict_module(const ModuleRep& m, const Matrix& basis, const std::string& origin) {
    ModuleRep out;
    out.system = m.system;
    out.dim = basis.cols();
    for (const auto& g : m.t_mats) out.t_mats.push_back(basis.solve(g * basis));
    for (const auto& g : m.x_mats) out.x_mats.push_back(basis.solve(g * basis));
    for (int k = 0; k < out.dim; ++k) out.basis_labels.push_back("b" + std::to_string(k));
    out.origin = origin;
    return out;
}

ModuleRep quotient_module(const ModuleRep& m, const Matrix& sub_basis, const std::string& origin) {
    const int d = m.dim, k = sub_basis.cols();
    // complement: unit vectors at the non-pivot coordinates of the submodule
    std::vector<int> pivots = sub_basis.transpose().pivot_columns();
    std::vector<bool> is_pivot(d, false);
    for (int p : pivots) is_pivot[p] = true;
    Matrix u(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < k; ++j) u.at(i, j) = sub_basis.at(i, j);
    int col = k;
    for (int i = 0; i < d; ++i) {
        if (is_pivot[i]) continue;
        u.at(i, col++) = CycScalar(1);
    }
    if (col != d) throw std::logic_error("quotient_module: complement construction failed");
    Matrix uinv = u.inverse();

    ModuleRep out;
    out.system = m.system;
    out.dim = d - k;
    auto project = [&](const Matrix& g) {
        Matrix conj = uinv * g * u;
        for (int i = k; i < d; ++i)
            for (int j = 0; j < k; ++j)
                if (!conj.at(i, j).is_zero())
                    throw std::logic_error("quotient_module: basis does not span a submodule");
        Matrix block(d - k, d - k);
        for (int i = k; i < d; ++i)
            for (int j = k; j < d; ++j) block.at(i - k, j - k) = conj.at(i, j);
        return block;
    };
    for (const auto& g : m.t_mats) out.t_mats.push_back(project(g));
    for (const auto& g : m.x_mats) out.x_mats.push_back(project(g));
    for (int i = 0; i < out.dim; ++i) out.basis_labels.push_back("c" + std::to_string(i));
    out.origin = origin;
    return out;
}

// ------------------------------------------------------------- irreducibility

namespace {

using ScalarPoly = Poly<CycScalar>;

// det(U_sel + lambda V_sel) by evaluation at d+1 nodes and Lagrange interpolation.
ScalarPoly det_pencil(const Matrix& u, const Matrix& v) {
    const int n = u.rows();
    std::vector<CycScalar> nodes, values;
    for (int k = 0; k <= n; ++k) {
        CycScalar lam(k);
        nodes.push_back(lam);
        values.push_back((u + v.scaled(lam)).determinant());
    }
    // Lagrange interpolation on the integer nodes
    ScalarPoly acc;
    for (int k = 0; k <= n; ++k) {
        if (values[k].is_zero()) continue;
        ScalarPoly basis(CycScalar(1));
        CycScalar denom(1);
        for (int j = 0; j <= n; ++j) {
            if (j == k) continue;
            basis = basis * ScalarPoly(std::vector<CycScalar>{-nodes[j], CycScalar(1)});
            denom = denom * (nodes[k] - nodes[j]);
        }
        acc = acc + basis.scaled(values[k] / denom);
    }
    return acc;
}

// All roots of p inside the scalar field.  Monomial roots come from the
// v-adic Newton polygon; what remains is handled degree one and two,
// anything further is an honest unsupported-input error.
std::vector<CycScalar> field_roots(ScalarPoly p) {
    std::vector<CycScalar> roots;
    if (p.degree() <= 0) return roots;
    p = p.monic();
    {   // square-free part
        ScalarPoly d = p.derivative();
        ScalarPoly g = ScalarPoly::gcd(p, d);
        if (g.degree() > 0) {
            ScalarPoly q, r;
            ScalarPoly::divmod(p, g, q, r);
            p = q;
        }
    }
    auto divide_out = [&](const CycScalar& root) {
        ScalarPoly lin(std::vector<CycScalar>{-root, CycScalar(1)});
        ScalarPoly q, r;
        ScalarPoly::divmod(p, lin, q, r);
        if (!r.is_zero()) throw std::logic_error("field_roots: inexact deflation");
        p = q;
        roots.push_back(root);
    };
    if (p.coeff(0).is_zero()) divide_out(CycScalar());
    // candidate v-orders: integer slopes of the Newton polygon
    std::set<long> slopes;
    std::vector<std::pair<int, long>> ords;
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero()) ords.push_back({k, p.coeff(k).v_order()});
    for (size_t a = 0; a < ords.size(); ++a)
        for (size_t b = a + 1; b < ords.size(); ++b) {
            long num = ords[a].second - ords[b].second;
            long den = ords[b].first - ords[a].first;
            if (num % den == 0) slopes.insert(num / den);
        }
    for (long b : slopes) {
        for (int a = 0; a < field().n; ++a) {
            CycScalar cand = CycScalar::from_monomial(Monomial(a, b));
            while (p.degree() > 0 && p.eval(cand).is_zero()) divide_out(cand);
        }
    }
    if (p.degree() == 1) divide_out(-p.coeff(0) / p.coeff(1));
    if (p.degree() == 2) {
        CycScalar a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        CycScalar disc = b * b - CycScalar(4) * a * c;
        auto s = try_sqrt(disc);
        if (s) {
            CycScalar half_inv = (a + a).inverse();
            divide_out((-b + *s) * half_inv);
            if (p.degree() == 1) divide_out(-p.coeff(0) / p.coeff(1));
        }
        // no square root in the field: no further roots
    }
    if (p.degree() >= 3)
        throw std::runtime_error("field_roots: unextracted factor of degree >= 3 in pencil spectrum");
    return roots;
}

// lambda with closure(v1 + lambda v2) proper, given both single closures full.
std::vector<CycScalar> pencil_bad_lambdas(const ModuleRep& m, const Vec& v1, const Vec& v2) {
    const int d = m.dim;
    // closure of the pair under the diagonal action in M + M: the kept
    // columns (A_k v1, A_k v2) span every (B v1, B v2) simultaneously, so
    // closure(v1 + lambda v2) is spanned by A_k v1 + lambda A_k v2 for all lambda
    ModuleRep dbl;
    dbl.system = m.system;
    dbl.dim = 2 * d;
    auto blockdiag = [&](const Matrix& g) {
        Matrix out(2 * d, 2 * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                out.at(i, j) = g.at(i, j);
                out.at(d + i, d + j) = g.at(i, j);
            }
        return out;
    };
    for (const auto& g : m.t_mats) dbl.t_mats.push_back(blockdiag(g));
    for (const auto& g : m.x_mats) dbl.x_mats.push_back(blockdiag(g));
    Vec stacked(2 * d);
    for (int i = 0; i < d; ++i) { stacked[i] = v1[i]; stacked[d + i] = v2[i]; }
    Matrix pair_basis = submodule_closure(dbl, Matrix::from_columns(2 * d, {stacked}));
    Matrix u(d, pair_basis.cols()), v(d, pair_basis.cols());
    for (int j = 0; j < pair_basis.cols(); ++j)
        for (int i = 0; i < d; ++i) {
            u.at(i, j) = pair_basis.at(i, j);
            v.at(i, j) = pair_basis.at(d + i, j);
        }

    // rank(U + lambda V) < d exactly at the roots of every selector
    // determinant; the gcd over a few deterministic selectors trims spurious
    // factors before root extraction
    std::vector<std::vector<int>> selectors;
    selectors.push_back(u.pivot_columns());
    selectors.push_back(v.pivot_columns());
    selectors.push_back((u + v).pivot_columns());
    ScalarPoly g;
    bool have = false;
    for (const auto& sel : selectors) {
        if (static_cast<int>(sel.size()) != d) continue;
        ScalarPoly det = det_pencil(u.columns(sel), v.columns(sel));
        if (det.is_zero()) continue;
        g = have ? ScalarPoly::gcd(g, det) : det.monic();
        have = true;
        if (g.degree() == 0) return {};
    }
    if (!have)
        throw std::logic_error("pencil_bad_lambdas: no full-rank selector (caller contract violated)");
    return field_roots(g);
}

struct EigenData {
    std::vector<WeightSpace> spaces;
};

}  // namespace

IrredVerdict is_irreducible(const RootSystem& rs, const ModuleRep& m,
                            const std::vector<OrbitEntry>& orb,
                            const std::vector<WeightSpace>* precomputed) {
    IrredVerdict verdict;
    if (m.dim == 0) throw std::invalid_argument("is_irreducible: zero module");
    std::vector<WeightSpace> local;
    if (precomputed == nullptr) {
        local = weight_decomposition(rs, m, orb);
        precomputed = &local;
    }
    const std::vector<WeightSpace>& spaces = *precomputed;
    for (const auto& ws : spaces)
        if (ws.dim_eigen > 2)
            throw std::runtime_error("is_irreducible: joint eigenspace of dimension >= 3 unsupported");
    // single eigenvectors first
    for (const auto& ws : spaces) {
        for (int j = 0; j < ws.dim_eigen; ++j) {
            Matrix c = submodule_closure(m, Matrix::from_columns(m.dim, {ws.eig_basis.column(j)}));
            if (c.cols() < m.dim) {
                verdict.irreducible = false;
                verdict.certificate = c;
                return verdict;
            }
        }
    }
    // mixtures inside two-dimensional eigenspaces
    for (const auto& ws : spaces) {
        if (ws.dim_eigen != 2) continue;
        Vec v1 = ws.eig_basis.column(0), v2 = ws.eig_basis.column(1);
        for (const CycScalar& lam : pencil_bad_lambdas(m, v1, v2)) {
            Vec mix(m.dim);
            for (int i = 0; i < m.dim; ++i) mix[i] = v1[i] + lam * v2[i];
            Matrix c = submodule_closure(m, Matrix::from_columns(m.dim, {mix}));
            if (c.cols() > 0 && c.cols() < m.dim) {
                verdict.irreducible = false;
                verdict.certificate = c;
                return verdict;
            }
        }
    }
    verdict.irreducible = true;
    return verdict;
}

std::vector<FactorDescriptor> composition_factors(const RootSystem& rs, const ModuleRep& m,
                                                  const std::vector<OrbitEntry>& orb) {
    std::vector<FactorDescriptor> factors;
    ModuleRep work = m;
    while (work.dim > 0) {
        std::vector<WeightSpace> spaces = weight_decomposition(rs, work, orb);
        IrredVerdict verdict = is_irreducible(rs, work, orb, &spaces);
        if (verdict.irreducible) {
            FactorDescriptor f;
            f.dim = work.dim;
            for (const auto& ws : spaces)
                f.support.push_back({rs.word_str(orb[ws.orbit_index].min_rep), ws.dim_gen});
            f.rep = work;
            factors.push_back(std::move(f));
            break;
        }
        Matrix sub = verdict.certificate;
        while (true) {   // descend to an irreducible submodule
            ModuleRep inner = restrict_module(work, sub, "factor");
            IrredVerdict v2 = is_irreducible(rs, inner, orb);
            if (v2.irreducible) break;
            sub = sub * v2.certificate;
        }
        FactorDescriptor f;
        f.rep = restrict_module(work, sub, "factor");
        f.dim = f.rep.dim;
        f.support = support_signature(rs, f.rep, orb);
        factors.push_back(std::move(f));
        work = quotient_module(work, sub, "quotient");
    }
    return factors;
}

Temperedness temperedness(const RootSystem& rs, const ModuleRep& m,
                          const std::vector<OrbitEntry>& orb) {
    std::vector<WeightSpace> spaces = weight_decomposition(rs, m, orb);
    Temperedness out;
    out.tempered = true;
    out.square_integrable = true;
    for (const auto& ws : spaces) {
        for (const Rational& e : nu_exponents(ws.weight)) {
            if (e > 0) out.tempered = false;
            if (e >= 0) out.square_integrable = false;
        }
    }
    if (!out.tempered) out.square_integrable = false;
    return out;
}

std::vector<std::pair<std::string, int>> support_signature(const RootSystem& rs, const ModuleRep& m,
                                                           const std::vector<OrbitEntry>& orb) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& ws : weight_decomposition(rs, m, orb))
        out.push_back({rs.word_str(orb[ws.orbit_index].min_rep), ws.dim_gen});
    return out;
}

bool is_calibrated_rep(const RootSystem& rs, const ModuleRep& m,
                       const std::vector<OrbitEntry>& orb) {
    for (const auto& ws : weight_decomposition(rs, m, orb))
        if (ws.dim_gen != ws.dim_eigen) return false;
    return true;
}

}  // namespace rank2
