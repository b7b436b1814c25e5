#include "rank2/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rank2 {

namespace {

// Dense polynomial helpers over Q, lowest coefficient first.

void poly_trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division a / b, remainder must vanish.
std::vector<Rational> poly_divide_exact(std::vector<Rational> a, const std::vector<Rational>& b) {
    poly_trim(a);
    std::vector<Rational> q;
    if (a.empty()) return q;
    if (b.empty()) throw std::domain_error("poly_divide_exact: division by zero polynomial");
    if (a.size() < b.size()) throw std::domain_error("poly_divide_exact: not divisible");
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        Rational c = a[k + b.size() - 1] / lead;
        q[k] = c;
        if (c != 0) {
            for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
        }
    }
    poly_trim(a);
    if (!a.empty()) throw std::domain_error("poly_divide_exact: nonzero remainder");
    return q;
}

FieldParams make_params(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("field parameters must be positive");
    FieldParams p;
    p.n = n;
    p.d = d;
    p.cyclo = cyclotomic_polynomial(n);
    p.degree = static_cast<int>(p.cyclo.size()) - 1;
    // x^(degree+k) mod Phi_N, computed incrementally from x^degree = -(lower part);
    // the table covers raw degrees up to max(N-1, 2*degree-2)
    int table = std::max(p.n - 1, 2 * p.degree - 2) - p.degree + 1;
    std::vector<Rational> cur(p.degree, Rational(0));
    for (int i = 0; i < p.degree; ++i) cur[i] = -p.cyclo[i];   // Phi is monic
    for (int k = 0; k < table; ++k) {
        p.power_rem.push_back(cur);
        // multiply by x and reduce
        std::vector<Rational> next(p.degree, Rational(0));
        Rational top = cur[p.degree - 1];
        for (int i = p.degree - 1; i >= 1; --i) next[i] = cur[i - 1];
        next[0] = 0;
        if (top != 0)
            for (int i = 0; i < p.degree; ++i) next[i] += top * -p.cyclo[i];
        cur = std::move(next);
    }
    return p;
}

FieldParams g_params = make_params(12, 6);

}  // namespace

const FieldParams& field() { return g_params; }

void set_field(int n, int d) { g_params = make_params(n, d); }

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<Rational> cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<Rational>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n
    std::vector<Rational> num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = poly_divide_exact(num, cyclotomic_polynomial(d));
    }
    cache[n] = num;
    return num;
}

CycNum::CycNum() : c_(field().degree, Rational(0)) {}

CycNum::CycNum(int value) : CycNum(Rational(value)) {}

CycNum::CycNum(const Rational& value) : c_(field().degree, Rational(0)) { c_[0] = value; }

CycNum CycNum::zeta_power(long k) {
    const auto& f = field();
    long r = k % f.n;
    if (r < 0) r += f.n;
    std::vector<Rational> raw(static_cast<size_t>(r) + 1, Rational(0));
    raw[static_cast<size_t>(r)] = 1;
    CycNum out;
    out.reduce_from(raw);
    return out;
}

void CycNum::reduce_from(std::vector<Rational>& raw) {
    const auto& f = field();
    // Fold powers >= degree down using x^n = 1 first (raw may reach degree n-1),
    // then the precomputed remainders of x^(degree+k).
    for (size_t i = raw.size(); i-- > static_cast<size_t>(f.degree);) {
        if (raw[i] == 0) continue;
        size_t k = i - static_cast<size_t>(f.degree);
        if (k >= f.power_rem.size())
            throw std::logic_error("CycNum::reduce_from: degree out of range");
        for (int j = 0; j < f.degree; ++j) c_[j] += raw[i] * f.power_rem[k][j];
        raw[i] = 0;
    }
    for (size_t i = 0; i < std::min(raw.size(), static_cast<size_t>(f.degree)); ++i) c_[i] += raw[i];
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

const Rational& CycNum::rational_value() const { return c_[0]; }

CycNum CycNum::operator-() const {
    CycNum out;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    if (is_zero() || o.is_zero()) {
        for (auto& x : c_) x = 0;
        return *this;
    }
    if (o.is_rational()) {
        for (auto& x : c_) x *= o.c_[0];
        return *this;
    }
    if (is_rational()) {
        Rational s = c_[0];
        c_ = o.c_;
        for (auto& x : c_) x *= s;
        return *this;
    }
    const int deg = field().degree;
    std::vector<Rational> raw(2 * deg - 1, Rational(0));
    for (int i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < deg; ++j) {
            if (o.c_[j] == 0) continue;
            raw[i + j] += c_[i] * o.c_[j];
        }
    }
    for (auto& x : c_) x = 0;
    reduce_from(raw);
    return *this;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum::inverse: division by zero");
    if (is_rational()) return CycNum(Rational(1) / c_[0]);
    // Extended Euclid in Q[x] against Phi_N; the gcd is a nonzero constant.
    const auto& f = field();
    std::vector<Rational> r0 = f.cyclo;
    std::vector<Rational> r1 = c_;
    poly_trim(r1);
    std::vector<Rational> s0;                       // coefficient of this in r0 expansion
    std::vector<Rational> s1{Rational(1)};
    while (true) {
        // divide r0 by r1
        std::vector<Rational> q;
        std::vector<Rational> rem = r0;
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, Rational(0));
            const Rational& lead = r1.back();
            for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
                Rational c = rem[k + r1.size() - 1] / lead;
                q[k] = c;
                if (c != 0)
                    for (size_t j = 0; j < r1.size(); ++j) rem[k + j] -= c * r1[j];
            }
        }
        poly_trim(rem);
        // s_new = s0 - q * s1
        std::vector<Rational> snew = s0;
        if (!q.empty() && !s1.empty()) {
            snew.resize(std::max(snew.size(), q.size() + s1.size() - 1), Rational(0));
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
            }
            poly_trim(snew);
        }
        if (rem.empty()) {
            // r1 is the gcd, necessarily a constant since Phi_N is irreducible
            if (r1.size() != 1)
                throw std::logic_error("CycNum::inverse: nontrivial gcd with cyclotomic polynomial");
            CycNum out;
            for (size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) out.c_[i] = s1[i] / r1[0];
            return out;
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
}

bool CycNum::as_zeta_power(long& k_out) const {
    for (long k = 0; k < field().n; ++k) {
        if (*this == zeta_power(k)) {
            k_out = k;
            return true;
        }
    }
    return false;
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "zeta";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace rank2
