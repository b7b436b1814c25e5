#include "rank2/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace rank2 {

namespace {

Rational rational_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0) {
        if (e < 0) throw std::domain_error("rational_pow: zero to a negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? x : Rational(1) / x;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int constant) {
    if (constant != 0) terms_[0] = CycNum(constant);
}

LaurentPoly::LaurentPoly(const CycNum& constant) {
    if (!constant.is_zero()) terms_[0] = constant;
}

LaurentPoly LaurentPoly::term(const CycNum& coeff, long v_exp) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_[v_exp] = coeff;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("LaurentPoly::min_exp on zero");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("LaurentPoly::max_exp on zero");
    return terms_.rbegin()->first;
}

void LaurentPoly::set(long exp, const CycNum& coeff) {
    if (coeff.is_zero())
        terms_.erase(exp);
    else
        terms_[exp] = coeff;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.terms_.empty() || b.terms_.empty()) return out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            CycNum prod = ca * cb;
            auto it = out.terms_.find(ea + eb);
            if (it == out.terms_.end()) {
                if (!prod.is_zero()) out.terms_[ea + eb] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(long dv) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e + dv] = c;
    return out;
}

CycNum LaurentPoly::eval(const Rational& v0) const {
    CycNum acc;
    for (const auto& [e, c] : terms_) acc += c * CycNum(rational_pow(v0, e));
    return acc;
}

Poly<CycNum> LaurentPoly::to_poly() const {
    std::vector<CycNum> c;
    if (terms_.empty()) return Poly<CycNum>(std::move(c));
    if (min_exp() < 0) throw std::logic_error("LaurentPoly::to_poly: negative exponent");
    c.assign(max_exp() + 1, CycNum());
    for (const auto& [e, v] : terms_) c[e] = v;
    return Poly<CycNum>(std::move(c));
}

LaurentPoly LaurentPoly::from_poly(const Poly<CycNum>& p, long shift) {
    LaurentPoly out;
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) out.terms_[static_cast<long>(i) + shift] = c[i];
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool composite = !c.is_rational();
        if (composite) os << "(" << c.str() << ")";
        else os << c.str();
        if (e != 0) os << "*v^" << e;
    }
    return os.str();
}

// ------------------------------------------------------------------ Monomial

Monomial::Monomial(int zeta, long v) : v_pow(v) {
    int n = field().n;
    zeta_pow = ((zeta % n) + n) % n;
}

Monomial Monomial::q_power(long k) { return Monomial(0, k * field().d); }

Monomial Monomial::operator*(const Monomial& o) const {
    return Monomial(zeta_pow + o.zeta_pow, v_pow + o.v_pow);
}

Monomial Monomial::inverse() const { return Monomial(-zeta_pow, -v_pow); }

Monomial Monomial::power(long e) const {
    return Monomial(static_cast<int>((static_cast<long>(zeta_pow) * e) % field().n), v_pow * e);
}

std::string Monomial::str() const {
    std::ostringstream os;
    os << "zeta^" << zeta_pow << " * v^" << v_pow;
    return os.str();
}

// ----------------------------------------------------------------- CycScalar

CycScalar::CycScalar() : num_(), den_(1) {}

CycScalar::CycScalar(int value) : num_(value), den_(1) {}

CycScalar::CycScalar(const Rational& value) : num_(CycNum(value)), den_(1) {}

CycScalar::CycScalar(const CycNum& value) : num_(value), den_(1) {}

CycScalar::CycScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("CycScalar: zero denominator");
    canonicalize();
}

CycScalar CycScalar::q_power(long k) { return from_monomial(Monomial::q_power(k)); }

CycScalar CycScalar::v_power(long m) { return from_monomial(Monomial::v_power(m)); }

CycScalar CycScalar::from_monomial(const Monomial& m) {
    CycScalar out;
    out.num_ = LaurentPoly::term(CycNum::zeta_power(m.zeta_pow), m.v_pow);
    out.den_ = LaurentPoly(1);
    return out;
}

void CycScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_one()) return;
    if (den_.terms().size() == 1) {
        // monomial denominator folds into the numerator
        const auto& [e, c] = *den_.terms().begin();
        num_ = num_.shifted(-e);
        if (!c.is_one()) {
            CycNum ci = c.inverse();
            LaurentPoly scaled;
            for (const auto& [k, a] : num_.terms()) scaled.set(k, a * ci);
            num_ = std::move(scaled);
        }
        den_ = LaurentPoly(1);
        return;
    }
    long en = num_.min_exp();
    long ed = den_.min_exp();
    Poly<CycNum> n0 = num_.shifted(-en).to_poly();
    Poly<CycNum> d0 = den_.shifted(-ed).to_poly();
    if (d0.degree() > 0 && n0.degree() > 0) {
        Poly<CycNum> g = Poly<CycNum>::gcd(n0, d0);
        if (g.degree() > 0) {
            Poly<CycNum> q, r;
            Poly<CycNum>::divmod(n0, g, q, r);
            n0 = q;
            Poly<CycNum>::divmod(d0, g, q, r);
            d0 = q;
        }
    }
    CycNum c = d0.coeff(0);
    if (!c.is_one()) {
        CycNum ci = c.inverse();
        n0 = n0.scaled(ci);
        d0 = d0.scaled(ci);
    }
    num_ = LaurentPoly::from_poly(n0, en - ed);
    den_ = LaurentPoly::from_poly(d0, 0);
}

CycScalar CycScalar::operator-() const {
    CycScalar out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return CycScalar(a.num_ + b.num_, a.den_);
    return CycScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    if (a.is_zero() || b.is_zero()) return CycScalar();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    return CycScalar(a.num_ * b.num_, a.den_ * b.den_);
}

CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw std::domain_error("CycScalar::inverse: division by zero");
    return CycScalar(den_, num_);
}

CycNum CycScalar::evaluate(const Rational& v0) const {
    CycNum d = den_.eval(v0);
    if (d.is_zero()) throw std::domain_error("CycScalar::evaluate: pole at the substitution point");
    return num_.eval(v0) * d.inverse();
}

std::optional<Monomial> CycScalar::as_monomial() const {
    if (!den_.is_one()) return std::nullopt;
    if (num_.terms().size() != 1) return std::nullopt;
    const auto& [e, c] = *num_.terms().begin();
    long k;
    if (!c.as_zeta_power(k)) return std::nullopt;
    return Monomial(static_cast<int>(k), e);
}

long CycScalar::v_order() const {
    if (is_zero()) throw std::domain_error("CycScalar::v_order on zero");
    return num_.min_exp();   // canonical form: den(0) = 1
}

std::string CycScalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

CycScalar q_minus_qinv() {
    return CycScalar::q_power(1) - CycScalar::q_power(-1);
}

// ----------------------------------------------------------------- try_sqrt

namespace {

// Square root of a rational if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rational(0);
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class rn, rd;
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        Rational r(rn);
        r /= Rational(rd);
        return r;
    }
    return std::nullopt;
}

// Square root inside Q(zeta_N) for the shapes that occur here:
// zeta^a * r with r rational, plus (for N divisible by 12) the rational
// multiples of 3 and -1 whose square roots live in the field.
std::optional<CycNum> cyc_sqrt(const CycNum& x) {
    if (x.is_zero()) return CycNum();
    const int n = field().n;
    // zeta^a * rational
    for (int a = 0; a < n; ++a) {
        CycNum unit = CycNum::zeta_power(a);
        CycNum ratio = x * unit.inverse();
        if (!ratio.is_rational()) continue;
        Rational r = ratio.rational_value();
        auto try_with = [&](const Rational& r2, const CycNum& extra) -> std::optional<CycNum> {
            auto s = rational_sqrt(r2);
            if (!s) return std::nullopt;
            // sqrt(zeta^a): a even -> zeta^(a/2); a odd with n even -> zeta^((a+n)/2)
            long half;
            if (a % 2 == 0) half = a / 2;
            else if (n % 2 == 0) half = (a + n) / 2;
            else half = static_cast<long>(a) * ((n + 1) / 2) % n;   // odd n: 2 invertible
            CycNum root = CycNum(*s) * CycNum::zeta_power(half) * extra;
            if (root * root == x) return root;
            return std::nullopt;
        };
        if (auto out = try_with(r, CycNum(1))) return out;
        if (n % 12 == 0) {
            // sqrt(3) = zeta_12 + zeta_12^{-1}, scaled to the ambient order
            int step = n / 12;
            CycNum sqrt3 = CycNum::zeta_power(step) + CycNum::zeta_power(-step);
            if (r != 0) {
                if (auto out = try_with(r / 3, sqrt3)) return out;
                if (auto out = try_with(-r, CycNum::zeta_power(n / 4))) return out;
                if (auto out = try_with(-r / 3, sqrt3 * CycNum::zeta_power(n / 4))) return out;
            }
        }
    }
    return std::nullopt;
}

// Square root of a polynomial over Q(zeta_N) with nonzero constant term.
std::optional<Poly<CycNum>> poly_sqrt(const Poly<CycNum>& p) {
    if (p.is_zero()) return Poly<CycNum>();
    if (p.degree() % 2 != 0) return std::nullopt;
    auto s0 = cyc_sqrt(p.coeff(0));
    if (!s0) return std::nullopt;        // see caller: only certified shapes reach here
    if (s0->is_zero()) return std::nullopt;
    int half = p.degree() / 2;
    std::vector<CycNum> s(half + 1, CycNum());
    s[0] = *s0;
    CycNum inv2s0 = (CycNum(2) * s[0]).inverse();
    for (int k = 1; k <= half; ++k) {
        CycNum acc = p.coeff(k);
        for (int i = 1; i < k; ++i)
            if (i <= half && k - i <= half) acc -= s[i] * s[k - i];
        s[k] = acc * inv2s0;
    }
    Poly<CycNum> cand{std::vector<CycNum>(s.begin(), s.end())};
    if (cand * cand == p) return cand;
    return std::nullopt;
}

}  // namespace

std::optional<CycScalar> try_sqrt(const CycScalar& x) {
    if (x.is_zero()) return CycScalar();
    long e = x.v_order();
    if (e % 2 != 0) return std::nullopt;
    Poly<CycNum> n0 = x.num().shifted(-e).to_poly();
    Poly<CycNum> d0 = x.den().to_poly();
    // A square must have square num and den parts (they are coprime, and the
    // v-power split is even).  The constant term decides existence: given its
    // root the full polynomial root is forced coefficient by coefficient.
    auto s0 = cyc_sqrt(n0.coeff(0));
    if (!s0) {
        // For N divisible by 12 the rational square classes of the field are
        // exactly {r^2, 3r^2, -r^2, -3r^2}, so a miss is a certificate.
        if (n0.coeff(0).is_rational() && field().n % 12 == 0) return std::nullopt;
        throw std::runtime_error("try_sqrt: undecided square root in Q(zeta_N)(v)");
    }
    auto sn = poly_sqrt(n0);
    auto sd = poly_sqrt(d0);   // constant term 1, always decisive
    if (!sn || !sd) return std::nullopt;
    return CycScalar(LaurentPoly::from_poly(*sn, e / 2), LaurentPoly::from_poly(*sd, 0));
}

}  // namespace rank2
