#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank2/cyclotomic.hpp"
#include "rank2/polynomial.hpp"

namespace rank2 {

/// Finitely supported Laurent polynomial in v with Q(zeta_N) coefficients.
/// Invariant: no stored zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int constant);
    explicit LaurentPoly(const CycNum& constant);
    static LaurentPoly term(const CycNum& coeff, long v_exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<long, CycNum>& terms() const { return terms_; }
    long min_exp() const;   // requires nonzero
    long max_exp() const;
    void set(long exp, const CycNum& coeff);

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly shifted(long dv) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    CycNum eval(const Rational& v0) const;   // v0 must be nonzero if negative exponents occur
    Poly<CycNum> to_poly() const;            // requires min_exp() >= 0 (or zero)
    static LaurentPoly from_poly(const Poly<CycNum>& p, long shift = 0);

    std::string str() const;

private:
    std::map<long, CycNum> terms_;
};

/// Multiplicative monomial zeta_N^k * v^m, the value group of torus weights.
struct Monomial {
    int zeta_pow = 0;   // normalized to [0, N)
    long v_pow = 0;

    Monomial() = default;
    Monomial(int zeta, long v);
    static Monomial one() { return Monomial(); }
    static Monomial q_power(long k);            // q^k = v^(k*D)
    static Monomial v_power(long m) { return Monomial(0, m); }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial power(long e) const;
    bool is_one() const { return zeta_pow == 0 && v_pow == 0; }
    bool operator==(const Monomial& o) const { return zeta_pow == o.zeta_pow && v_pow == o.v_pow; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    bool operator<(const Monomial& o) const {
        return v_pow != o.v_pow ? v_pow < o.v_pow : zeta_pow < o.zeta_pow;
    }

    std::string str() const;   // "zeta^k * v^m"
};

/// Element of the field Q(zeta_N)(v) as a canonical fraction of Laurent
/// polynomials.  Canonical form: num = v^e * n(v) with n(0) != 0, den a
/// polynomial with den(0) = 1 and gcd(n, den) = 1; zero is 0/1.
class CycScalar {
public:
    CycScalar();                        // zero
    CycScalar(int value);
    explicit CycScalar(const Rational& value);
    explicit CycScalar(const CycNum& value);
    CycScalar(LaurentPoly num, LaurentPoly den);   // canonicalizes

    static CycScalar q_power(long k);   // q^k = v^(kD)
    static CycScalar v_power(long m);
    static CycScalar from_monomial(const Monomial& m);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    CycScalar operator-() const;
    friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b);
    CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
    CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

    CycScalar inverse() const;          // throws std::domain_error on zero

    bool operator==(const CycScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    /// Exact evaluation v -> v0; throws std::domain_error on a pole.
    CycNum evaluate(const Rational& v0) const;

    /// Recognize a pure monomial value.
    std::optional<Monomial> as_monomial() const;

    /// v-adic order of the leading (lowest) term: min_exp(num) - min_exp(den).
    long v_order() const;               // requires nonzero

    std::string str() const;

private:
    LaurentPoly num_, den_;
    void canonicalize();
};

/// q - q^{-1}, the recurring deformation factor.
CycScalar q_minus_qinv();

/// Attempt an exact square root (monomial or polynomial-square cases).
/// Returns nullopt when the value is certified not to be a square of the
/// handled shapes; throws std::runtime_error when undecided.
std::optional<CycScalar> try_sqrt(const CycScalar& x);

}  // namespace rank2
