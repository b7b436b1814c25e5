#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rank2 {

using Rational = mpq_class;

/// Parameters of the coefficient field Q(zeta_N)(v), with q = v^D.
///
/// The parameters are process-global: they are fixed once at startup
/// (set_field) and every scalar created afterwards lives in that field.
/// Values created under different parameters must never be mixed.
struct FieldParams {
    int n = 0;           // cyclotomic order N
    int d = 0;           // q = v^D
    int degree = 0;      // phi(N), degree of the N-th cyclotomic polynomial
    std::vector<Rational> cyclo;                    // monic Phi_N, lowest coefficient first, size degree+1
    std::vector<std::vector<Rational>> power_rem;   // x^(degree+k) mod Phi_N, k = 0 .. degree-2
};

const FieldParams& field();
void set_field(int n, int d);

int euler_phi(int n);

/// Monic N-th cyclotomic polynomial over Q, lowest coefficient first.
std::vector<Rational> cyclotomic_polynomial(int n);

/// Element of Q(zeta_N), stored as the reduced residue modulo Phi_N.
class CycNum {
public:
    CycNum();                       // zero
    CycNum(int value);              // rational embedding
    explicit CycNum(const Rational& value);

    static CycNum zeta_power(long k);   // zeta_N^k

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;           // only the constant coordinate is nonzero
    const Rational& rational_value() const;   // valid when is_rational()
    const std::vector<Rational>& coeffs() const { return c_; }

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

    CycNum inverse() const;             // throws std::domain_error on zero
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    bool operator==(const CycNum& o) const { return c_ == o.c_; }
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /// True if this equals zeta^k for some k; reports the exponent.
    bool as_zeta_power(long& k_out) const;

    std::string str() const;

private:
    std::vector<Rational> c_;   // size phi(N), coefficient of zeta^i at index i
    void reduce_from(std::vector<Rational>& raw);   // degree < 2*phi-1 expected
};

}  // namespace rank2
