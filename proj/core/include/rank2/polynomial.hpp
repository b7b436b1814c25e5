#pragma once

#include <stdexcept>
#include <vector>

namespace rank2 {

/// Dense univariate polynomial over a field, lowest coefficient first.
/// F needs: default ctor (= 0), + - *, inverse(), is_zero(), ==.
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(F constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(int degree, F coeff) {
        Poly p;
        if (coeff.is_zero()) return p;
        p.c_.assign(degree + 1, F());
        p.c_[degree] = std::move(coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }   // -1 for zero
    const std::vector<F>& coeffs() const { return c_; }
    const F& leading() const { return c_.back(); }
    F coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : F(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(r));
    }
    Poly scaled(const F& s) const {
        std::vector<F> r(c_.size(), F());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return Poly(std::move(r));
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    F eval(const F& x) const {
        F acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Quotient and remainder; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q_out, Poly& r_out) {
        if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero");
        std::vector<F> rem = a.c_;
        std::vector<F> q;
        if (rem.size() >= b.c_.size()) {
            q.assign(rem.size() - b.c_.size() + 1, F());
            F lead_inv = b.leading().inverse();
            for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
                F c = rem[k + b.c_.size() - 1] * lead_inv;
                q[k] = c;
                if (c.is_zero()) continue;
                for (size_t j = 0; j < b.c_.size(); ++j)
                    rem[k + j] = rem[k + j] - c * b.c_[j];
            }
        }
        q_out = Poly(std::move(q));
        r_out = Poly(std::move(rem));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inverse());
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> r(c_.size() - 1, F());
        for (size_t i = 1; i < c_.size(); ++i) {
            F k;
            for (size_t j = 0; j < i; ++j) k = k + F(1);   // i as a field element
            r[i - 1] = c_[i] * k;
        }
        return Poly(std::move(r));
    }

    /// Monic gcd via Euclid; gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = r.monic();   // normalize each step to keep coefficients tame
        }
        return a.monic();
    }

private:
    std::vector<F> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

}  // namespace rank2
