#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gradiv {

using Rational = mpq_class;

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Stored as a polynomial in zeta_N of degree < phi(N), reduced modulo the
/// N-th cyclotomic polynomial, so equality is coefficient equality.
/// Elements of different conductors are lifted to the lcm automatically.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r) : n_(1), c_(1, r) {}
    explicit Cyclotomic(long v) : n_(1), c_(1, Rational(v)) {}

    /// zeta_N^k
    static Cyclotomic root_of_unity(int n, long k);
    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(Rational(1)); }
    /// the imaginary unit, zeta_4
    static Cyclotomic i() { return root_of_unity(4, 1); }

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Re-express in Q(zeta_M); requires conductor() | M.
    Cyclotomic lifted(int m) const;

    bool is_zero() const;
    bool is_rational() const;
    /// Valid only when is_rational().
    Rational rational_value() const;
    bool is_real() const { return conj() == *this; }

    /// Sign of a real element: exact 0 on zero, otherwise determined
    /// numerically with a separation guard (aborts if |value| < 1e-9).
    int real_sign() const;

    Cyclotomic conj() const;
    Cyclotomic inverse() const;

    std::complex<double> to_complex() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(const Rational& r, Cyclotomic a);

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

private:
    Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    void trim();

    int n_;
    std::vector<Rational> c_;  // size phi(n_), power basis of zeta_n_

    friend struct CycloField;
};

/// phi(n)
int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial (integer, monic, degree phi(n)).
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

}  // namespace gradiv
