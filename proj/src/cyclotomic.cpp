#include "gradiv/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gradiv {

int euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// x^n - 1 divided by the product of Phi_d over proper divisors d of n,
// computed by exact integer polynomial division.
std::vector<mpz_class> compute_cyclotomic(int n) {
    if (n == 1) return {mpz_class(-1), mpz_class(1)};  // x - 1
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phi_d = cyclotomic_polynomial(d);
        // num /= phi_d  (exact)
        std::vector<mpz_class> q(num.size() - phi_d.size() + 1, 0);
        std::vector<mpz_class> r = num;
        for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
            q[k] = r[k + phi_d.size() - 1];  // phi_d is monic
            if (q[k] == 0) continue;
            for (size_t j = 0; j < phi_d.size(); ++j) r[k + j] -= q[k] * phi_d[j];
        }
        num = std::move(q);
    }
    return num;
}

struct FieldData {
    std::vector<mpz_class> phi;              // Phi_n
    std::vector<std::vector<Rational>> pows;  // zeta^k reduced, k = 0..n-1
};

const FieldData& field_data(int n) {
    static std::mutex mtx;
    static std::map<int, FieldData*> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto* fd = new FieldData;
    fd->phi = compute_cyclotomic(n);
    const int deg = static_cast<int>(fd->phi.size()) - 1;
    // zeta^k for k < deg is itself; beyond that reduce iteratively:
    // zeta^deg = -(phi[0] + phi[1] zeta + ... + phi[deg-1] zeta^{deg-1})
    fd->pows.resize(n);
    for (int k = 0; k < n; ++k) {
        std::vector<Rational>& v = fd->pows[k];
        v.assign(deg, Rational(0));
        if (k < deg) {
            v[k] = 1;
        } else {
            const std::vector<Rational>& prev = fd->pows[k - 1];
            // multiply prev by zeta
            std::vector<Rational> shifted(deg + 1, Rational(0));
            for (int j = 0; j < deg; ++j) shifted[j + 1] = prev[j];
            Rational top = shifted[deg];
            for (int j = 0; j < deg; ++j) v[j] = shifted[j] - top * Rational(fd->phi[j]);
        }
    }
    cache[n] = fd;
    return *fd;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
    static std::mutex mtx;
    static std::map<int, std::vector<mpz_class>*> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto* p = new std::vector<mpz_class>(compute_cyclotomic(n));
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(n, p);
    if (!inserted) delete p;
    return *it->second;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
    long kk = ((k % n) + n) % n;
    // reduce the conductor: zeta_n^k has order n/gcd(n,k)
    long g = std::gcd(static_cast<long>(n), kk == 0 ? static_cast<long>(n) : kk);
    int n2 = static_cast<int>(n / g);
    long k2 = kk / g;
    const FieldData& fd = field_data(n2);
    return Cyclotomic(n2, fd.pows[static_cast<size_t>(k2)]);
}

Cyclotomic Cyclotomic::lifted(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("lifted: conductor must divide target");
    const FieldData& fd = field_data(m);
    const int step = m / n_;
    std::vector<Rational> out(fd.phi.size() - 1, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const auto& pw = fd.pows[(k * step) % m];
        for (size_t j = 0; j < out.size(); ++j) out[j] += c_[k] * pw[j];
    }
    return Cyclotomic(m, std::move(out));
}

void Cyclotomic::trim() {
    // shrink the conductor when the element happens to be rational
    if (n_ != 1 && is_rational()) {
        Rational r = c_[0];
        n_ = 1;
        c_.assign(1, r);
    }
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("rational_value: element not rational");
    return c_[0];
}

int Cyclotomic::real_sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(c_[0]);
    if (!is_real()) throw std::domain_error("real_sign: element not real");
    long double v = 0.0L;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        v += static_cast<long double>(c_[k].get_d()) *
             cosl(2.0L * 3.14159265358979323846264338327950288L * static_cast<long double>(k) /
                  static_cast<long double>(n_));
    }
    if (fabsl(v) < 1e-9L)
        throw std::runtime_error("real_sign: value too close to zero for the numeric guard");
    return v > 0 ? 1 : -1;
}

Cyclotomic Cyclotomic::conj() const {
    const FieldData& fd = field_data(n_);
    std::vector<Rational> out(c_.size(), Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const auto& pw = fd.pows[(n_ - static_cast<int>(k)) % n_];
        for (size_t j = 0; j < out.size(); ++j) out[j] += c_[k] * pw[j];
    }
    Cyclotomic r(n_, std::move(out));
    r.trim();
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
    // extended Euclid for gcd(a, Phi_n) = 1 in Q[x]
    const auto& phi_int = field_data(n_).phi;
    std::vector<Rational> r0(phi_int.size());
    for (size_t j = 0; j < phi_int.size(); ++j) r0[j] = Rational(phi_int[j]);
    std::vector<Rational> r1 = c_;
    auto deg = [](const std::vector<Rational>& p) {
        for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
            if (p[d] != 0) return d;
        return -1;
    };
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients of a
    while (true) {
        int d1 = deg(r1);
        if (d1 < 0) throw std::runtime_error("inverse: element not invertible");
        if (d1 == 0) break;
        int d0 = deg(r0);
        // r0 = q*r1 + r ; update (r0,s0) <- (r1,s1), (r1,s1) <- (r, s0 - q*s1)
        std::vector<Rational> q(std::max(0, d0 - d1 + 1), Rational(0));
        std::vector<Rational> rem = r0;
        for (int k = d0 - d1; k >= 0; --k) {
            Rational f = rem[k + d1] / r1[d1];
            q[k] = f;
            if (f == 0) continue;
            for (int j = 0; j <= d1; ++j) rem[k + j] -= f * r1[j];
        }
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t j = 0; j < s0.size(); ++j) s2[j] = s0[j];
        for (size_t a = 0; a < q.size(); ++a) {
            if (q[a] == 0) continue;
            for (size_t b = 0; b < s1.size(); ++b) s2[a + b] -= q[a] * s1[b];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is the nonzero constant gcd; inverse = s1 / r1[0], reduced mod Phi
    Rational lead = r1[0];
    const FieldData& fd = field_data(n_);
    const size_t degn = fd.phi.size() - 1;
    std::vector<Rational> out(degn, Rational(0));
    for (size_t k = 0; k < s1.size(); ++k) {
        if (s1[k] == 0) continue;
        const auto& pw = fd.pows[k % n_];
        // s1 may have degree >= degn only transiently; k < degn holds after reduction,
        // but guard via the power table anyway (x^n = 1 in the quotient only via pows).
        if (k < degn) {
            out[k] += s1[k] / lead;
        } else {
            for (size_t j = 0; j < degn; ++j) out[j] += (s1[k] / lead) * pw[j];
        }
    }
    Cyclotomic r(n_, std::move(out));
    r.trim();
    return r;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> v(0.0, 0.0);
    const double tau = 6.283185307179586476925286766559;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        double ang = tau * static_cast<double>(k) / static_cast<double>(n_);
        v += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return v;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (n_ != o.n_) {
        int m = std::lcm(n_, o.n_);
        *this = lifted(m);
        return *this += o.lifted(m);
    }
    for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (n_ != o.n_) {
        int m = std::lcm(n_, o.n_);
        *this = lifted(m);
        return *this -= o.lifted(m);
    }
    for (size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (n_ != o.n_) {
        int m = std::lcm(n_, o.n_);
        *this = lifted(m);
        return *this *= o.lifted(m);
    }
    if (n_ == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    const FieldData& fd = field_data(n_);
    const size_t deg = c_.size();
    std::vector<Rational> prod(2 * deg - 1, Rational(0));
    for (size_t a = 0; a < deg; ++a) {
        if (c_[a] == 0) continue;
        for (size_t b = 0; b < deg; ++b) {
            if (o.c_[b] == 0) continue;
            prod[a + b] += c_[a] * o.c_[b];
        }
    }
    std::vector<Rational> out(deg, Rational(0));
    for (size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        if (k < deg) {
            out[k] += prod[k];
        } else {
            const auto& pw = fd.pows[k % n_];
            // k can exceed n_-1 only if deg > n_/2; pows indexed mod n works since zeta^n=1
            for (size_t j = 0; j < deg; ++j) out[j] += prod[k] * pw[j];
        }
    }
    c_ = std::move(out);
    trim();
    return *this;
}

Cyclotomic operator*(const Rational& r, Cyclotomic a) {
    for (auto& x : a.c_) x *= r;
    return a;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    int m = std::lcm(a.n_, b.n_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) {
    if (z.is_zero()) return os << "0";
    bool first = true;
    for (size_t k = 0; k < z.c_.size(); ++k) {
        if (z.c_[k] == 0) continue;
        if (!first) os << (z.c_[k] > 0 ? "+" : "");
        first = false;
        if (k == 0) {
            os << z.c_[k];
        } else {
            if (z.c_[k] == -1)
                os << "-";
            else if (z.c_[k] != 1)
                os << z.c_[k] << "*";
            os << "z" << z.n_;
            if (k > 1) os << "^" << k;
        }
    }
    return os;
}

}  // namespace gradiv
