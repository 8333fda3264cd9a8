#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace pp {

// a + b*sqrt(d) with a, b rational and d a square-free non-negative integer.
// Canonical: b == 0 implies d == 0, and d is never 1.
class Surd {
public:
    Surd() = default;
    Surd(long v) : a_(v) {}
    Surd(const mpz_class& v) : a_(v) {}
    Surd(const mpq_class& v) : a_(v) { a_.canonicalize(); }
    // d may carry square factors; they are moved into b.
    Surd(const mpq_class& a, const mpq_class& b, const mpz_class& d);

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    const mpz_class& d() const { return d_; }
    bool rational() const { return d_ == 0; }

    int sign() const;
    Surd conj() const;

    Surd operator-() const;
    friend Surd operator+(const Surd& x, const Surd& y);
    friend Surd operator-(const Surd& x, const Surd& y);
    friend Surd operator*(const Surd& x, const Surd& y);
    friend Surd operator/(const Surd& x, const Surd& y);

    bool operator==(const Surd& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
    bool operator!=(const Surd& o) const { return !(*this == o); }

    double approx() const;
    std::string str() const;

private:
    mpq_class a_{0}, b_{0};
    mpz_class d_{0};
    void canon();
    static mpz_class common_radicand(const Surd& x, const Surd& y);
};

int surd_sign(const Surd& x);
// Exact sign of x - y; radicands may differ.
int compare(const Surd& x, const Surd& y);

// n = k^2 * r with r square-free. Throws std::domain_error when n is too large to factor.
std::pair<mpz_class, mpz_class> squarefree_split(const mpz_class& n);
bool is_squarefree(const mpz_class& n);

} // namespace pp
