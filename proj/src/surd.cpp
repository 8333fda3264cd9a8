#include "pingpong/surd.hpp"

#include <cmath>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pp {

namespace {

constexpr std::uint32_t kSieveLimit = 2000000;

const std::vector<std::uint32_t>& primes() {
    static std::vector<std::uint32_t> ps;
    static std::once_flag once;
    std::call_once(once, [] {
        std::vector<bool> comp(kSieveLimit + 1, false);
        for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
            if (comp[i]) continue;
            ps.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kSieveLimit; j += i) comp[j] = true;
        }
    });
    return ps;
}

int sgn(const mpq_class& q) { return sgn(q.get_num()); }

} // namespace

std::pair<mpz_class, mpz_class> squarefree_split(const mpz_class& n) {
    if (n < 0) throw std::domain_error("squarefree_split: negative input");
    if (n == 0) return {0, 0};
    mpz_class m = n, k = 1, r = 1;
    for (std::uint32_t p : primes()) {
        mpz_class pp2 = mpz_class(p) * p;
        if (pp2 * p > m) {
            // m has no prime factor below p, so at most two prime factors remain.
            break;
        }
        if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) k *= p;
        if (e % 2) r *= p;
    }
    if (m == 1) return {k, r};
    mpz_class lim = mpz_class(kSieveLimit);
    bool small_enough = m < lim * lim * lim;
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
        if (small_enough || mpz_probab_prime_p(s.get_mpz_t(), 30)) return {k * s, r};
        auto [k2, r2] = squarefree_split(s);
        if (r2 != 1) throw std::domain_error("squarefree_split: radicand too large to factor");
        return {k * s, r};
    }
    if (small_enough || mpz_probab_prime_p(m.get_mpz_t(), 30)) return {k, r * m};
    throw std::domain_error("squarefree_split: radicand too large to factor");
}

bool is_squarefree(const mpz_class& n) {
    if (n <= 0) return false;
    return squarefree_split(n).first == 1;
}

Surd::Surd(const mpq_class& a, const mpq_class& b, const mpz_class& d) : a_(a), b_(b), d_(d) {
    if (d < 0) throw std::domain_error("Surd: negative radicand");
    a_.canonicalize();
    b_.canonicalize();
    canon();
}

void Surd::canon() {
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
        return;
    }
    auto [k, r] = squarefree_split(d_);
    b_ *= k;
    d_ = r;
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
}

mpz_class Surd::common_radicand(const Surd& x, const Surd& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw std::domain_error("Surd: arithmetic across different radicands");
}

int Surd::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    mpq_class lhs = a_ * a_, rhs = b_ * b_ * d_;
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

Surd Surd::conj() const {
    Surd r = *this;
    r.b_ = -r.b_;
    return r;
}

Surd Surd::operator-() const {
    Surd r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Surd operator+(const Surd& x, const Surd& y) {
    mpz_class d = Surd::common_radicand(x, y);
    return Surd(x.a_ + y.a_, x.b_ + y.b_, d);
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
    mpz_class d = Surd::common_radicand(x, y);
    mpq_class a = x.a_ * y.a_ + x.b_ * y.b_ * d;
    mpq_class b = x.a_ * y.b_ + x.b_ * y.a_;
    return Surd(a, b, d);
}

Surd operator/(const Surd& x, const Surd& y) {
    mpz_class d = Surd::common_radicand(x, y);
    mpq_class n = y.a_ * y.a_ - y.b_ * y.b_ * d;
    if (n == 0) throw std::domain_error("Surd: division by zero");
    Surd t = x * y.conj();
    return Surd(t.a_ / n, t.b_ / n, d);
}

double Surd::approx() const {
    return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::string Surd::str() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_.get_str();
        return os.str();
    }
    if (a_ != 0) os << a_.get_str() << (b_ > 0 ? "+" : "-");
    else if (b_ < 0) os << "-";
    mpq_class ab = abs(b_);
    if (ab != 1) os << ab.get_str() << "*";
    os << "sqrt(" << d_.get_str() << ")";
    return os.str();
}

int surd_sign(const Surd& x) { return x.sign(); }

int compare(const Surd& x, const Surd& y) {
    if (x.d() == 0 || y.d() == 0 || x.d() == y.d()) return (x - y).sign();
    // A + B*sqrt(d1) + C*sqrt(d2)
    mpq_class A = x.a() - y.a();
    Surd first(A, x.b(), x.d());
    int s1 = first.sign();
    int s2 = -sgn(y.b());
    if (s1 == 0) return s2;
    if (s1 == s2) return s1;
    // Signs differ: compare squared magnitudes.
    mpq_class C = y.b();
    Surd diff(A * A + x.b() * x.b() * x.d() - C * C * y.d(), 2 * A * x.b(), x.d());
    int t = diff.sign();
    return t > 0 ? s1 : (t < 0 ? s2 : 0);
}

} // namespace pp
