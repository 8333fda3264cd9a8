#include "pingpong/moebius.hpp"

#include <sstream>

namespace pp {

MoebiusMap::MoebiusMap(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (det() <= 0) throw std::invalid_argument("MoebiusMap: determinant must be positive");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d_.get_mpz_t());
    const mpz_class& lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
    if (lead < 0) g = -g;
    a_ /= g;
    b_ /= g;
    c_ /= g;
    d_ /= g;
}

MoebiusMap operator*(const MoebiusMap& x, const MoebiusMap& y) {
    return MoebiusMap(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                      x.c_ * y.b_ + x.d_ * y.d_);
}

std::string MoebiusMap::str() const {
    std::ostringstream os;
    os << "[[" << a_.get_str() << "," << b_.get_str() << "],[" << c_.get_str() << "," << d_.get_str() << "]]";
    return os.str();
}

MoebiusMap power(const MoebiusMap& g, long n) {
    MoebiusMap base = n < 0 ? g.inverse() : g, r;
    unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

CirclePoint apply(const MoebiusMap& g, const CirclePoint& x) {
    if (x.is_inf()) {
        if (g.c() == 0) return CirclePoint::infinity();
        return CirclePoint(Surd(mpq_class(g.a(), g.c())));
    }
    const Surd& v = x.value();
    Surd den = Surd(g.c()) * v + Surd(g.d());
    if (den.sign() == 0) return CirclePoint::infinity();
    return CirclePoint((Surd(g.a()) * v + Surd(g.b())) / den);
}

const char* to_string(MapClass c) {
    switch (c) {
    case MapClass::Identity: return "Identity";
    case MapClass::Elliptic: return "Elliptic";
    case MapClass::Parabolic: return "Parabolic";
    case MapClass::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

MapClass classify(const MoebiusMap& g) {
    if (g.is_identity()) return MapClass::Identity;
    mpz_class t = g.trace();
    int s = sgn(mpz_class(t * t - 4 * g.det()));
    return s > 0 ? MapClass::Hyperbolic : (s == 0 ? MapClass::Parabolic : MapClass::Elliptic);
}

FixedPair fixed_pair(const MoebiusMap& g) {
    if (classify(g) != MapClass::Hyperbolic) throw NotHyperbolic("fixed_pair: " + g.str() + " is not hyperbolic");
    const mpz_class &a = g.a(), &b = g.b(), &c = g.c(), &d = g.d();
    if (c == 0) {
        CirclePoint finite(Surd(mpq_class(b, d - a)));
        // derivative at infinity is d/a
        if (a > d) return {CirclePoint::infinity(), finite};
        return {finite, CirclePoint::infinity()};
    }
    mpz_class disc = (a - d) * (a - d) + 4 * b * c;
    mpq_class base(a - d, 2 * c), coef(1, 2 * c);
    base.canonicalize();
    coef.canonicalize();
    Surd plus(base, coef, disc), minus(base, -coef, disc);
    // derivative det/(cx+d)^2 < 1  iff  (cx+d)^2 > det
    Surd w = Surd(c) * plus + Surd(d);
    bool plus_attracting = compare(w * w, Surd(g.det())) > 0;
    if (plus_attracting) return {CirclePoint(plus), CirclePoint(minus)};
    return {CirclePoint(minus), CirclePoint(plus)};
}

MoebiusMap commutator(const MoebiusMap& g, const MoebiusMap& h) { return g * h * g.inverse() * h.inverse(); }

bool shares_fixed_point(const MoebiusMap& g, const MoebiusMap& h) {
    // Raw adjugate product keeps the sign: tr / (det g det h) == 2 exactly.
    auto mul = [](const mpz_class* x, const mpz_class* y, mpz_class* out) {
        mpz_class r0 = x[0] * y[0] + x[1] * y[2], r1 = x[0] * y[1] + x[1] * y[3];
        mpz_class r2 = x[2] * y[0] + x[3] * y[2], r3 = x[2] * y[1] + x[3] * y[3];
        out[0] = r0, out[1] = r1, out[2] = r2, out[3] = r3;
    };
    mpz_class G[4] = {g.a(), g.b(), g.c(), g.d()}, H[4] = {h.a(), h.b(), h.c(), h.d()};
    mpz_class Gi[4] = {g.d(), -g.b(), -g.c(), g.a()}, Hi[4] = {h.d(), -h.b(), -h.c(), h.a()};
    mpz_class m[4];
    mul(G, H, m);
    mul(m, Gi, m);
    mul(m, Hi, m);
    return m[0] + m[3] == 2 * g.det() * h.det();
}

bool commutes(const MoebiusMap& g, const MoebiusMap& h) { return g * h == h * g; }

} // namespace pp
