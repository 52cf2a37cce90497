#include "gradim/unipoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace gradim {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(int degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::x_pow_minus_one(int n) {
    std::vector<Rational> v(n + 1, Rational(0));
    v[0] = -1;
    v[n] = 1;
    return UniPoly(std::move(v));
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

UniPoly::DivMod UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    std::vector<Rational> rem(c_);
    int dd = divisor.degree();
    int qd = degree() - dd;
    if (qd < 0) return {UniPoly(), *this};
    std::vector<Rational> quot(qd + 1, Rational(0));
    const Rational& lead = divisor.leading();
    for (int k = qd; k >= 0; --k) {
        Rational f = rem[k + dd] / lead;
        if (f == 0) continue;
        quot[k] = f;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= f * divisor.c_[i];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::div_exact(const UniPoly& divisor) const {
    DivMod d = divmod(divisor);
    if (!d.rem.is_zero()) throw Error("inexact polynomial division");
    return d.quot;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return scaled(Rational(1) / leading());
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = c_[i];
        if (c == 0) continue;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0 && i > 0 && abs(numerator(c)) == denominator(c)) {
            os << "-";
            c = -c;
        }
        first = false;
        bool unit = (c == 1);
        if (i == 0 || !unit) os << rational_to_string(c);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd unipoly_xgcd(UniPoly a, UniPoly b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto dm = r0.divmod(r1);
        UniPoly r2 = dm.rem;
        UniPoly s2 = s0 - dm.quot * s1;
        UniPoly t2 = t0 - dm.quot * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {UniPoly(), UniPoly(), UniPoly()};
    Rational inv_lead = Rational(1) / r0.leading();
    return {r0.scaled(inv_lead), s0.scaled(inv_lead), t0.scaled(inv_lead)};
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const UniPoly& cyclotomic_polynomial(unsigned m) {
    static std::map<unsigned, UniPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (m == 0) throw Error("cyclotomic polynomial of order 0");
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, filled in bottom-up so
    // the recursion never re-enters the lock.
    std::vector<unsigned> pending{m};
    while (!pending.empty()) {
        unsigned k = pending.back();
        if (cache.count(k)) {
            pending.pop_back();
            continue;
        }
        bool ready = true;
        for (unsigned d = 1; d < k; ++d) {
            if (k % d == 0 && !cache.count(d)) {
                pending.push_back(d);
                ready = false;
            }
        }
        if (!ready) continue;
        UniPoly num = UniPoly::x_pow_minus_one(k);
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0) num = num.div_exact(cache.at(d));
        cache.emplace(k, std::move(num));
        pending.pop_back();
    }
    return cache.at(m);
}

}  // namespace gradim
