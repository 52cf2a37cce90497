#include "gradim/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gradim {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

unsigned gcd_u(unsigned a, unsigned b) {
    while (b) {
        unsigned t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / gcd_u(a, b) * b; }

}  // namespace

const CyclotomicField* CyclotomicField::get(unsigned m) {
    static std::map<unsigned, std::unique_ptr<CyclotomicField>> registry;
    static std::mutex mu;
    if (m == 0) throw Error("cyclotomic field of order 0");
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(m);
    if (it == registry.end())
        it = registry.emplace(m, std::unique_ptr<CyclotomicField>(new CyclotomicField(m))).first;
    return it->second.get();
}

CyclotomicField::CyclotomicField(unsigned m)
    : m_(m), deg_(euler_phi(m)), phi_(cyclotomic_polynomial(m)) {
    // x^deg == -(phi minus the leading term); iterate x^(k+1) = x * x^k.
    std::vector<Rational> base(deg_);
    for (unsigned i = 0; i < deg_; ++i) base[i] = -phi_.coeff(i);
    high_powers_.push_back(base);
    for (unsigned k = deg_ + 1; k + 1 <= 2 * deg_; ++k) {
        const auto& prev = high_powers_.back();
        std::vector<Rational> next(deg_, Rational(0));
        for (unsigned i = 0; i + 1 < deg_; ++i) next[i + 1] = prev[i];
        const Rational& top = prev[deg_ - 1];
        if (top != 0)
            for (unsigned i = 0; i < deg_; ++i) next[i] += top * base[i];
        high_powers_.push_back(std::move(next));
    }
}

std::vector<Rational> CyclotomicField::reduce(const std::vector<Rational>& raw) const {
    std::vector<Rational> v(raw);
    if (v.size() > 2 * deg_ - 1 + 1) {
        UniPoly rem = UniPoly(std::move(v)).divmod(phi_).rem;
        v = rem.coeffs();
    } else {
        for (int k = static_cast<int>(v.size()) - 1; k >= static_cast<int>(deg_); --k) {
            if (v[k] == 0) continue;
            Rational c = std::move(v[k]);
            v[k] = 0;
            const auto& sub = high_powers_[k - deg_];
            for (unsigned i = 0; i < deg_; ++i) v[i] += c * sub[i];
        }
        v.resize(deg_);
    }
    v.resize(deg_, Rational(0));
    return v;
}

Cyclo::Cyclo(const Rational& q) : field_(CyclotomicField::get(1)), c_{q} {}

Cyclo::Cyclo(unsigned m, std::vector<Rational> coeffs) : field_(CyclotomicField::get(m)) {
    c_ = field_->reduce(coeffs);
}

Cyclo Cyclo::zeta(unsigned m) { return zeta_power(m, 1); }

Cyclo Cyclo::zeta_power(unsigned m, long long k) {
    if (m == 0) throw Error("root of unity of order 0");
    long long r = k % static_cast<long long>(m);
    if (r < 0) r += m;
    std::vector<Rational> raw(static_cast<std::size_t>(r) + 1, Rational(0));
    raw[static_cast<std::size_t>(r)] = 1;
    return Cyclo(m, std::move(raw));
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclo::as_rational() const {
    if (!is_rational()) throw Error("cyclotomic element is not rational: " + str());
    return c_[0];
}

Cyclo Cyclo::embedded(unsigned m) const {
    unsigned d = order();
    if (m % d != 0) throw MixedFieldError("cannot embed Q(zeta_" + std::to_string(d) +
                                          ") into Q(zeta_" + std::to_string(m) + ")");
    if (m == d) return *this;
    unsigned stride = m / d;
    std::vector<Rational> raw((c_.size() - 1) * stride + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) raw[i * stride] = c_[i];
    return Cyclo(m, std::move(raw));
}

std::pair<Cyclo, Cyclo> Cyclo::aligned(const Cyclo& a, const Cyclo& b) {
    if (a.field_ == b.field_) return {a, b};
    unsigned l = lcm_u(a.order(), b.order());
    return {a.embedded(l), b.embedded(l)};
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    auto [a, b] = aligned(*this, o);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    auto [a, b] = aligned(*this, o);
    std::vector<Rational> conv(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) conv[i + j] += a.c_[i] * b.c_[j];
    }
    return Cyclo(a.order(), std::move(conv));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    if (is_rational()) {
        Cyclo r = *this;
        r.c_[0] = Rational(1) / c_[0];
        for (std::size_t i = 1; i < r.c_.size(); ++i) r.c_[i] = 0;
        return r;
    }
    // Extended Euclid against the irreducible modulus: s * this == 1 mod Phi.
    ExtendedGcd eg = unipoly_xgcd(UniPoly(c_), field_->modulus());
    if (eg.g.degree() != 0) throw Error("cyclotomic inverse failed: gcd not constant");
    std::vector<Rational> s = eg.s.coeffs();
    return Cyclo(order(), std::move(s));
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

Cyclo Cyclo::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo acc(Rational(1));
    Cyclo base = *this;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool Cyclo::operator==(const Cyclo& o) const {
    auto [a, b] = aligned(*this, o);
    return a.c_ == b.c_;
}

std::complex<double> Cyclo::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    double m = static_cast<double>(order());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double theta = kTau * static_cast<double>(i) / m;
        acc += rational_to_double(c_[i]) * std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return acc;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << rational_to_string(c_[i]);
    }
    os << "]@zeta_" << order();
    return os.str();
}

Cyclo Cyclo::from_string(std::string_view s) {
    auto at = s.rfind("@zeta_");
    if (at == std::string_view::npos || s.empty() || s.front() != '[')
        throw Error("malformed cyclotomic literal: " + std::string(s));
    auto close = s.rfind(']', at);
    if (close == std::string_view::npos) throw Error("malformed cyclotomic literal: " + std::string(s));
    unsigned m = 0;
    for (std::size_t i = at + 6; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error("malformed cyclotomic order: " + std::string(s));
        m = m * 10 + static_cast<unsigned>(s[i] - '0');
    }
    if (m == 0) throw Error("cyclotomic order must be positive");
    std::vector<Rational> coeffs;
    std::string_view body = s.substr(1, close - 1);
    std::size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
        auto comma = body.find(',', pos);
        std::string_view piece =
            comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
        coeffs.push_back(rational_from_string(piece));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (coeffs.empty()) coeffs.push_back(Rational(0));
    return Cyclo(m, std::move(coeffs));
}

namespace {

// Legendre symbol (k | p) for an odd prime p, via Euler's criterion.
int legendre(unsigned long long k, unsigned long long p) {
    k %= p;
    if (k == 0) return 0;
    unsigned long long e = (p - 1) / 2, acc = 1, b = k;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc == 1 ? 1 : -1;
}

}  // namespace

std::optional<Cyclo> cyclo_sqrt_squarefree_int(const BigInt& d, unsigned m) {
    if (d == 0) return Cyclo(Rational(0));
    if (d == 1) return Cyclo(Rational(1));
    // Conductor of Q(sqrt d): |d| when d = 1 mod 4, else 4|d|.
    BigInt ad = abs(d);
    BigInt dm4 = ((d % 4) + 4) % 4;
    BigInt cond = (dm4 == 1) ? ad : 4 * ad;
    if (BigInt(m) % cond != 0) return std::nullopt;

    // Factor |d| (squarefree by contract, so plain trial division is cheap).
    std::vector<unsigned long long> primes;
    BigInt w = ad;
    for (BigInt p = 2; p * p <= w; ++p) {
        if (w % p == 0) {
            primes.push_back(p.convert_to<unsigned long long>());
            w /= p;
        }
    }
    if (w > 1) primes.push_back(w.convert_to<unsigned long long>());

    // Assemble from quadratic Gauss sums: for an odd prime p the sum
    // g_p = sum_k (k|p) zeta_p^k satisfies g_p^2 = (-1)^((p-1)/2) p, and
    // zeta_8 + zeta_8^-1, zeta_8 - zeta_8^-1 square to 2 and -2.
    Cyclo y(Rational(1));
    for (unsigned long long p : primes) {
        if (p == 2) {
            Cyclo z8 = Cyclo::zeta(8).embedded(m);
            y *= z8 + z8.pow(7);
        } else {
            Cyclo g(Rational(0));
            for (unsigned long long k = 1; k < p; ++k)
                g += Cyclo(Rational(legendre(k, p))) * Cyclo::zeta_power(static_cast<unsigned>(p),
                                                                         static_cast<long long>(k))
                                                          .embedded(m);
            y *= g;
        }
    }
    Cyclo target{Rational(d)};
    if (y * y == target) return y;
    if (m % 4 == 0) {
        Cyclo iy = Cyclo::zeta_power(4, 1).embedded(m) * y;
        if (iy * iy == target) return iy;
    }
    return std::nullopt;
}

namespace {

// sqrt of a rational q viewed inside Q(zeta_m). Exact in both directions as
// long as the squarefree splitting certifies itself.
std::optional<Cyclo> sqrt_rational_in(const Rational& q, unsigned m) {
    if (auto r = rational_sqrt(q)) return Cyclo(*r);
    BigInt w = numerator(q) * denominator(q);
    SquarefreeSplit sp = squarefree_split(w);
    if (!sp.complete) return std::nullopt;
    auto surd = cyclo_sqrt_squarefree_int(sp.radicand, m);
    if (!surd) return std::nullopt;
    return Cyclo(Rational(sp.root, denominator(q))) * *surd;
}

}  // namespace

std::optional<Cyclo> cyclo_sqrt(const Cyclo& a, unsigned ambient_order) {
    if (a.is_zero()) return Cyclo(Rational(0));
    unsigned m = lcm_u(a.order(), std::max(1u, ambient_order));
    if (a.is_rational()) return sqrt_rational_in(a.as_rational(), m);

    // Rational multiple of a root of unity: peel the unit part off.
    Cyclo av = a.embedded(m);
    for (unsigned j = 1; j < m; ++j) {
        Cyclo peeled = av * Cyclo::zeta_power(m, -static_cast<long long>(j));
        if (!peeled.is_rational()) continue;
        Rational q = peeled.as_rational();
        std::vector<Cyclo> unit_roots;
        if (j % 2 == 0) unit_roots.push_back(Cyclo::zeta_power(m, j / 2));
        if ((j + m) % 2 == 0) unit_roots.push_back(Cyclo::zeta_power(m, (j + m) / 2));
        if (auto s = sqrt_rational_in(q, m)) {
            for (const Cyclo& rc : unit_roots) {
                Cyclo y = *s * rc;
                if (y * y == av) return y;
                if (m % 4 == 0) {
                    Cyclo iy = Cyclo::zeta_power(4, 1).embedded(m) * y;
                    if (iy * iy == av) return iy;
                }
            }
        }
        break;
    }
    return std::nullopt;
}

}  // namespace gradim
