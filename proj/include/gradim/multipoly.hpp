#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "gradim/scalar.hpp"

namespace gradim {

/// Commuting indeterminate y_{ij}^{(r)}: entry (i, j) of the r-th generic
/// matrix. Variables are ordered by (r, i, j).
struct VarKey {
    int r = 0;
    int i = 0;
    int j = 0;
    auto operator<=>(const VarKey&) const = default;
};

/// Sparse multivariate polynomial in the y variables, coefficients in S.
/// Terms are kept in descending graded-lex order (total degree first, ties by
/// the exponent sequence over the variable order above).
template <Scalar S = Rational>
class MultiPoly {
  public:
    /// Exponent vector, sorted by variable; exponents are positive.
    using Mono = std::vector<std::pair<VarKey, int>>;

    MultiPoly() = default;
    explicit MultiPoly(const S& c) {
        if (!scalar_traits<S>::is_zero(c)) terms_.push_back({Mono{}, c});
    }
    static MultiPoly variable(const VarKey& v) {
        MultiPoly p;
        p.terms_.push_back({Mono{{v, 1}}, scalar_traits<S>::one()});
        return p;
    }
    static MultiPoly constant(const S& c) { return MultiPoly(c); }

    struct Term {
        Mono mono;
        S coeff;
    };

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
    }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_.front();
    }
    int total_degree() const {
        return terms_.empty() ? -1 : mono_degree(terms_.front().mono);
    }

    MultiPoly operator+(const MultiPoly& o) const { return merged(o, false); }
    MultiPoly operator-(const MultiPoly& o) const { return merged(o, true); }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly out;
        for (const Term& x : terms_)
            for (const Term& y : o.terms_) {
                S c = x.coeff * y.coeff;
                if (scalar_traits<S>::is_zero(c)) continue;
                out.add_term(mono_mul(x.mono, y.mono), c);
            }
        return out;
    }
    MultiPoly scaled(const S& c) const {
        MultiPoly out;
        if (scalar_traits<S>::is_zero(c)) return out;
        out.terms_ = terms_;
        for (auto& t : out.terms_) t.coeff = t.coeff * c;
        return out;
    }
    bool operator==(const MultiPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t k = 0; k < terms_.size(); ++k) {
            if (terms_[k].mono != o.terms_[k].mono) return false;
            if (!scalar_traits<S>::equal(terms_[k].coeff, o.terms_[k].coeff)) return false;
        }
        return true;
    }

    /// Inserts c * mono, combining with an existing term if present.
    void add_term(Mono mono, S c) {
        if (scalar_traits<S>::is_zero(c)) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                                   [](const Term& t, const Mono& m) { return mono_less(m, t.mono); });
        if (it != terms_.end() && it->mono == mono) {
            it->coeff = it->coeff + c;
            if (scalar_traits<S>::is_zero(it->coeff)) terms_.erase(it);
        } else {
            terms_.insert(it, Term{std::move(mono), std::move(c)});
        }
    }

    /// All variables occurring, in increasing order.
    std::vector<VarKey> variables() const {
        std::vector<VarKey> vs;
        for (const Term& t : terms_)
            for (const auto& [v, e] : t.mono) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    int degree_in(const VarKey& v) const {
        int d = 0;
        for (const Term& t : terms_)
            for (const auto& [w, e] : t.mono)
                if (w == v) d = std::max(d, e);
        return d;
    }

    /// Substitutes a scalar for one variable.
    MultiPoly substituted(const VarKey& v, const S& value) const {
        MultiPoly out;
        for (const Term& t : terms_) {
            S c = t.coeff;
            Mono m;
            for (const auto& [w, e] : t.mono) {
                if (w == v)
                    c = c * scalar_pow(value, e);
                else
                    m.push_back({w, e});
            }
            if (!scalar_traits<S>::is_zero(c)) out.add_term(std::move(m), c);
        }
        return out;
    }

    /// Full evaluation; missing variables default to zero.
    S eval(const std::map<VarKey, S>& point) const {
        S acc = scalar_traits<S>::zero();
        for (const Term& t : terms_) {
            S c = t.coeff;
            for (const auto& [v, e] : t.mono) {
                auto it = point.find(v);
                S val = it == point.end() ? scalar_traits<S>::zero() : it->second;
                c = c * scalar_pow(val, e);
            }
            acc = acc + c;
        }
        return acc;
    }

    /// Quotient under the precondition that the division is exact (used by
    /// fraction-free elimination); throws otherwise.
    MultiPoly div_exact(const MultiPoly& divisor) const {
        if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
        MultiPoly rem = *this;
        MultiPoly quot;
        const Term& dl = divisor.leading_term();
        S dl_inv = scalar_traits<S>::inverse(dl.coeff);
        while (!rem.is_zero()) {
            const Term& rl = rem.leading_term();
            auto q = mono_div(rl.mono, dl.mono);
            if (!q) throw Error("inexact multivariate division");
            S c = rl.coeff * dl_inv;
            MultiPoly piece;
            piece.terms_.push_back({*q, c});
            quot = quot + piece;
            rem = rem - piece * divisor;
        }
        return quot;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const Term& t : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << scalar_traits<S>::str(t.coeff) << ")";
            for (const auto& [v, e] : t.mono) {
                os << "*y_" << v.i << "_" << v.j << "^(" << v.r << ")";
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

    static int mono_degree(const Mono& m) {
        int d = 0;
        for (const auto& [v, e] : m) d += e;
        return d;
    }

    /// Graded lex: higher total degree first; ties broken by giving larger
    /// exponents to earlier variables.
    static bool mono_less(const Mono& a, const Mono& b) {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        std::size_t ia = 0, ib = 0;
        while (ia < a.size() && ib < b.size()) {
            if (a[ia].first != b[ib].first)
                // The side owning the earlier variable has the larger
                // exponent on it, hence is grlex-greater.
                return b[ib].first < a[ia].first;
            if (a[ia].second != b[ib].second) return a[ia].second < b[ib].second;
            ++ia, ++ib;
        }
        // Unreachable for equal degrees unless the monomials coincide; the
        // side that ran out first is dominated.
        return ia == a.size() && ib < b.size();
    }

    static Mono mono_mul(const Mono& a, const Mono& b) {
        Mono out;
        std::size_t ia = 0, ib = 0;
        while (ia < a.size() || ib < b.size()) {
            if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first))
                out.push_back(a[ia++]);
            else if (ia == a.size() || b[ib].first < a[ia].first)
                out.push_back(b[ib++]);
            else {
                out.push_back({a[ia].first, a[ia].second + b[ib].second});
                ++ia, ++ib;
            }
        }
        return out;
    }

    /// a / b when b's exponents are dominated by a's, else nullopt.
    static std::optional<Mono> mono_div(const Mono& a, const Mono& b) {
        Mono out;
        std::size_t ia = 0;
        for (const auto& [v, e] : b) {
            while (ia < a.size() && a[ia].first < v) out.push_back(a[ia++]);
            if (ia == a.size() || a[ia].first != v || a[ia].second < e) return std::nullopt;
            if (a[ia].second > e) out.push_back({v, a[ia].second - e});
            ++ia;
        }
        while (ia < a.size()) out.push_back(a[ia++]);
        return out;
    }

  private:
    std::vector<Term> terms_;

    MultiPoly merged(const MultiPoly& o, bool negate) const {
        MultiPoly out = *this;
        for (const Term& t : o.terms_) out.add_term(t.mono, negate ? -t.coeff : t.coeff);
        return out;
    }
};

/// scalar_traits for MultiPoly exposes the ring subset used by the generic
/// matrix code (no inverse, no sqrt).
template <Scalar S>
struct scalar_traits<MultiPoly<S>> {
    static constexpr bool exact = scalar_traits<S>::exact;
    static constexpr const char* name = "polynomial";
    static MultiPoly<S> zero() { return MultiPoly<S>(); }
    static MultiPoly<S> one() { return MultiPoly<S>(scalar_traits<S>::one()); }
    static MultiPoly<S> from_int(long long v) { return MultiPoly<S>(scalar_traits<S>::from_int(v)); }
    static bool is_zero(const MultiPoly<S>& p) { return p.is_zero(); }
    static bool equal(const MultiPoly<S>& a, const MultiPoly<S>& b) { return a == b; }
    static std::string str(const MultiPoly<S>& p) { return p.str(); }
    static MultiPoly<S> div_exact(const MultiPoly<S>& a, const MultiPoly<S>& b) {
        return a.div_exact(b);
    }
};

/// Deterministic search for a point where p does not vanish: walk the
/// variables in order, trying the values 0, 1, 2, ... up to the degree bound
/// in that variable, keeping a choice that leaves the partial substitution
/// nonzero. Succeeds on every nonzero polynomial over an exact field.
template <Scalar S>
std::optional<std::map<VarKey, S>> nonvanishing_point(const MultiPoly<S>& p) {
    if (p.is_zero()) return std::nullopt;
    std::map<VarKey, S> point;
    MultiPoly<S> cur = p;
    for (const VarKey& v : p.variables()) {
        int dmax = cur.degree_in(v);
        for (int t = 0; t <= dmax; ++t) {
            S val = scalar_traits<S>::from_int(t);
            MultiPoly<S> next = cur.substituted(v, val);
            if (!next.is_zero()) {
                point[v] = val;
                cur = std::move(next);
                break;
            }
        }
    }
    if (!cur.is_constant() || cur.is_zero())
        throw Error("nonvanishing point search failed to terminate at a constant");
    return point;
}

}  // namespace gradim
