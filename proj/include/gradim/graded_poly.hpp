#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "gradim/matrix.hpp"
#include "gradim/multipoly.hpp"

namespace gradim {

/// Monomial c * x_{w_1} x_{w_2} ... x_{w_k} in noncommuting graded variables;
/// the word stores variable ids in multiplication order and is never empty.
template <Scalar S>
struct GradedMonomial {
    S coeff;
    std::vector<int> word;
};

/// Polynomial in noncommuting variables x_1, x_2, ... over the scalar S, with
/// a Z_n degree attached to each declared variable and no constant term.
/// Monomials are kept in canonical order: shorter words first, equal lengths
/// lexicographically.
template <Scalar S>
class GradedPolynomial {
  public:
    explicit GradedPolynomial(int modulus) : n_(modulus) {
        if (modulus < 1) throw DimensionError("grading modulus must be positive");
    }

    int modulus() const { return n_; }

    void declare(int id, int degree) {
        if (id < 1) throw Error("variable ids are positive");
        degrees_[id] = mod_index(degree, n_);
    }

    bool is_declared(int id) const { return degrees_.count(id) != 0; }

    int degree_of(int id) const {
        auto it = degrees_.find(id);
        if (it == degrees_.end())
            throw Error("undeclared variable x" + std::to_string(id));
        return it->second;
    }

    /// Declared variables with their degrees, ordered by id.
    const std::map<int, int>& variables() const { return degrees_; }

    const std::vector<GradedMonomial<S>>& monomials() const { return mono_; }

    bool is_zero() const { return mono_.empty(); }

    /// Adds c * x_{word...}; undeclared ids raise, empty words raise (there
    /// is no constant term in this algebra).
    void add_term(const S& coeff, std::vector<int> word) {
        if (word.empty()) throw Error("constant terms are not part of the algebra");
        for (int id : word) degree_of(id);
        if (scalar_traits<S>::is_zero(coeff)) return;
        auto it = std::lower_bound(mono_.begin(), mono_.end(), word,
                                   [](const GradedMonomial<S>& m, const std::vector<int>& w) {
                                       return word_less(m.word, w);
                                   });
        if (it != mono_.end() && it->word == word) {
            it->coeff = it->coeff + coeff;
            if (scalar_traits<S>::is_zero(it->coeff)) mono_.erase(it);
        } else {
            mono_.insert(it, GradedMonomial<S>{coeff, std::move(word)});
        }
    }

    GradedPolynomial operator+(const GradedPolynomial& o) const {
        GradedPolynomial r = *this;
        r.merge_declarations(o);
        for (const auto& m : o.mono_) r.add_term(m.coeff, m.word);
        return r;
    }
    GradedPolynomial operator-() const {
        GradedPolynomial r = *this;
        for (auto& m : r.mono_) m.coeff = -m.coeff;
        return r;
    }
    GradedPolynomial operator-(const GradedPolynomial& o) const { return *this + (-o); }

    GradedPolynomial scaled(const S& c) const {
        GradedPolynomial r(n_);
        r.degrees_ = degrees_;
        if (scalar_traits<S>::is_zero(c)) return r;
        r.mono_ = mono_;
        for (auto& m : r.mono_) m.coeff = m.coeff * c;
        return r;
    }

    bool operator==(const GradedPolynomial& o) const {
        if (n_ != o.n_ || mono_.size() != o.mono_.size()) return false;
        for (std::size_t k = 0; k < mono_.size(); ++k) {
            if (mono_[k].word != o.mono_[k].word) return false;
            if (!scalar_traits<S>::equal(mono_[k].coeff, o.mono_[k].coeff)) return false;
        }
        return true;
    }

    /// Z_n degree of a word: the sum of its variable degrees.
    int word_degree(const std::vector<int>& word) const {
        long long d = 0;
        for (int id : word) d += degree_of(id);
        return mod_index(d, n_);
    }

    /// Common Z_n degree of all monomials, or nullopt when degrees differ or
    /// the polynomial is zero.
    std::optional<int> homogeneous_degree() const {
        if (mono_.empty()) return std::nullopt;
        int d = word_degree(mono_.front().word);
        for (const auto& m : mono_)
            if (word_degree(m.word) != d) return std::nullopt;
        return d;
    }

    /// Occurrence counts of each declared variable in one word.
    std::vector<int> occurrences(const std::vector<int>& word) const {
        std::vector<int> counts(degrees_.size(), 0);
        for (int id : word) {
            std::size_t slot = 0;
            for (const auto& [vid, deg] : degrees_) {
                if (vid == id) break;
                ++slot;
            }
            ++counts[slot];
        }
        return counts;
    }

    /// The common occurrence vector of all monomials (indexed by declared
    /// variables in id order), or nullopt when monomials disagree.
    std::optional<std::vector<int>> multidegree() const {
        if (mono_.empty()) return std::nullopt;
        std::vector<int> d = occurrences(mono_.front().word);
        for (const auto& m : mono_)
            if (occurrences(m.word) != d) return std::nullopt;
        return d;
    }

    /// Multilinear: every declared variable occurs exactly once in every
    /// monomial.
    bool is_multilinear() const {
        auto d = multidegree();
        if (!d) return false;
        for (int c : *d)
            if (c != 1) return false;
        return true;
    }

    /// Weighted total degree under rational weights per variable, when every
    /// monomial agrees on it.
    std::optional<Rational> weighted_degree(const std::map<int, Rational>& weights) const {
        if (mono_.empty()) return std::nullopt;
        auto weight_of = [&](const std::vector<int>& word) {
            Rational acc(0);
            for (int id : word) {
                auto it = weights.find(id);
                if (it == weights.end())
                    throw Error("missing weight for variable x" + std::to_string(id));
                acc += it->second;
            }
            return acc;
        };
        Rational d = weight_of(mono_.front().word);
        for (const auto& m : mono_)
            if (weight_of(m.word) != d) return std::nullopt;
        return d;
    }

    /// Evaluates at homogeneous arguments. Every declared variable needs an
    /// assignment whose component degree matches its declared degree.
    Matrix<S> evaluate(const std::map<int, HomogeneousMatrix<S>>& assignment) const {
        for (const auto& [id, deg] : degrees_) {
            auto it = assignment.find(id);
            if (it == assignment.end())
                throw MissingAssignmentError("no matrix assigned to x" + std::to_string(id));
            if (it->second.size() != n_)
                throw DimensionError("assignment size does not match the modulus");
            if (it->second.degree() != deg && !it->second.is_zero())
                throw DegreeMismatchError("matrix assigned to x" + std::to_string(id) +
                                          " lies in the wrong component");
        }
        Matrix<S> out(n_);
        for (const auto& m : mono_) {
            HomogeneousMatrix<S> prod = assignment.at(m.word.front());
            for (std::size_t k = 1; k < m.word.size(); ++k)
                prod = prod * assignment.at(m.word[k]);
            for (int i = 0; i < n_; ++i) {
                int j = mod_index(i + prod.degree(), n_);
                out(i, j) = out(i, j) + m.coeff * prod.raw()[i];
            }
        }
        return out;
    }

    /// Evaluates at generic homogeneous matrices: variable x_r of degree g
    /// becomes sum_i y_{i,i+g}^{(r)} E_{i,i+g}. With distinct_vars = false all
    /// variables of equal degree share one generic matrix (superscript 0).
    Matrix<MultiPoly<S>> evaluate_generic(bool distinct_vars = true) const {
        std::map<int, HomogeneousMatrix<MultiPoly<S>>> generic;
        for (const auto& [id, deg] : degrees_) {
            HomogeneousMatrix<MultiPoly<S>> xi(n_, deg);
            int tag = distinct_vars ? id : 0;
            for (int i = 0; i < n_; ++i)
                xi.gamma(i + 1) =
                    MultiPoly<S>::variable(VarKey{tag, i + 1, mod_index(i + deg, n_) + 1});
            generic.emplace(id, std::move(xi));
        }
        Matrix<MultiPoly<S>> out(n_);
        for (const auto& m : mono_) {
            HomogeneousMatrix<MultiPoly<S>> prod = generic.at(m.word.front());
            for (std::size_t k = 1; k < m.word.size(); ++k)
                prod = prod * generic.at(m.word[k]);
            MultiPoly<S> c = MultiPoly<S>::constant(m.coeff);
            for (int i = 0; i < n_; ++i) {
                int j = mod_index(i + prod.degree(), n_);
                out(i, j) = out(i, j) + c * prod.raw()[i];
            }
        }
        return out;
    }

    template <class T, class F>
    GradedPolynomial<T> map_coefficients(F&& f) const {
        GradedPolynomial<T> out(n_);
        for (const auto& [id, deg] : degrees_) out.declare(id, deg);
        for (const auto& m : mono_) out.add_term(f(m.coeff), m.word);
        return out;
    }

    static bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }

  private:
    int n_;
    std::map<int, int> degrees_;
    std::vector<GradedMonomial<S>> mono_;

    void merge_declarations(const GradedPolynomial& o) {
        if (n_ != o.n_) throw WrongModulusError("cannot combine polynomials over different Z_n");
        for (const auto& [id, deg] : o.degrees_) {
            auto it = degrees_.find(id);
            if (it == degrees_.end())
                degrees_[id] = deg;
            else if (it->second != deg)
                throw DegreeMismatchError("conflicting degree declarations for x" +
                                          std::to_string(id));
        }
    }
};

/// Lazy enumeration of all matrix-unit assignments of a multilinear
/// polynomial: variable ids in increasing order, each running through the n
/// units E_{t, t+deg}, with the last variable's index moving fastest.
template <Scalar S>
class UnitEvaluationEnumerator {
  public:
    struct Item {
        std::map<int, HomogeneousMatrix<S>> assignment;
        Matrix<S> value;
    };

    explicit UnitEvaluationEnumerator(const GradedPolynomial<S>& f) : f_(&f), n_(f.modulus()) {
        if (!f.is_multilinear())
            throw NotMultilinearError("matrix unit enumeration requires a multilinear polynomial");
        for (const auto& [id, deg] : f.variables()) ids_.push_back(id);
        idx_.assign(ids_.size(), 0);
    }

    std::optional<Item> next() {
        if (done_) return std::nullopt;
        Item item{make_assignment(), Matrix<S>(n_)};
        item.value = f_->evaluate(item.assignment);
        advance();
        return item;
    }

    std::uint64_t total() const {
        std::uint64_t t = 1;
        for (std::size_t k = 0; k < ids_.size(); ++k) t *= static_cast<std::uint64_t>(n_);
        return t;
    }

  private:
    const GradedPolynomial<S>* f_;
    int n_;
    std::vector<int> ids_;
    std::vector<int> idx_;
    bool done_ = false;

    std::map<int, HomogeneousMatrix<S>> make_assignment() const {
        std::map<int, HomogeneousMatrix<S>> a;
        for (std::size_t k = 0; k < ids_.size(); ++k) {
            int id = ids_[k];
            a.emplace(id, HomogeneousMatrix<S>::unit(n_, f_->degree_of(id), idx_[k] + 1));
        }
        return a;
    }

    void advance() {
        for (std::size_t k = ids_.size(); k-- > 0;) {
            if (++idx_[k] < n_) return;
            idx_[k] = 0;
        }
        done_ = true;
    }
};

/// All unit evaluations, materialized.
template <Scalar S>
std::vector<typename UnitEvaluationEnumerator<S>::Item> matrix_unit_evaluations(
    const GradedPolynomial<S>& f) {
    UnitEvaluationEnumerator<S> e(f);
    std::vector<typename UnitEvaluationEnumerator<S>::Item> out;
    while (auto item = e.next()) out.push_back(std::move(*item));
    return out;
}

}  // namespace gradim
