#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finitary/poset.hpp"
#include "finitary/rational.hpp"

namespace finitary {

using PairIndex = std::size_t;

/// Basis of the incidence algebra of a finitary poset: one symbol |p><q| for
/// every comparable pair p -> q (reflexive pairs included). The dimension of
/// the algebra is the number of such pairs.
class AlgebraBasis {
public:
    explicit AlgebraBasis(FinitaryPoset poset) : poset_(std::move(poset)) {
        for (std::size_t p = 0; p < poset_.size(); ++p)
            for (std::size_t q = 0; q < poset_.size(); ++q)
                if (poset_.order(p, q)) {
                    index_.emplace(std::make_pair(p, q), pairs_.size());
                    pairs_.emplace_back(p, q);
                }
    }

    const FinitaryPoset& poset() const { return poset_; }
    std::size_t dimension() const { return pairs_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
    const std::pair<std::size_t, std::size_t>& pair(PairIndex i) const { return pairs_[i]; }

    bool admissible(std::size_t p, std::size_t q) const { return index_.count({p, q}) != 0; }

    std::optional<PairIndex> find(std::size_t p, std::size_t q) const {
        auto it = index_.find({p, q});
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    PairIndex at(std::size_t p, std::size_t q) const {
        auto found = find(p, q);
        if (!found)
            throw std::invalid_argument("algebra basis: |" + poset_.label(p) + "><" + poset_.label(q) +
                                        "| is not an admissible symbol");
        return *found;
    }

private:
    FinitaryPoset poset_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::map<std::pair<std::size_t, std::size_t>, PairIndex> index_;
};

using BasisPtr = std::shared_ptr<const AlgebraBasis>;

inline BasisPtr make_basis(FinitaryPoset poset) {
    return std::make_shared<const AlgebraBasis>(std::move(poset));
}

/// Element of the incidence algebra: a finite rational linear combination of
/// basis symbols, kept canonical (no zero coefficients stored).
class AlgebraElement {
public:
    explicit AlgebraElement(BasisPtr basis) : basis_(std::move(basis)) {
        if (!basis_) throw std::invalid_argument("algebra element: null basis");
    }

    static AlgebraElement symbol(BasisPtr basis, const std::string& p, const std::string& q) {
        AlgebraElement e(basis);
        const auto& poset = e.basis_->poset();
        e.coeffs_[e.basis_->at(poset.index_of(p), poset.index_of(q))] = 1;
        return e;
    }

    /// Multiplicative unit: the sum of all reflexive symbols |s><s|.
    static AlgebraElement unit(BasisPtr basis) {
        AlgebraElement e(basis);
        for (std::size_t s = 0; s < e.basis_->poset().size(); ++s)
            e.coeffs_[e.basis_->at(s, s)] = 1;
        return e;
    }

    const BasisPtr& basis() const { return basis_; }
    const std::map<PairIndex, Rational>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(PairIndex i) const {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add_term(PairIndex i, const Rational& c) {
        if (i >= basis_->dimension())
            throw std::invalid_argument("algebra element: coefficient outside the basis");
        auto it = coeffs_.find(i);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_.emplace(i, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& other) {
        require_same_basis(other);
        for (const auto& [i, c] : other.coeffs_) add_term(i, c);
        return *this;
    }

    AlgebraElement& operator-=(const AlgebraElement& other) {
        require_same_basis(other);
        for (const auto& [i, c] : other.coeffs_) add_term(i, -c);
        return *this;
    }

    AlgebraElement& operator*=(const Rational& scalar) {
        if (scalar == 0) {
            coeffs_.clear();
        } else {
            for (auto& [i, c] : coeffs_) c *= scalar;
        }
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }

    bool operator==(const AlgebraElement& other) const {
        return basis_ == other.basis_ && coeffs_ == other.coeffs_;
    }

    void require_same_basis(const AlgebraElement& other) const {
        if (basis_ != other.basis_)
            throw std::invalid_argument("algebra: elements belong to different bases");
    }

private:
    BasisPtr basis_;
    std::map<PairIndex, Rational> coeffs_;
};

/// Bilinear extension of |p><q| . |r><s| = delta_qr |p><s|. Transitivity of
/// the order keeps every surviving pair admissible, so the product never
/// leaves the basis.
inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    a.require_same_basis(b);
    const AlgebraBasis& basis = *a.basis();
    AlgebraElement out(a.basis());
    for (const auto& [i, ca] : a.terms()) {
        const auto [p, q] = basis.pair(i);
        for (const auto& [j, cb] : b.terms()) {
            const auto [r, s] = basis.pair(j);
            if (q != r) continue;
            auto target = basis.find(p, s);
            if (!target) throw std::logic_error("algebra: product left the admissible basis");
            out.add_term(*target, ca * cb);
        }
    }
    return out;
}

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return multiply(a, b);
}

/// Number of trajectories p = q0, q1, ..., qn = r whose consecutive steps are
/// neighbours in the sense of the Rota topology (covering pairs), computed as
/// the (p, r) coefficient of the n-th power of the sum of covering symbols.
inline BigInt chain_count(const FinitaryPoset& poset, const std::string& from,
                          const std::string& to, std::size_t steps) {
    const std::size_t p = poset.index_of(from);
    const std::size_t r = poset.index_of(to);
    BasisPtr basis = make_basis(poset);

    AlgebraElement adjacency(basis);
    for (const auto& [a, b] : poset.covering_pairs()) adjacency.add_term(basis->at(a, b), 1);

    AlgebraElement power = AlgebraElement::unit(basis);
    for (std::size_t k = 0; k < steps; ++k) power = multiply(power, adjacency);

    auto target = basis->find(p, r);
    const Rational c = target ? power.coefficient(*target) : Rational(0);
    if (denominator(c) != 1 || c < 0) throw std::logic_error("chain_count: non-integral count");
    return numerator(c);
}

}  // namespace finitary
