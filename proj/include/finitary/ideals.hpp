#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "finitary/algebra.hpp"

namespace finitary {

/// Two-sided ideal of the incidence algebra spanned by a set of basis
/// symbols. Products of basis symbols are basis symbols or zero, so the
/// linear span of products of two such ideals is itself spanned by basis
/// symbols and is again a two-sided ideal; the pair-set representation is
/// exact for everything this module does. (For two-sided ideals the span of
/// pairwise products already absorbs multiplication on both sides, so "ideal
/// generated by products" and "span of products" coincide.)
class BasisIdeal {
public:
    BasisIdeal(BasisPtr basis, std::set<PairIndex> pairs)
        : basis_(std::move(basis)), pairs_(std::move(pairs)) {
        for (PairIndex i : pairs_)
            if (i >= basis_->dimension())
                throw std::invalid_argument("ideal: pair index outside the basis");
    }

    const BasisPtr& basis() const { return basis_; }
    const std::set<PairIndex>& pairs() const { return pairs_; }
    std::size_t dimension() const { return pairs_.size(); }
    bool contains(PairIndex i) const { return pairs_.count(i) != 0; }

    bool operator==(const BasisIdeal& other) const {
        return basis_ == other.basis_ && pairs_ == other.pairs_;
    }

    bool subset_of(const BasisIdeal& other) const {
        return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
    }

    /// Two-sided closure: with (p, q) in the ideal, left multiplication by
    /// |a><p| puts (a, q) in it for every a -> p, and right multiplication by
    /// |q><b| puts (p, b) in it for every q -> b.
    void validate() const {
        const AlgebraBasis& basis = *basis_;
        const FinitaryPoset& poset = basis.poset();
        for (PairIndex i : pairs_) {
            const auto [p, q] = basis.pair(i);
            for (std::size_t a = 0; a < poset.size(); ++a)
                if (poset.order(a, p) && !contains(basis.at(a, q)))
                    throw std::logic_error("ideal: not closed under left multiplication");
            for (std::size_t b = 0; b < poset.size(); ++b)
                if (poset.order(q, b) && !contains(basis.at(p, b)))
                    throw std::logic_error("ideal: not closed under right multiplication");
        }
    }

    void require_same_basis(const BasisIdeal& other) const {
        if (basis_ != other.basis_)
            throw std::invalid_argument("ideal: operands belong to different bases");
    }

private:
    BasisPtr basis_;
    std::set<PairIndex> pairs_;
};

/// The primitive spectrum: one ideal X_s per class s, spanned by every basis
/// symbol except |s><s|. Each has codimension one; the list follows the
/// canonical class order.
inline std::vector<BasisIdeal> primitive_spectrum(const BasisPtr& basis) {
    std::vector<BasisIdeal> spectrum;
    for (std::size_t s = 0; s < basis->poset().size(); ++s) {
        std::set<PairIndex> pairs;
        const PairIndex omit = basis->at(s, s);
        for (PairIndex i = 0; i < basis->dimension(); ++i)
            if (i != omit) pairs.insert(i);
        spectrum.emplace_back(basis, std::move(pairs));
    }
    return spectrum;
}

inline BasisIdeal ideal_intersect(const BasisIdeal& lhs, const BasisIdeal& rhs) {
    lhs.require_same_basis(rhs);
    std::set<PairIndex> pairs;
    std::set_intersection(lhs.pairs().begin(), lhs.pairs().end(), rhs.pairs().begin(),
                          rhs.pairs().end(), std::inserter(pairs, pairs.begin()));
    return BasisIdeal(lhs.basis(), std::move(pairs));
}

/// Span of all products u . v with u in lhs, v in rhs: the symbols |p><q|
/// admitting a factorisation |p><t| . |t><q| through the two ideals. The
/// result always lies inside the intersection (asserted).
inline BasisIdeal ideal_product(const BasisIdeal& lhs, const BasisIdeal& rhs) {
    lhs.require_same_basis(rhs);
    const AlgebraBasis& basis = *lhs.basis();
    const std::size_t n = basis.poset().size();

    std::vector<std::vector<std::size_t>> rhs_by_first(n);
    for (PairIndex j : rhs.pairs()) rhs_by_first[basis.pair(j).first].push_back(j);

    std::set<PairIndex> pairs;
    for (PairIndex i : lhs.pairs()) {
        const auto [p, t] = basis.pair(i);
        for (PairIndex j : rhs_by_first[t]) pairs.insert(basis.at(p, basis.pair(j).second));
    }
    BasisIdeal product(lhs.basis(), std::move(pairs));
    if (!product.subset_of(ideal_intersect(lhs, rhs)))
        throw std::logic_error("ideal product escaped the intersection");
    return product;
}

/// Rota's relation, computed along its definition: X_r rho X_s exactly when
/// the ideal product X_r . X_s is strictly contained in X_r intersect X_s.
/// Strictness is decided by pair-set inequality, which also yields a witness
/// symbol when wanted.
inline std::set<std::pair<std::size_t, std::size_t>> rota_relation(const BasisPtr& basis) {
    const std::vector<BasisIdeal> spectrum = primitive_spectrum(basis);
    std::set<std::pair<std::size_t, std::size_t>> rho;
    for (std::size_t r = 0; r < spectrum.size(); ++r)
        for (std::size_t s = 0; s < spectrum.size(); ++s) {
            const BasisIdeal product = ideal_product(spectrum[r], spectrum[s]);
            const BasisIdeal meet = ideal_intersect(spectrum[r], spectrum[s]);
            if (product.pairs() != meet.pairs()) rho.emplace(r, s);
        }
    return rho;
}

/// The covering relation of the poset. Equality with rota_relation on every
/// input is the executable content of the proximity characterisation of rho:
/// X_r rho X_s iff r -> s strictly with nothing strictly between.
inline std::set<std::pair<std::size_t, std::size_t>> rota_relation_fast(const FinitaryPoset& poset) {
    const auto& cover = poset.covering_pairs();
    return {cover.begin(), cover.end()};
}

}  // namespace finitary
