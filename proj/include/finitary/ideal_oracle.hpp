#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "finitary/ideals.hpp"
#include "finitary/rational.hpp"

namespace finitary {

/// Raised when the oracle is asked for an algebra beyond its dimension bound.
struct OracleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

using SparseVec = std::map<std::size_t, Rational>;

/// Reduced row echelon basis of a growing set of rational vectors. Rows are
/// kept normalized (leading coefficient 1) and fully reduced against each
/// other, keyed by leading index.
class RowBasis {
public:
    void insert(SparseVec v) {
        while (!v.empty()) {
            const std::size_t lead = v.begin()->first;
            auto it = rows_.find(lead);
            if (it != rows_.end()) {
                axpy(v, -v.begin()->second, it->second);
                continue;
            }
            const Rational scale = v.begin()->second;
            for (auto& [idx, c] : v) c /= scale;
            for (auto& [l, row] : rows_) {
                auto hit = row.find(lead);
                if (hit != row.end()) axpy(row, -hit->second, v);
            }
            rows_.emplace(lead, std::move(v));
            return;
        }
    }

    std::size_t rank() const { return rows_.size(); }
    const std::map<std::size_t, SparseVec>& rows() const { return rows_; }

private:
    // target += scale * source
    static void axpy(SparseVec& target, const Rational& scale, const SparseVec& source) {
        for (const auto& [idx, c] : source) {
            auto it = target.find(idx);
            if (it == target.end()) {
                Rational value = scale * c;
                if (value != 0) target.emplace(idx, std::move(value));
            } else {
                it->second += scale * c;
                if (it->second == 0) target.erase(it);
            }
        }
    }

    std::map<std::size_t, SparseVec> rows_;
};

/// Left-multiplication operator of the basis symbol |p><t| in the regular
/// representation, stored column-indexed: column (r, q) has the single entry
/// (p, q) when r = t, and is zero otherwise.
inline std::vector<SparseVec> left_multiplication_matrix(const AlgebraBasis& basis, PairIndex u) {
    const auto [p, t] = basis.pair(u);
    std::vector<SparseVec> columns(basis.dimension());
    for (PairIndex j = 0; j < basis.dimension(); ++j) {
        const auto [r, q] = basis.pair(j);
        if (r == t) columns[j].emplace(basis.at(p, q), 1);
    }
    return columns;
}

inline SparseVec apply_columns(const std::vector<SparseVec>& columns, const SparseVec& x) {
    SparseVec result;
    for (const auto& [j, xc] : x)
        for (const auto& [row, mc] : columns[j]) {
            auto it = result.find(row);
            if (it == result.end()) {
                result.emplace(row, mc * xc);
            } else {
                it->second += mc * xc;
                if (it->second == 0) result.erase(it);
            }
        }
    return result;
}

}  // namespace detail

/// Independent route to the ideal product, through exact-rational linear
/// algebra instead of pair-set combinatorics: span both ideals by their
/// basis symbols, multiply every spanning pair via the regular
/// representation, and row-reduce the resulting vectors to a basis of the
/// spanned subspace. The subspace always turns out to be spanned by basis
/// symbols, which converts back into a BasisIdeal.
///
/// O(dim^3)-ish; refuses algebras above dim_bound.
inline BasisIdeal ideal_product_oracle(const BasisIdeal& lhs, const BasisIdeal& rhs,
                                       std::size_t dim_bound = 64) {
    lhs.require_same_basis(rhs);
    const AlgebraBasis& basis = *lhs.basis();
    if (basis.dimension() > dim_bound)
        throw OracleLimitError("ideal_product_oracle: algebra dimension " +
                               std::to_string(basis.dimension()) + " exceeds bound " +
                               std::to_string(dim_bound));

    detail::RowBasis reduced;
    for (PairIndex u : lhs.pairs()) {
        const auto columns = detail::left_multiplication_matrix(basis, u);
        for (PairIndex v : rhs.pairs()) {
            detail::SparseVec x{{v, Rational(1)}};
            detail::SparseVec product = detail::apply_columns(columns, x);
            if (!product.empty()) reduced.insert(std::move(product));
        }
    }

    std::set<PairIndex> pairs;
    for (const auto& [lead, row] : reduced.rows()) {
        if (row.size() != 1 || row.begin()->second != 1)
            throw std::logic_error("ideal_product_oracle: product span is not basis-aligned");
        pairs.insert(lead);
    }
    return BasisIdeal(lhs.basis(), std::move(pairs));
}

}  // namespace finitary
