#ifndef SVCRATE_RECOVERY_HPP
#define SVCRATE_RECOVERY_HPP

#include <algorithm>
#include <vector>

#include "field.hpp"
#include "projective.hpp"

/**
 * Reduced recovery sets: linearly independent column subsets whose unique
 * combination equal to e_i has every coefficient nonzero.
 */
namespace svcrate {

/** File indices are 0-based in code; the CLI prints them 1-based. */
struct RecoverySet
{
    std::size_t file = 0;
    std::vector<std::size_t> columns;    // ascending
    std::vector<Element> coefficients;   // aligned with columns

    bool operator==(const RecoverySet&) const = default;
};

struct RecoveryCatalog
{
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<std::vector<RecoverySet>> sets;   // sets[i] = R_i

    std::size_t count(std::size_t file) const { return sets.at(file).size(); }

    std::size_t total() const
    {
        std::size_t t = 0;
        for (const auto& r : sets) t += r.size();
        return t;
    }
};

namespace detail {

/** Lexicographic m-combinations of {0..n-1}. */
template <typename Visitor>
void for_each_combination(std::size_t n, std::size_t m, Visitor&& visit)
{
    if (m == 0 || m > n) return;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    while (true)
    {
        visit(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = m;
        while (i > 0 && idx[i - 1] == n - m + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::vector<FieldVector> pick(const std::vector<FieldVector>& cols, const std::vector<std::size_t>& idx)
{
    std::vector<FieldVector> out;
    out.reserve(idx.size());
    for (auto j : idx) out.push_back(cols[j]);
    return out;
}

}   // namespace detail

/** Ordered by cardinality, then lexicographically by column indices. */
inline std::vector<RecoverySet> enumerate_recovery_sets(const GeneratorMatrix& g, std::size_t file)
{
    validate_generator(g);
    if (file >= g.rows()) throw DimensionMismatch("file index out of range");
    const std::size_t k = g.rows();
    const auto cols = g.columns();
    const FieldVector target = FieldVector::unit(g.order(), k, file);

    std::vector<RecoverySet> out;
    for (std::size_t m = 1; m <= k; ++m)
    {
        detail::for_each_combination(g.cols(), m, [&](const std::vector<std::size_t>& idx) {
            auto chosen = detail::pick(cols, idx);
            if (row_reduce(FieldMatrix::from_columns(g.order(), chosen)).rank != m) return;
            auto alpha = solve_linear(chosen, target);
            if (!alpha) return;
            if (std::any_of(alpha->begin(), alpha->end(), [](Element a) { return a == 0; })) return;
            out.push_back(RecoverySet{file, idx, *alpha});
        });
    }
    if (out.empty())
        throw RankDeficient("e_" + std::to_string(file + 1) + " is not in the column span");
    return out;
}

inline RecoveryCatalog build_catalog(const GeneratorMatrix& g)
{
    RecoveryCatalog cat;
    cat.k = g.rows();
    cat.n = g.cols();
    for (std::size_t i = 0; i < cat.k; ++i)
        cat.sets.push_back(enumerate_recovery_sets(g, i));
    return cat;
}

inline bool validate_recovery_set(const GeneratorMatrix& g, const RecoverySet& r)
{
    if (r.columns.empty() || r.columns.size() != r.coefficients.size()) return false;
    if (r.file >= g.rows()) return false;
    for (std::size_t j = 0; j < r.columns.size(); ++j)
    {
        if (r.columns[j] >= g.cols()) return false;
        if (j > 0 && r.columns[j] <= r.columns[j - 1]) return false;
        if (r.coefficients[j] % g.order().value() == 0) return false;
    }
    auto chosen = detail::pick(g.columns(), r.columns);
    if (row_reduce(FieldMatrix::from_columns(g.order(), chosen)).rank != chosen.size()) return false;
    FieldVector acc = FieldVector::zero(g.order(), g.rows());
    for (std::size_t j = 0; j < chosen.size(); ++j)
        acc = acc + chosen[j].scaled(r.coefficients[j]);
    return acc == FieldVector::unit(g.order(), g.rows(), r.file);
}

}   // namespace svcrate

#endif
