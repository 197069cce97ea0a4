#ifndef SVCRATE_SERVICE_LP_HPP
#define SVCRATE_SERVICE_LP_HPP

#include <optional>
#include <vector>

#include "lp.hpp"
#include "recovery.hpp"

/**
 * The service-rate linear programs. Variables of the primal are the demands
 * lambda_i followed by the split rates lambda_{i,j} in catalog order; the
 * dual has beta_i (free) followed by gamma_l (one per server).
 */
namespace svcrate {

/** Split of each file's demand over its recovery sets: rates[i][j] = lambda_{i,j}. */
struct Allocation
{
    std::vector<RationalVector> rates;

    static Allocation zero(const RecoveryCatalog& cat)
    {
        Allocation a;
        for (const auto& r : cat.sets) a.rates.emplace_back(r.size(), Rational(0));
        return a;
    }
};

namespace detail {

inline void check_service_inputs(const RecoveryCatalog& cat, const RationalVector& mu, const RationalVector& h)
{
    if (mu.size() != cat.n) throw DimensionMismatch("mu has length " + std::to_string(mu.size()) + ", expected n = " + std::to_string(cat.n));
    if (h.size() != cat.k) throw DimensionMismatch("objective has length " + std::to_string(h.size()) + ", expected k = " + std::to_string(cat.k));
    for (const auto& m : mu)
        if (m < 0) throw DimensionMismatch("service rates must be nonnegative");
}

inline std::vector<std::size_t> split_offsets(const RecoveryCatalog& cat)
{
    std::vector<std::size_t> off(cat.k);
    std::size_t next = cat.k;
    for (std::size_t i = 0; i < cat.k; ++i)
    {
        off[i] = next;
        next += cat.sets[i].size();
    }
    return off;
}

}   // namespace detail

/** Index of lambda_{i,j} inside a primal built by build_primal. */
inline std::size_t split_variable(const RecoveryCatalog& cat, std::size_t file, std::size_t set)
{
    return detail::split_offsets(cat)[file] + set;
}

/** max h.lambda subject to demand split (equalities), server capacity, nonnegativity. */
inline LinearProgram build_primal(const RecoveryCatalog& cat, const RationalVector& mu, const RationalVector& h)
{
    detail::check_service_inputs(cat, mu, h);
    LinearProgram lp;
    lp.sense = Sense::maximize;
    for (std::size_t i = 0; i < cat.k; ++i) lp.add_variable(h[i]);
    const auto off = detail::split_offsets(cat);
    for (std::size_t i = 0; i < cat.k; ++i)
        for (std::size_t j = 0; j < cat.sets[i].size(); ++j) lp.add_variable(0);

    for (std::size_t i = 0; i < cat.k; ++i)
    {
        SparseRow row;
        for (std::size_t j = 0; j < cat.sets[i].size(); ++j) row.emplace_back(off[i] + j, Rational(1));
        row.emplace_back(i, Rational(-1));
        lp.add_constraint(std::move(row), Relation::equal, 0);
    }
    std::vector<SparseRow> capacity(cat.n);
    for (std::size_t i = 0; i < cat.k; ++i)
        for (std::size_t j = 0; j < cat.sets[i].size(); ++j)
            for (auto l : cat.sets[i][j].columns) capacity[l].emplace_back(off[i] + j, Rational(1));
    for (std::size_t l = 0; l < cat.n; ++l)
        lp.add_constraint(std::move(capacity[l]), Relation::less_equal, mu[l]);
    return lp;
}

/** min gamma.mu subject to h_i <= beta_i and beta_i <= sum_{l in R_{i,j}} gamma_l. */
inline LinearProgram build_dual(const RecoveryCatalog& cat, const RationalVector& mu, const RationalVector& h)
{
    detail::check_service_inputs(cat, mu, h);
    LinearProgram lp;
    lp.sense = Sense::minimize;
    for (std::size_t i = 0; i < cat.k; ++i) lp.add_variable(0, LowerBound::free);
    for (std::size_t l = 0; l < cat.n; ++l) lp.add_variable(mu[l]);
    for (std::size_t i = 0; i < cat.k; ++i)
        lp.add_constraint({{i, Rational(1)}}, Relation::greater_equal, h[i]);
    for (std::size_t i = 0; i < cat.k; ++i)
        for (const auto& r : cat.sets[i])
        {
            SparseRow row{{i, Rational(1)}};
            for (auto l : r.columns) row.emplace_back(cat.k + l, Rational(-1));
            lp.add_constraint(std::move(row), Relation::less_equal, 0);
        }
    return lp;
}

/** The always-feasible dual point beta = h, gamma_l = sum_i h_i. */
inline RationalVector trivial_dual_point(const RecoveryCatalog& cat, const RationalVector& h)
{
    RationalVector x(h.begin(), h.end());
    x.resize(cat.k + cat.n, sum_of(h));
    return x;
}

struct DualityReport
{
    bool equal = false;
    LPSolution primal;
    LPSolution dual;
};

inline DualityReport duality_report(const RecoveryCatalog& cat, const RationalVector& mu, const RationalVector& h)
{
    DualityReport r;
    r.primal = solve_lp(build_primal(cat, mu, h));
    r.dual = solve_lp(build_dual(cat, mu, h));
    r.equal = r.primal.status == LPStatus::optimal && r.dual.status == LPStatus::optimal &&
              r.primal.value == r.dual.value;
    return r;
}

inline bool check_duality(const RecoveryCatalog& cat, const RationalVector& mu, const RationalVector& h)
{
    return duality_report(cat, mu, h).equal;
}

/** Exact recomputation of the demand and capacity constraints for a witness. */
inline bool allocation_valid(const RecoveryCatalog& cat, const RationalVector& mu,
                             const RationalVector& demand, const Allocation& a)
{
    if (a.rates.size() != cat.k || demand.size() != cat.k || mu.size() != cat.n) return false;
    RationalVector load(cat.n, Rational(0));
    for (std::size_t i = 0; i < cat.k; ++i)
    {
        if (a.rates[i].size() != cat.sets[i].size()) return false;
        Rational total = 0;
        for (std::size_t j = 0; j < a.rates[i].size(); ++j)
        {
            const Rational& r = a.rates[i][j];
            if (r < 0) return false;
            total += r;
            if (r != 0)
                for (auto l : cat.sets[i][j].columns) load[l] += r;
        }
        if (total != demand[i]) return false;
    }
    for (std::size_t l = 0; l < cat.n; ++l)
        if (load[l] > mu[l]) return false;
    return true;
}

/** Largest servable rate for each file alone. */
inline RationalVector axis_maxima(const RecoveryCatalog& cat, const RationalVector& mu)
{
    RationalVector out(cat.k);
    for (std::size_t i = 0; i < cat.k; ++i)
    {
        RationalVector h(cat.k, Rational(0));
        h[i] = 1;
        LPSolution s = solve_lp(build_primal(cat, mu, h));
        if (s.status != LPStatus::optimal) throw MalformedLP("axis LP did not reach an optimum");
        out[i] = s.value;
    }
    return out;
}

/** An exact allocation serving `demand`, or nothing when demand lies outside the region. */
inline std::optional<Allocation> membership(const RecoveryCatalog& cat, const RationalVector& mu,
                                            const RationalVector& demand)
{
    detail::check_service_inputs(cat, mu, demand);
    for (const auto& d : demand)
        if (d < 0) throw DimensionMismatch("demand entries must be nonnegative");

    LinearProgram lp;
    lp.sense = Sense::maximize;
    std::vector<std::size_t> off(cat.k);
    for (std::size_t i = 0; i < cat.k; ++i)
    {
        off[i] = lp.num_vars();
        for (std::size_t j = 0; j < cat.sets[i].size(); ++j) lp.add_variable(0);
    }
    for (std::size_t i = 0; i < cat.k; ++i)
    {
        SparseRow row;
        for (std::size_t j = 0; j < cat.sets[i].size(); ++j) row.emplace_back(off[i] + j, Rational(1));
        lp.add_constraint(std::move(row), Relation::equal, demand[i]);
    }
    std::vector<SparseRow> capacity(cat.n);
    for (std::size_t i = 0; i < cat.k; ++i)
        for (std::size_t j = 0; j < cat.sets[i].size(); ++j)
            for (auto l : cat.sets[i][j].columns) capacity[l].emplace_back(off[i] + j, Rational(1));
    for (std::size_t l = 0; l < cat.n; ++l)
        lp.add_constraint(std::move(capacity[l]), Relation::less_equal, mu[l]);

    LPSolution s = solve_lp(lp);
    if (s.status != LPStatus::optimal) return std::nullopt;
    Allocation a = Allocation::zero(cat);
    for (std::size_t i = 0; i < cat.k; ++i)
        for (std::size_t j = 0; j < cat.sets[i].size(); ++j) a.rates[i][j] = s.x[off[i] + j];
    return a;
}

}   // namespace svcrate

#endif
