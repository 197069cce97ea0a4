#ifndef SVCRATE_LP_HPP
#define SVCRATE_LP_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

/**
 * Exact linear programming over the rationals.
 *
 * The solver is a two-phase revised simplex method with an explicit dense
 * basis inverse. Rows are few (k + n for the service LP) while columns can
 * number in the thousands, so columns are kept sparse and priced one at a
 * time. Pricing is Dantzig's rule until a run of degenerate pivots is seen,
 * after which the phase finishes under Bland's rule (smallest entering index,
 * smallest leaving basic index), which cannot cycle.
 */
namespace svcrate {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, equal, greater_equal };
enum class LowerBound { zero, free };

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

struct Constraint
{
    SparseRow terms;
    Relation relation = Relation::less_equal;
    Rational rhs = 0;
};

struct LinearProgram
{
    Sense sense = Sense::maximize;
    RationalVector objective;            // one coefficient per variable
    std::vector<Constraint> constraints;
    std::vector<LowerBound> lower;       // one per variable

    std::size_t num_vars() const { return objective.size(); }

    std::size_t add_variable(const Rational& cost, LowerBound lb = LowerBound::zero)
    {
        objective.push_back(cost);
        lower.push_back(lb);
        return objective.size() - 1;
    }

    void add_constraint(SparseRow terms, Relation rel, Rational rhs)
    {
        constraints.push_back(Constraint{std::move(terms), rel, std::move(rhs)});
    }
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPSolution
{
    LPStatus status = LPStatus::infeasible;
    Rational value = 0;
    RationalVector x;
    std::size_t pivots = 0;
};

inline void check_well_formed(const LinearProgram& lp)
{
    if (lp.lower.size() != lp.objective.size())
        throw MalformedLP("objective and bound vectors differ in length");
    for (const auto& c : lp.constraints)
        for (const auto& [j, a] : c.terms)
            if (j >= lp.num_vars()) throw MalformedLP("constraint references variable " + std::to_string(j));
}

/** Exact check that x satisfies every row and bound of lp. */
inline bool is_feasible_point(const LinearProgram& lp, const RationalVector& x)
{
    if (x.size() != lp.num_vars()) return false;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (lp.lower[j] == LowerBound::zero && x[j] < 0) return false;
    for (const auto& c : lp.constraints)
    {
        Rational lhs = 0;
        for (const auto& [j, a] : c.terms) lhs += a * x[j];
        switch (c.relation)
        {
            case Relation::less_equal: if (lhs > c.rhs) return false; break;
            case Relation::equal: if (lhs != c.rhs) return false; break;
            case Relation::greater_equal: if (lhs < c.rhs) return false; break;
        }
    }
    return true;
}

inline Rational objective_value(const LinearProgram& lp, const RationalVector& x)
{
    Rational v = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (lp.objective[j] != 0) v += lp.objective[j] * x[j];
    return v;
}

namespace detail {

class RevisedSimplex
{
    public:
        using Column = std::vector<std::pair<std::size_t, Rational>>;

        std::size_t m = 0;
        std::vector<Column> cols;
        std::vector<bool> artificial;
        RationalVector rhs;
        std::vector<std::size_t> basis;
        std::vector<RationalVector> binv;   // binv[i][r]
        RationalVector xb;
        std::size_t pivots = 0;

        static constexpr std::size_t kDegenerateStreak = 50;

        std::size_t add_column(Column c, bool is_artificial)
        {
            cols.push_back(std::move(c));
            artificial.push_back(is_artificial);
            return cols.size() - 1;
        }

        RationalVector ftran(const Column& c) const
        {
            RationalVector u(m, Rational(0));
            for (const auto& [r, a] : c)
                for (std::size_t i = 0; i < m; ++i)
                    if (binv[i][r] != 0) u[i] += binv[i][r] * a;
            return u;
        }

        void pivot(std::size_t row, std::size_t entering, const RationalVector& u)
        {
            const Rational piv = u[row];
            for (auto& v : binv[row]) if (v != 0) v /= piv;
            xb[row] /= piv;
            for (std::size_t i = 0; i < m; ++i)
            {
                if (i == row || u[i] == 0) continue;
                const Rational f = u[i];
                for (std::size_t r = 0; r < m; ++r)
                    if (binv[row][r] != 0) binv[i][r] -= f * binv[row][r];
                xb[i] -= f * xb[row];
            }
            basis[row] = entering;
            ++pivots;
        }

        /** Minimizes cost over the current basis; returns false if unbounded. */
        bool optimize(const RationalVector& cost, const std::vector<bool>& allowed)
        {
            std::vector<bool> in_basis(cols.size(), false);
            for (auto b : basis) in_basis[b] = true;
            bool bland = false;
            std::size_t degenerate = 0;
            RationalVector y(m);
            while (true)
            {
                for (std::size_t r = 0; r < m; ++r)
                {
                    Rational s = 0;
                    for (std::size_t i = 0; i < m; ++i)
                        if (cost[basis[i]] != 0 && binv[i][r] != 0) s += cost[basis[i]] * binv[i][r];
                    y[r] = s;
                }

                std::optional<std::size_t> entering;
                Rational best = 0;
                for (std::size_t j = 0; j < cols.size(); ++j)
                {
                    if (in_basis[j] || !allowed[j]) continue;
                    Rational d = cost[j];
                    for (const auto& [r, a] : cols[j])
                        if (y[r] != 0) d -= y[r] * a;
                    if (d < 0 && (!entering || d < best))
                    {
                        entering = j;
                        best = d;
                        if (bland) break;
                    }
                }
                if (!entering) return true;

                RationalVector u = ftran(cols[*entering]);
                std::optional<std::size_t> leave;
                Rational ratio;
                for (std::size_t i = 0; i < m; ++i)
                {
                    if (u[i] <= 0) continue;
                    Rational t = xb[i] / u[i];
                    if (!leave || t < ratio || (t == ratio && basis[i] < basis[*leave]))
                    {
                        leave = i;
                        ratio = t;
                    }
                }
                if (!leave) return false;

                if (ratio == 0)
                {
                    if (++degenerate > kDegenerateStreak) bland = true;
                }
                else
                    degenerate = 0;

                in_basis[basis[*leave]] = false;
                in_basis[*entering] = true;
                pivot(*leave, *entering, u);
            }
        }
};

}   // namespace detail

inline LPSolution solve_lp(const LinearProgram& lp)
{
    check_well_formed(lp);
    const std::size_t nv = lp.num_vars();
    const std::size_t m = lp.constraints.size();

    detail::RevisedSimplex s;
    s.m = m;

    // Structural columns: x_j = plus_j - minus_j for free variables.
    std::vector<detail::RevisedSimplex::Column> structural(nv);
    std::vector<Rational> row_sign(m, Rational(1));
    std::vector<Relation> rel(m);
    s.rhs.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
    {
        const auto& c = lp.constraints[i];
        rel[i] = c.relation;
        if (c.rhs < 0)
        {
            row_sign[i] = -1;
            if (rel[i] == Relation::less_equal) rel[i] = Relation::greater_equal;
            else if (rel[i] == Relation::greater_equal) rel[i] = Relation::less_equal;
        }
        s.rhs[i] = row_sign[i] * c.rhs;
        for (const auto& [j, a] : c.terms)
            if (a != 0) structural[j].emplace_back(i, row_sign[i] * a);
    }
    // merge duplicate (row) entries within a column
    for (auto& col : structural)
    {
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        detail::RevisedSimplex::Column merged;
        for (auto& e : col)
        {
            if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
            else merged.push_back(e);
        }
        std::erase_if(merged, [](const auto& e) { return e.second == 0; });
        col = std::move(merged);
    }

    std::vector<std::size_t> plus(nv), minus(nv, std::numeric_limits<std::size_t>::max());
    for (std::size_t j = 0; j < nv; ++j)
    {
        plus[j] = s.add_column(structural[j], false);
        if (lp.lower[j] == LowerBound::free)
        {
            auto neg = structural[j];
            for (auto& e : neg) e.second = -e.second;
            minus[j] = s.add_column(std::move(neg), false);
        }
    }

    s.basis.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i)
    {
        if (rel[i] == Relation::less_equal)
            s.basis[i] = s.add_column({{i, Rational(1)}}, false);
        else
        {
            if (rel[i] == Relation::greater_equal) s.add_column({{i, Rational(-1)}}, false);
            s.basis[i] = s.add_column({{i, Rational(1)}}, true);
        }
    }
    s.binv.assign(m, RationalVector(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) s.binv[i][i] = 1;
    s.xb = s.rhs;

    const std::size_t ncols = s.cols.size();
    std::vector<bool> all(ncols, true);

    LPSolution sol;
    bool has_artificial = false;
    for (std::size_t j = 0; j < ncols; ++j) has_artificial = has_artificial || s.artificial[j];
    if (has_artificial)
    {
        RationalVector phase1(ncols, Rational(0));
        for (std::size_t j = 0; j < ncols; ++j)
            if (s.artificial[j]) phase1[j] = 1;
        s.optimize(phase1, all);
        Rational infeas = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (s.artificial[s.basis[i]]) infeas += s.xb[i];
        if (infeas > 0)
        {
            sol.status = LPStatus::infeasible;
            sol.pivots = s.pivots;
            return sol;
        }
        // drive zero-level artificials out of the basis where possible
        std::vector<bool> in_basis(ncols, false);
        for (auto b : s.basis) in_basis[b] = true;
        for (std::size_t i = 0; i < m; ++i)
        {
            if (!s.artificial[s.basis[i]]) continue;
            for (std::size_t j = 0; j < ncols; ++j)
            {
                if (s.artificial[j] || in_basis[j]) continue;
                Rational ui = 0;
                for (const auto& [r, a] : s.cols[j])
                    if (s.binv[i][r] != 0) ui += s.binv[i][r] * a;
                if (ui == 0) continue;
                RationalVector u = s.ftran(s.cols[j]);
                in_basis[s.basis[i]] = false;
                in_basis[j] = true;
                s.pivot(i, j, u);
                break;
            }
        }
    }

    RationalVector cost(ncols, Rational(0));
    const Rational dir = lp.sense == Sense::maximize ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < nv; ++j)
    {
        cost[plus[j]] = dir * lp.objective[j];
        if (minus[j] != std::numeric_limits<std::size_t>::max()) cost[minus[j]] = -dir * lp.objective[j];
    }
    std::vector<bool> allowed(ncols);
    for (std::size_t j = 0; j < ncols; ++j) allowed[j] = !s.artificial[j];

    const bool bounded = s.optimize(cost, allowed);
    sol.pivots = s.pivots;
    if (!bounded)
    {
        sol.status = LPStatus::unbounded;
        return sol;
    }

    RationalVector value(ncols, Rational(0));
    for (std::size_t i = 0; i < m; ++i) value[s.basis[i]] = s.xb[i];
    sol.x.assign(nv, Rational(0));
    for (std::size_t j = 0; j < nv; ++j)
    {
        sol.x[j] = value[plus[j]];
        if (minus[j] != std::numeric_limits<std::size_t>::max()) sol.x[j] -= value[minus[j]];
    }
    sol.status = LPStatus::optimal;
    sol.value = objective_value(lp, sol.x);
    return sol;
}

}   // namespace svcrate

#endif
