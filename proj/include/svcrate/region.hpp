#ifndef SVCRATE_REGION_HPP
#define SVCRATE_REGION_HPP

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <vector>

#include "polytope.hpp"
#include "recovery.hpp"
#include "service_lp.hpp"

/**
 * The service rate region S(G, mu) as an exact polytope.
 *
 * compute_region grows a point set J from the origin and the axis maxima.
 * Each round takes conv(J), maximizes every facet normal h >= 0 over the
 * service LP, and adds the optimizer of the first facet (canonical order)
 * that can be pushed outward. J is kept closed under zeroing coordinates:
 * S is downward closed, so this adds only points of S, and it makes conv(J)
 * downward closed too. A downward-closed polytope in the orthant has no
 * facets other than lambda_i >= 0 and ones with h >= 0, so when every such
 * facet is certified tight, conv(J) = S.
 *
 * fm_projection_oracle computes the same polytope independently by
 * Fourier-Motzkin elimination of the split variables lambda_{i,j}.
 */
namespace svcrate {

struct ServiceRegion
{
    Polytope polytope;
    RationalVector mu;
    std::size_t rounds = 0;
    std::size_t lp_solves = 0;

    bool unit_rates() const
    {
        return std::all_of(mu.begin(), mu.end(), [](const Rational& m) { return m == 1; });
    }
};

struct RegionOptions
{
    std::size_t threads = 1;   // facet LPs solved concurrently per batch
};

namespace detail {

inline void add_with_zeroings(std::vector<RationalVector>& J, const RationalVector& p)
{
    const std::size_t k = p.size();
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < k; ++i)
        if (p[i] != 0) support.push_back(i);
    for (std::size_t mask = 0; mask < (std::size_t{1} << support.size()); ++mask)
    {
        RationalVector q = p;
        for (std::size_t b = 0; b < support.size(); ++b)
            if (mask & (std::size_t{1} << b)) q[support[b]] = 0;
        J.push_back(std::move(q));
    }
}

struct FacetOptimum
{
    Rational value;
    RationalVector point;
};

inline FacetOptimum maximize_direction(const RecoveryCatalog& cat, const RationalVector& mu, const IntVector& h)
{
    RationalVector hr(h.begin(), h.end());
    LPSolution s = solve_lp(build_primal(cat, mu, hr));
    if (s.status != LPStatus::optimal) throw MalformedLP("service LP did not reach an optimum");
    return FacetOptimum{s.value, RationalVector(s.x.begin(), s.x.begin() + static_cast<std::ptrdiff_t>(cat.k))};
}

inline bool expandable(const Facet& f)
{
    bool any_positive = false;
    for (const auto& c : f.coeffs)
    {
        if (c < 0) return false;
        if (c > 0) any_positive = true;
    }
    return any_positive;
}

}   // namespace detail

inline ServiceRegion compute_region(const RecoveryCatalog& cat, const RationalVector& mu,
                                    const RegionOptions& opts = {})
{
    detail::check_service_inputs(cat, mu, RationalVector(cat.k, Rational(0)));
    const std::size_t k = cat.k;
    ServiceRegion out;
    out.mu = mu;

    std::vector<RationalVector> J;
    J.emplace_back(k, Rational(0));
    const RationalVector axis = axis_maxima(cat, mu);
    out.lp_solves += k;
    for (std::size_t i = 0; i < k; ++i)
    {
        RationalVector v(k, Rational(0));
        v[i] = axis[i];
        J.push_back(std::move(v));
    }

    std::map<IntVector, detail::FacetOptimum> cache;
    const std::size_t batch = std::max<std::size_t>(1, opts.threads);
    while (true)
    {
        ++out.rounds;
        Polytope hull = hull_to_hrep(k, J);
        J = hull.vertices;

        std::vector<const Facet*> pending;
        for (const auto& f : hull.facets)
            if (detail::expandable(f)) pending.push_back(&f);

        std::optional<RationalVector> improvement;
        for (std::size_t start = 0; start < pending.size() && !improvement; start += batch)
        {
            const std::size_t end = std::min(pending.size(), start + batch);
            std::vector<std::pair<std::size_t, std::future<detail::FacetOptimum>>> jobs;
            for (std::size_t t = start; t < end; ++t)
            {
                if (cache.count(pending[t]->coeffs)) continue;
                const IntVector h = pending[t]->coeffs;
                ++out.lp_solves;
                if (batch == 1)
                    cache.emplace(h, detail::maximize_direction(cat, mu, h));
                else
                    jobs.emplace_back(t, std::async(std::launch::async, [&cat, &mu, h] {
                                          return detail::maximize_direction(cat, mu, h);
                                      }));
            }
            for (auto& [t, fut] : jobs) cache.emplace(pending[t]->coeffs, fut.get());
            for (std::size_t t = start; t < end; ++t)
            {
                const auto& opt = cache.at(pending[t]->coeffs);
                if (opt.value > Rational(pending[t]->rhs))
                {
                    improvement = opt.point;
                    break;
                }
            }
        }
        if (!improvement)
        {
            out.polytope = std::move(hull);
            return out;
        }
        detail::add_with_zeroings(J, *improvement);
    }
}

inline ServiceRegion compute_region(const GeneratorMatrix& g, const RationalVector& mu, const RegionOptions& opts = {})
{
    return compute_region(build_catalog(g), mu, opts);
}

namespace detail {

struct Inequality
{
    RationalVector a;   // over all variables
    Rational b;

    bool operator<(const Inequality& o) const
    {
        if (a != o.a) return std::lexicographical_compare(a.begin(), a.end(), o.a.begin(), o.a.end());
        return b < o.b;
    }
    bool operator==(const Inequality&) const = default;
};

/** Scale so the first nonzero coefficient has absolute value 1. */
inline Inequality normalize(Inequality q)
{
    for (const auto& c : q.a)
        if (c != 0)
        {
            Rational s = c < 0 ? Rational(-c) : c;
            for (auto& x : q.a) x /= s;
            q.b /= s;
            break;
        }
    return q;
}

inline bool is_redundant(const std::vector<Inequality>& sys, std::size_t idx, const std::vector<bool>& alive)
{
    const std::size_t nv = sys[idx].a.size();
    LinearProgram lp;
    lp.sense = Sense::maximize;
    for (std::size_t j = 0; j < nv; ++j) lp.add_variable(sys[idx].a[j], LowerBound::free);
    for (std::size_t r = 0; r < sys.size(); ++r)
    {
        if (r == idx || !alive[r]) continue;
        SparseRow row;
        for (std::size_t j = 0; j < nv; ++j)
            if (sys[r].a[j] != 0) row.emplace_back(j, sys[r].a[j]);
        lp.add_constraint(std::move(row), Relation::less_equal, sys[r].b);
    }
    LPSolution s = solve_lp(lp);
    return s.status == LPStatus::optimal && s.value <= sys[idx].b;
}

inline std::vector<Inequality> prune(std::vector<Inequality> sys)
{
    std::vector<Inequality> kept;
    for (auto& q : sys)
    {
        bool zero = std::all_of(q.a.begin(), q.a.end(), [](const Rational& x) { return x == 0; });
        if (zero)
        {
            if (q.b < 0) throw MalformedLP("projection is empty");
            continue;
        }
        kept.push_back(normalize(std::move(q)));
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    // among parallel rows keep the tightest
    std::vector<Inequality> tight;
    for (auto& q : kept)
    {
        if (!tight.empty() && tight.back().a == q.a) continue;   // sorted: smaller b first
        tight.push_back(std::move(q));
    }
    std::vector<bool> alive(tight.size(), true);
    for (std::size_t r = 0; r < tight.size(); ++r)
        if (is_redundant(tight, r, alive)) alive[r] = false;
    std::vector<Inequality> out;
    for (std::size_t r = 0; r < tight.size(); ++r)
        if (alive[r]) out.push_back(std::move(tight[r]));
    return out;
}

}   // namespace detail

constexpr std::size_t kDefaultOracleLimit = 24;

/** S(G, mu) as the projection of the split-rate polytope onto lambda-space. */
inline Polytope fm_projection_oracle(const RecoveryCatalog& cat, const RationalVector& mu,
                                     std::size_t limit = kDefaultOracleLimit)
{
    detail::check_service_inputs(cat, mu, RationalVector(cat.k, Rational(0)));
    const std::size_t k = cat.k;
    const std::size_t T = cat.total();
    if (T > limit)
        throw OracleTooLarge("catalog has " + std::to_string(T) + " recovery sets; oracle limit is " +
                             std::to_string(limit));
    const std::size_t nv = k + T;
    std::vector<std::size_t> off(k);
    for (std::size_t i = 0, next = k; i < k; ++i)
    {
        off[i] = next;
        next += cat.sets[i].size();
    }

    using detail::Inequality;
    std::vector<Inequality> sys;
    for (std::size_t l = 0; l < cat.n; ++l)
    {
        Inequality q{RationalVector(nv, Rational(0)), mu[l]};
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < cat.sets[i].size(); ++j)
                for (auto c : cat.sets[i][j].columns)
                    if (c == l) q.a[off[i] + j] += 1;
        sys.push_back(std::move(q));
    }
    for (std::size_t v = k; v < nv; ++v)
    {
        Inequality q{RationalVector(nv, Rational(0)), Rational(0)};
        q.a[v] = -1;
        sys.push_back(std::move(q));
    }

    // lambda_i = sum_j lambda_{i,j}: substitute out the last split variable of each file
    std::vector<bool> eliminated(nv, false);
    for (std::size_t i = 0; i < k; ++i)
    {
        const std::size_t last = off[i] + cat.sets[i].size() - 1;
        for (auto& q : sys)
        {
            const Rational c = q.a[last];
            if (c == 0) continue;
            q.a[i] += c;
            for (std::size_t v = off[i]; v < last; ++v) q.a[v] -= c;
            q.a[last] = 0;
        }
        eliminated[last] = true;
    }
    sys = detail::prune(std::move(sys));

    while (true)
    {
        std::optional<std::size_t> pick;
        std::size_t best = 0;
        for (std::size_t v = k; v < nv; ++v)
        {
            if (eliminated[v]) continue;
            std::size_t p = 0, n = 0;
            for (const auto& q : sys)
            {
                if (q.a[v] > 0) ++p;
                else if (q.a[v] < 0) ++n;
            }
            const std::size_t score = p * n;
            if (!pick || score < best)
            {
                pick = v;
                best = score;
            }
        }
        if (!pick) break;
        const std::size_t v = *pick;
        std::vector<Inequality> next, pos, neg;
        for (auto& q : sys)
        {
            if (q.a[v] > 0) pos.push_back(std::move(q));
            else if (q.a[v] < 0) neg.push_back(std::move(q));
            else next.push_back(std::move(q));
        }
        for (const auto& p : pos)
            for (const auto& n : neg)
            {
                // (-n_v) * p + p_v * n cancels v
                const Rational sp = -n.a[v], sn = p.a[v];
                Inequality c{RationalVector(nv), sp * p.b + sn * n.b};
                for (std::size_t j = 0; j < nv; ++j) c.a[j] = sp * p.a[j] + sn * n.a[j];
                c.a[v] = 0;
                next.push_back(std::move(c));
            }
        eliminated[v] = true;
        sys = detail::prune(std::move(next));
    }

    std::vector<Facet> facets;
    for (const auto& q : sys)
    {
        RationalVector a(q.a.begin(), q.a.begin() + static_cast<std::ptrdiff_t>(k));
        facets.push_back(make_facet(a, q.b));
    }
    for (std::size_t i = 0; i < k; ++i) facets.push_back(nonnegativity_facet(k, i));
    return Polytope::from_halfspaces(k, facets);
}

}   // namespace svcrate

#endif
