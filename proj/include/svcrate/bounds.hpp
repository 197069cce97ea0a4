#ifndef SVCRATE_BOUNDS_HPP
#define SVCRATE_BOUNDS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "polytope.hpp"
#include "projective.hpp"
#include "region.hpp"

/**
 * Hyperplane bounds on the service rate region. A file i whose unit vector
 * is off a hyperplane H cannot be recovered from points of H alone, so each
 * of its recovery sets uses capacity outside H; summing over the files
 * avoided by H gives a valid inequality. With unit rates the same argument
 * turns the uniform axis rate into a lower bound on the minimum distance.
 */
namespace svcrate {

/** h . lambda <= rhs over the nonnegative orthant. */
struct ValidInequality
{
    RationalVector coeffs;
    Rational rhs;

    bool operator==(const ValidInequality&) const = default;
};

/** Total service rate of the points off h. */
inline Rational hyperplane_capacity(const PointMultiset& ms, const Hyperplane& h)
{
    if (h.normal().size() != ms.ambient_k()) throw DimensionMismatch("hyperplane of wrong dimension");
    Rational s = 0;
    for (const auto& [p, d] : ms.points())
        if (!h.contains(p)) s += d.mu;
    return s;
}

/** sum_{i : e_i not in h} lambda_i <= hyperplane_capacity(ms, h). */
inline ValidInequality hyperplane_cut(const PointMultiset& ms, const Hyperplane& h)
{
    const std::size_t k = ms.ambient_k();
    ValidInequality cut{RationalVector(k, Rational(0)), hyperplane_capacity(ms, h)};
    bool any = false;
    for (std::size_t i = 0; i < k; ++i)
        if (h.normal()[i] != 0)   // e_i lies off h
        {
            cut.coeffs[i] = 1;
            any = true;
        }
    if (!any) throw EmptyIndexSet("hyperplane contains every unit vector");
    return cut;
}

/** One cut per coefficient pattern (the tightest one), sorted by coefficients. */
inline std::vector<ValidInequality> all_hyperplane_cuts(const PointMultiset& ms)
{
    std::map<RationalVector, Rational> best;
    if (ms.ambient_k() < 2)
    {
        // PG(0,q): the only hyperplane is empty and every point lies off it
        return {ValidInequality{RationalVector{Rational(1)}, ms.total_mu()}};
    }
    for (const auto& h : enumerate_hyperplanes(ms.ambient_k(), ms.order()))
    {
        ValidInequality c = hyperplane_cut(ms, h);
        auto it = best.find(c.coeffs);
        if (it == best.end()) best.emplace(c.coeffs, c.rhs);
        else if (c.rhs < it->second) it->second = c.rhs;
    }
    std::vector<ValidInequality> out;
    for (auto& [c, r] : best) out.push_back(ValidInequality{c, r});
    return out;
}

/** Largest t with t * e_i in the polytope along one axis, read off the facets. */
inline Rational axis_extent(const Polytope& region, std::size_t i)
{
    std::optional<Rational> hi;
    for (const auto& f : region.facets)
    {
        if (f.coeffs[i] <= 0) continue;
        Rational t = Rational(f.rhs) / Rational(f.coeffs[i]);
        if (!hi || t < *hi) hi = t;
    }
    if (!hi) throw DimensionMismatch("region is unbounded along an axis");
    return *hi;
}

/** Largest s with s * e_i in the region for every i. */
inline Rational uniform_axis_rate(const Polytope& region)
{
    Rational s = axis_extent(region, 0);
    for (std::size_t i = 1; i < region.dim; ++i) s = std::min(s, axis_extent(region, i));
    return s;
}

/** ceil(uniform_axis_rate) <= d; valid only for unit server rates. */
inline Integer min_distance_lower_bound(const ServiceRegion& region)
{
    if (!region.unit_rates()) throw NonUnitRates("minimum-distance bound needs mu_l = 1 for every server");
    return ceil_of(uniform_axis_rate(region.polytope));
}

/** Slack of a cut against a region: rhs minus the maximum of h . lambda over the vertices. */
inline Rational cut_slack(const ValidInequality& cut, const Polytope& region)
{
    Rational best = 0;
    for (const auto& v : region.vertices) best = std::max(best, dot(cut.coeffs, v));
    return cut.rhs - best;
}

}   // namespace svcrate

#endif
