#ifndef SVCRATE_POLYTOPE_HPP
#define SVCRATE_POLYTOPE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

/**
 * Exact polytopes with both representations, and the double-description
 * method used to convert between them.
 *
 * A facet (c, r) means c . x <= r with integer data, gcd(c, r) = 1. For a
 * lower-dimensional polytope the affine hull is written as pairs of opposing
 * inequalities, and the remaining facets are expressed over a fixed set of
 * coordinates that parametrize the hull, so the H-representation stays
 * canonical.
 */
namespace svcrate {

using IntVector = std::vector<Integer>;

struct Facet
{
    IntVector coeffs;
    Integer rhs;

    bool operator==(const Facet&) const = default;
    bool operator<(const Facet& o) const
    {
        if (coeffs != o.coeffs) return coeffs < o.coeffs;
        return rhs < o.rhs;
    }

    bool satisfied_by(const RationalVector& x) const
    {
        if (x.size() != coeffs.size()) throw DimensionMismatch("facet and point dimensions differ");
        Rational lhs = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (coeffs[i] != 0) lhs += Rational(coeffs[i]) * x[i];
        return lhs <= Rational(rhs);
    }

    bool tight_at(const RationalVector& x) const
    {
        Rational lhs = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (coeffs[i] != 0) lhs += Rational(coeffs[i]) * x[i];
        return lhs == Rational(rhs);
    }
};

struct Polytope
{
    std::size_t dim = 0;
    std::vector<RationalVector> vertices;   // sorted lexicographically
    std::vector<Facet> facets;              // sorted lexicographically
    bool outer_bound_only = false;

    static Polytope from_vertices(std::size_t dim, std::vector<RationalVector> points);
    static Polytope from_halfspaces(std::size_t dim, const std::vector<Facet>& halfspaces);
};

/** Scale a rational vector to the primitive integer vector with the same direction. */
inline IntVector primitive(const RationalVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        if (x != 0) l = boost::multiprecision::lcm(l, denominator_of(x));
    IntVector out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        out[i] = numerator_of(v[i]) * (l / denominator_of(v[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

inline IntVector primitive(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    IntVector out = v;
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

inline Facet make_facet(const RationalVector& coeffs, const Rational& rhs)
{
    RationalVector all = coeffs;
    all.push_back(rhs);
    IntVector p = primitive(all);
    Facet f;
    f.rhs = p.back();
    p.pop_back();
    f.coeffs = std::move(p);
    return f;
}

namespace detail {

/** Row-reduce a rational matrix in place; returns pivot columns. */
inline std::vector<std::size_t> rational_rref(std::vector<RationalVector>& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c)
    {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const Rational s = a[r][c];
        for (auto& x : a[r]) x /= s;
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return pivots;
}

inline std::size_t rational_rank(std::vector<RationalVector> a, std::size_t cols)
{
    return rational_rref(a, cols).size();
}

class Bits
{
    private:
        std::vector<std::uint64_t> w_;

    public:
        explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
        void resize(std::size_t n) { w_.resize((n + 63) / 64, 0); }
        void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
        bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }

        Bits operator&(const Bits& o) const
        {
            Bits r = *this;
            for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
            return r;
        }

        bool contains(const Bits& o) const
        {
            for (std::size_t i = 0; i < w_.size(); ++i)
                if ((w_[i] & o.w_[i]) != o.w_[i]) return false;
            return true;
        }

        std::size_t count() const
        {
            std::size_t c = 0;
            for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
            return c;
        }
};

inline Integer int_dot(const IntVector& a, const IntVector& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

}   // namespace detail

/**
 * Extreme rays of the pointed cone {x in R^D : row . x <= 0 for every row}
 * by the double-description method with the combinatorial adjacency test.
 * Requires the rows to have rank D. Rays are returned as primitive integer
 * vectors in a deterministic order.
 */
inline std::vector<IntVector> extreme_rays(const std::vector<IntVector>& rows, std::size_t D)
{
    using detail::Bits;
    const std::size_t m = rows.size();

    // Greedy choice of D independent rows.
    std::vector<std::size_t> basis_rows;
    {
        std::vector<RationalVector> acc;
        for (std::size_t i = 0; i < m && basis_rows.size() < D; ++i)
        {
            RationalVector r(rows[i].begin(), rows[i].end());
            auto trial = acc;
            trial.push_back(r);
            if (detail::rational_rank(trial, D) == acc.size() + 1)
            {
                acc.push_back(r);
                basis_rows.push_back(i);
            }
        }
        if (basis_rows.size() < D) throw DimensionMismatch("cone is not pointed (row rank < dimension)");
    }

    // Initial simplicial cone: rays are the columns of -A0^{-1}.
    struct Ray
    {
        IntVector v;
        Bits zero;
    };
    std::vector<Ray> rays;
    {
        std::vector<RationalVector> aug(D, RationalVector(2 * D, Rational(0)));
        for (std::size_t i = 0; i < D; ++i)
        {
            for (std::size_t j = 0; j < D; ++j) aug[i][j] = Rational(rows[basis_rows[i]][j]);
            aug[i][D + i] = 1;
        }
        detail::rational_rref(aug, 2 * D);
        for (std::size_t j = 0; j < D; ++j)
        {
            RationalVector col(D);
            for (std::size_t i = 0; i < D; ++i) col[i] = -aug[i][D + j];
            Ray r{primitive(col), Bits(m)};
            rays.push_back(std::move(r));
        }
    }

    std::vector<bool> processed(m, false);
    auto add_row = [&](std::size_t idx) {
        const IntVector& a = rows[idx];
        std::vector<std::size_t> pos, neg, zer;
        std::vector<Integer> val(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r)
        {
            val[r] = detail::int_dot(a, rays[r].v);
            if (val[r] > 0) pos.push_back(r);
            else if (val[r] < 0) neg.push_back(r);
            else zer.push_back(r);
        }
        std::vector<Ray> next;
        next.reserve(zer.size() + neg.size());
        for (auto r : neg) next.push_back(rays[r]);
        for (auto r : zer)
        {
            next.push_back(rays[r]);
            next.back().zero.set(idx);
        }
        for (auto p : pos)
            for (auto n : neg)
            {
                Bits common = rays[p].zero & rays[n].zero;
                if (common.count() + 2 < D) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != n && rays[r].zero.contains(common)) adjacent = false;
                if (!adjacent) continue;
                IntVector v(D);
                for (std::size_t j = 0; j < D; ++j) v[j] = val[p] * rays[n].v[j] - val[n] * rays[p].v[j];
                Ray nr{primitive(v), common};
                nr.zero.set(idx);
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
        processed[idx] = true;
    };

    for (std::size_t i = 0; i < D; ++i)
    {
        // rays of the initial cone are tight on every basis row except their own
        for (std::size_t r = 0; r < D; ++r)
            if (r != i) rays[r].zero.set(basis_rows[i]);
        processed[basis_rows[i]] = true;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!processed[i]) add_row(i);

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

inline bool lex_less(const RationalVector& a, const RationalVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_unique_points(std::vector<RationalVector>& pts)
{
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}   // namespace detail

/** Minimal H-representation of conv(points), with redundant points dropped. */
inline Polytope hull_to_hrep(std::size_t dim, std::vector<RationalVector> points)
{
    if (points.empty()) throw DimensionMismatch("convex hull of an empty point set");
    for (const auto& p : points)
        if (p.size() != dim) throw DimensionMismatch("point of wrong dimension");
    detail::sort_unique_points(points);

    Polytope out;
    out.dim = dim;
    const RationalVector& x0 = points.front();

    // Affine hull: directions v - x0, reduced; pivots parametrize the hull.
    std::vector<RationalVector> dirs;
    for (std::size_t j = 1; j < points.size(); ++j)
    {
        RationalVector d(dim);
        for (std::size_t i = 0; i < dim; ++i) d[i] = points[j][i] - x0[i];
        dirs.push_back(std::move(d));
    }
    const std::vector<std::size_t> piv = detail::rational_rref(dirs, dim);
    const std::size_t d = piv.size();

    std::vector<bool> is_pivot(dim, false);
    for (auto p : piv) is_pivot[p] = true;
    for (std::size_t j = 0; j < dim; ++j)
    {
        if (is_pivot[j]) continue;
        // x_j - sum_r dirs[r][j] x_{piv[r]} = x0_j - sum_r dirs[r][j] x0_{piv[r]}
        RationalVector e(dim, Rational(0));
        e[j] = 1;
        Rational b = x0[j];
        for (std::size_t r = 0; r < d; ++r)
        {
            e[piv[r]] -= dirs[r][j];
            b -= dirs[r][j] * x0[piv[r]];
        }
        out.facets.push_back(make_facet(e, b));
        RationalVector ne(dim);
        for (std::size_t i = 0; i < dim; ++i) ne[i] = -e[i];
        out.facets.push_back(make_facet(ne, -b));
    }

    if (d == 0)
    {
        out.vertices = {x0};
        std::sort(out.facets.begin(), out.facets.end());
        return out;
    }

    // Cone of valid inequalities (c, t) over the pivot coordinates: c . y - t <= 0.
    std::vector<IntVector> rows;
    rows.reserve(points.size());
    for (const auto& p : points)
    {
        RationalVector r(d + 1);
        for (std::size_t a = 0; a < d; ++a) r[a] = p[piv[a]];
        r[d] = -1;
        rows.push_back(primitive(r));
    }
    std::vector<Facet> proper;
    for (const auto& ray : extreme_rays(rows, d + 1))
    {
        bool trivial = true;
        for (std::size_t a = 0; a < d; ++a) trivial = trivial && ray[a] == 0;
        if (trivial) continue;   // 0 <= t
        Facet f;
        f.coeffs.assign(dim, Integer(0));
        for (std::size_t a = 0; a < d; ++a) f.coeffs[piv[a]] = ray[a];
        f.rhs = ray[d];
        proper.push_back(std::move(f));
    }

    for (const auto& p : points)
    {
        std::vector<RationalVector> normals;
        for (const auto& f : proper)
            if (f.tight_at(p))
            {
                RationalVector n(d);
                for (std::size_t a = 0; a < d; ++a) n[a] = Rational(f.coeffs[piv[a]]);
                normals.push_back(std::move(n));
            }
        if (normals.size() >= d && detail::rational_rank(normals, d) == d) out.vertices.push_back(p);
    }

    out.facets.insert(out.facets.end(), proper.begin(), proper.end());
    std::sort(out.facets.begin(), out.facets.end());
    out.facets.erase(std::unique(out.facets.begin(), out.facets.end()), out.facets.end());
    return out;
}

/** Vertices of the bounded polyhedron {x : c . x <= r}. Empty when infeasible. */
inline std::vector<RationalVector> hrep_to_vertices(std::size_t dim, const std::vector<Facet>& halfspaces)
{
    std::vector<IntVector> rows;
    for (const auto& f : halfspaces)
    {
        if (f.coeffs.size() != dim) throw DimensionMismatch("facet of wrong dimension");
        IntVector r = f.coeffs;
        r.push_back(-f.rhs);
        rows.push_back(std::move(r));
    }
    IntVector t(dim + 1, Integer(0));
    t[dim] = -1;
    rows.push_back(std::move(t));

    std::vector<RationalVector> out;
    for (const auto& ray : extreme_rays(rows, dim + 1))
    {
        if (ray[dim] == 0) throw DimensionMismatch("half-space system is unbounded");
        RationalVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(ray[i], ray[dim]);
        out.push_back(std::move(v));
    }
    detail::sort_unique_points(out);
    return out;
}

inline Polytope Polytope::from_vertices(std::size_t dim, std::vector<RationalVector> points)
{
    return hull_to_hrep(dim, std::move(points));
}

inline Polytope Polytope::from_halfspaces(std::size_t dim, const std::vector<Facet>& halfspaces)
{
    auto verts = hrep_to_vertices(dim, halfspaces);
    if (verts.empty()) throw DimensionMismatch("half-space system is infeasible");
    return hull_to_hrep(dim, std::move(verts));
}

inline Facet nonnegativity_facet(std::size_t dim, std::size_t i)
{
    Facet f;
    f.coeffs.assign(dim, Integer(0));
    f.coeffs[i] = -1;
    f.rhs = 0;
    return f;
}

/** First (vertex of inner, facet of outer) pair that violates containment. */
inline std::optional<std::pair<RationalVector, Facet>> first_violation(const Polytope& outer, const Polytope& inner)
{
    if (outer.dim != inner.dim) throw DimensionMismatch("polytopes of different dimension");
    for (const auto& v : inner.vertices)
        for (const auto& f : outer.facets)
            if (!f.satisfied_by(v)) return std::make_pair(v, f);
    return std::nullopt;
}

inline bool polytope_contains(const Polytope& outer, const Polytope& inner)
{
    return !first_violation(outer, inner).has_value();
}

inline bool polytope_equal(const Polytope& a, const Polytope& b)
{
    if (a.dim != b.dim) throw DimensionMismatch("polytopes of different dimension");
    return a.vertices == b.vertices && polytope_contains(a, b) && polytope_contains(b, a);
}

}   // namespace svcrate

#endif
