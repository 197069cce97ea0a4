#ifndef SVCRATE_PROJECTIVE_HPP
#define SVCRATE_PROJECTIVE_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "field.hpp"
#include "rational.hpp"

/**
 * Points and hyperplanes of PG(k-1, q), and the multiset of points that a
 * full-length generator matrix induces. A point is a 1-subspace of GF(q)^k,
 * stored by its representative scaled so the first nonzero coordinate is 1.
 */
namespace svcrate {

class ProjectivePoint
{
    private:
        FieldVector rep_;

    public:
        ProjectivePoint() = default;

        explicit ProjectivePoint(const FieldVector& v)
        {
            std::size_t i = 0;
            while (i < v.size() && v[i] == 0) ++i;
            if (i == v.size()) throw ZeroVector("the zero vector spans no projective point");
            rep_ = v.scaled(v.order().inv(v[i]));
        }

        const FieldVector& representative() const { return rep_; }
        std::size_t dimension() const { return rep_.size(); }

        bool operator==(const ProjectivePoint&) const = default;
        auto operator<=>(const ProjectivePoint& other) const { return rep_ <=> other.rep_; }
};

/** The hyperplane {x : normal . x = 0}; the normal is normalized like a point. */
class Hyperplane
{
    private:
        ProjectivePoint normal_;

    public:
        Hyperplane() = default;
        explicit Hyperplane(const FieldVector& normal) : normal_(normal) {}

        const FieldVector& normal() const { return normal_.representative(); }

        bool contains(const FieldVector& v) const { return normal().dot(v) == 0; }
        bool contains(const ProjectivePoint& p) const { return contains(p.representative()); }

        bool operator==(const Hyperplane&) const = default;
        auto operator<=>(const Hyperplane& other) const { return normal_ <=> other.normal_; }
};

/** All points of PG(k-1,q), lexicographic by normalized representative. */
inline std::vector<ProjectivePoint> enumerate_points(std::size_t k, FieldOrder q)
{
    std::vector<ProjectivePoint> out;
    for_each_vector(k, q, true, [&](const FieldVector& v) {
        std::size_t i = 0;
        while (v[i] == 0) ++i;
        if (v[i] == 1) out.emplace_back(v);
    });
    return out;
}

inline std::vector<Hyperplane> enumerate_hyperplanes(std::size_t k, FieldOrder q)
{
    if (k < 2) throw DimensionMismatch("hyperplanes need k >= 2");
    std::vector<Hyperplane> out;
    for (const auto& p : enumerate_points(k, q)) out.emplace_back(p.representative());
    return out;
}

/** Number of v'-dimensional subspaces of GF(q)^v, written [v choose k]_q. */
inline Integer gaussian_binomial(long v, long k, FieldOrder q)
{
    if (v < 0) throw DimensionMismatch("gaussian_binomial needs v >= 0");
    if (k < 0 || k > v) return 0;
    Integer num = 1, den = 1, qq = q.value();
    for (long i = 0; i < k; ++i)
    {
        num *= boost::multiprecision::pow(qq, static_cast<unsigned>(v - i)) - 1;
        den *= boost::multiprecision::pow(qq, static_cast<unsigned>(i + 1)) - 1;
    }
    return num / den;
}

/** Checks full length and rank k; throws ZeroColumn / RankDeficient. */
inline void validate_generator(const GeneratorMatrix& g)
{
    for (std::size_t j = 0; j < g.cols(); ++j)
        if (g.column(j).is_zero())
            throw ZeroColumn("column " + std::to_string(j + 1) + " of the generator matrix is zero");
    RowReduction red = row_reduce(g);
    if (red.rank < g.rows())
        throw RankDeficient("generator matrix has rank " + std::to_string(red.rank) + " < k = " +
                            std::to_string(g.rows()) + " (row " + std::to_string(red.rank + 1) +
                            " of the echelon form vanishes)");
}

struct PointData
{
    std::size_t chi = 0;               // multiplicity
    Rational mu = 0;                   // aggregated service rate
    std::vector<std::size_t> servers;  // columns mapping to the point
};

class PointMultiset
{
    private:
        std::size_t ambient_k_ = 0;
        FieldOrder order_;
        std::map<ProjectivePoint, PointData> points_;

    public:
        PointMultiset(std::size_t ambient_k, FieldOrder order) : ambient_k_(ambient_k), order_(order) {}

        void add(const ProjectivePoint& p, std::size_t server, const Rational& mu)
        {
            if (p.dimension() != ambient_k_) throw DimensionMismatch("point of wrong dimension");
            auto& d = points_[p];
            d.chi += 1;
            d.mu += mu;
            d.servers.push_back(server);
        }

        std::size_t ambient_k() const { return ambient_k_; }
        const FieldOrder& order() const { return order_; }
        const std::map<ProjectivePoint, PointData>& points() const { return points_; }

        std::size_t chi(const ProjectivePoint& p) const
        {
            auto it = points_.find(p);
            return it == points_.end() ? 0 : it->second.chi;
        }

        Rational mu(const ProjectivePoint& p) const
        {
            auto it = points_.find(p);
            return it == points_.end() ? Rational(0) : it->second.mu;
        }

        std::size_t cardinality() const
        {
            std::size_t n = 0;
            for (const auto& [p, d] : points_) n += d.chi;
            return n;
        }

        Rational total_mu() const
        {
            Rational s = 0;
            for (const auto& [p, d] : points_) s += d.mu;
            return s;
        }
};

inline PointMultiset induced_multiset(const GeneratorMatrix& g, const RationalVector& mu_servers)
{
    if (mu_servers.size() != g.cols())
        throw DimensionMismatch("service-rate vector length differs from n");
    for (const auto& m : mu_servers)
        if (m < 0) throw DimensionMismatch("service rates must be nonnegative");
    validate_generator(g);
    PointMultiset ms(g.rows(), g.order());
    for (std::size_t j = 0; j < g.cols(); ++j)
        ms.add(ProjectivePoint(g.column(j)), j, mu_servers[j]);
    return ms;
}

inline PointMultiset induced_multiset(const GeneratorMatrix& g)
{
    return induced_multiset(g, RationalVector(g.cols(), Rational(1)));
}

/** #(G cap H). */
inline std::size_t restricted_cardinality(const PointMultiset& ms, const Hyperplane& h)
{
    if (h.normal().size() != ms.ambient_k()) throw DimensionMismatch("hyperplane of wrong dimension");
    std::size_t n = 0;
    for (const auto& [p, d] : ms.points())
        if (h.contains(p)) n += d.chi;
    return n;
}

/** w(aG) = n - #{j : a . g_j = 0}. */
inline std::size_t codeword_weight(const GeneratorMatrix& g, const FieldVector& a)
{
    if (a.size() != g.rows()) throw DimensionMismatch("message length differs from k");
    if (a.is_zero()) throw ZeroVector("codeword_weight needs a nonzero message");
    return g.left_multiply(a).weight();
}

/** d = n - max over hyperplanes H of #(G cap H). */
inline std::size_t min_distance_geometric(const GeneratorMatrix& g)
{
    PointMultiset ms = induced_multiset(g);
    const std::size_t n = g.cols();
    if (g.rows() == 1) return n;   // PG(0,q) has only the empty hyperplane
    std::size_t best = 0;
    for (const auto& h : enumerate_hyperplanes(g.rows(), g.order()))
        best = std::max(best, restricted_cardinality(ms, h));
    return n - best;
}

}   // namespace svcrate

#endif
