#ifndef SVCRATE_KNOWN_CODES_HPP
#define SVCRATE_KNOWN_CODES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "field.hpp"
#include "polytope.hpp"
#include "recovery.hpp"
#include "service_lp.hpp"

/**
 * Binary simplex and first-order Reed-Muller codes: generator matrices,
 * closed-form service regions under unit rates, and explicit schedules for
 * the region vertices.
 */
namespace svcrate {

enum class CodeFamily { binary_simplex, rm_nonsystematic, rm_systematic };

inline std::string family_name(CodeFamily f)
{
    switch (f)
    {
        case CodeFamily::binary_simplex: return "simplex";
        case CodeFamily::rm_nonsystematic: return "rm-nonsys";
        case CodeFamily::rm_systematic: return "rm-sys";
    }
    return "?";
}

inline CodeFamily parse_family(const std::string& s)
{
    if (s == "simplex") return CodeFamily::binary_simplex;
    if (s == "rm-nonsys") return CodeFamily::rm_nonsystematic;
    if (s == "rm-sys") return CodeFamily::rm_systematic;
    throw ParseError("unknown code family '" + s + "' (expected simplex, rm-nonsys, rm-sys)");
}

constexpr std::size_t kMaxKnownK = 10;

inline void check_family_k(CodeFamily f, std::size_t k)
{
    const std::size_t lo = f == CodeFamily::binary_simplex ? 1 : 2;
    if (k < lo || k > kMaxKnownK)
        throw UnsupportedK(family_name(f) + " needs " + std::to_string(lo) + " <= k <= " + std::to_string(kMaxKnownK) +
                           ", got " + std::to_string(k));
}

/** All nonzero binary k-vectors as columns, lexicographic. */
inline GeneratorMatrix simplex_generator(std::size_t k)
{
    check_family_k(CodeFamily::binary_simplex, k);
    FieldOrder f2(2);
    auto cols = enumerate_vectors(k, f2, true);
    return FieldMatrix::from_columns(f2, cols);
}

enum class RmVariant { nonsystematic, systematic };

/**
 * Rows r_{k-1}, ..., r_1 and then r_0 (non-systematic) or r_0 + ... + r_{k-1}
 * (systematic), where r_0 is all-ones and r_j indicates the evaluation points
 * x in F_2^{k-1} (lexicographic, x = (x_{k-1}, ..., x_1)) with x_j = 0.
 */
inline GeneratorMatrix rm_generator(std::size_t k, RmVariant variant)
{
    check_family_k(variant == RmVariant::nonsystematic ? CodeFamily::rm_nonsystematic : CodeFamily::rm_systematic, k);
    FieldOrder f2(2);
    auto pts = enumerate_vectors(k - 1, f2, false);
    GeneratorMatrix g(f2, k, pts.size());
    for (std::size_t c = 0; c < pts.size(); ++c)
    {
        Element parity = 1;
        for (std::size_t a = 0; a + 1 < k; ++a)
        {
            // row a is r_{k-1-a}; tuple entry a holds coordinate x_{k-1-a}
            Element bit = pts[c][a] == 0 ? 1 : 0;
            g.set(a, c, bit);
            parity ^= bit;
        }
        g.set(k - 1, c, variant == RmVariant::nonsystematic ? 1 : parity);
    }
    return g;
}

inline GeneratorMatrix family_generator(CodeFamily f, std::size_t k)
{
    switch (f)
    {
        case CodeFamily::binary_simplex: return simplex_generator(k);
        case CodeFamily::rm_nonsystematic: return rm_generator(k, RmVariant::nonsystematic);
        case CodeFamily::rm_systematic: return rm_generator(k, RmVariant::systematic);
    }
    return {};
}

namespace detail {

inline Integer pow2(std::size_t e) { return Integer(1) << static_cast<unsigned>(e); }

inline Facet int_facet(std::vector<long> c, const Integer& r)
{
    Facet f;
    for (auto x : c) f.coeffs.emplace_back(x);
    f.rhs = r;
    return f;
}

inline RationalVector scaled_unit(std::size_t k, std::size_t i, const Rational& s)
{
    RationalVector v(k, Rational(0));
    v[i] = s;
    return v;
}

}   // namespace detail

/**
 * Closed-form region under unit rates. For the systematic RM code with k >= 5
 * only an outer bound is known; the result is then tagged outer_bound_only.
 */
inline Polytope known_region(CodeFamily f, std::size_t k)
{
    check_family_k(f, k);
    using detail::int_facet;
    using detail::pow2;
    std::vector<Facet> hs;
    for (std::size_t i = 0; i < k; ++i) hs.push_back(nonnegativity_facet(k, i));
    bool outer = false;

    switch (f)
    {
        case CodeFamily::binary_simplex:
            hs.push_back(int_facet(std::vector<long>(k, 1), pow2(k - 1)));
            break;
        case CodeFamily::rm_nonsystematic:
        {
            hs.push_back(int_facet(std::vector<long>(k, 1), pow2(k - 2)));
            if (k >= 4)
            {
                // sum_{i<k} lambda_i + (3/2) lambda_k <= 2^{k-2} + 1, cleared of fractions
                std::vector<long> c(k, 2);
                c[k - 1] = 3;
                hs.push_back(int_facet(c, pow2(k - 1) + 2));
            }
            break;
        }
        case CodeFamily::rm_systematic:
        {
            if (k == 2)
            {
                hs.push_back(int_facet({1, 0}, 1));
                hs.push_back(int_facet({0, 1}, 1));
            }
            else if (k == 3 || k == 4)
            {
                for (std::size_t i = 0; i < k; ++i)
                {
                    std::vector<long> c(k, 1);
                    c[i] = 0;
                    hs.push_back(int_facet(c, pow2(k - 2)));
                }
                if (k == 4)
                    for (std::size_t i = 0; i < 4; ++i)
                    {
                        std::vector<long> c(4, 1);
                        c[i] = 3;
                        hs.push_back(int_facet(c, 10));
                    }
            }
            else
            {
                // sum_{i not in S} lambda_i + sum_{j in S} (3 lambda_j - 2) <= 2^{k-1} for all S
                for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask)
                {
                    std::vector<long> c(k, 1);
                    long size = 0;
                    for (std::size_t j = 0; j < k; ++j)
                        if (mask & (std::size_t{1} << j))
                        {
                            c[j] = 3;
                            ++size;
                        }
                    hs.push_back(int_facet(c, pow2(k - 1) + 2 * size));
                }
                outer = true;
            }
            break;
        }
    }
    Polytope p = Polytope::from_halfspaces(k, hs);
    p.outer_bound_only = outer;
    return p;
}

/**
 * The vertex lists stated alongside the closed forms (origin included).
 * Empty for the systematic RM family with k >= 5, where no exact region is known.
 *
 * For the systematic family at k = 4 the stated list is not the full vertex
 * set of the stated inequalities: the four permutations of (2/3, 2/3, 2/3, 8/3)
 * are vertices too, and are servable. known_region follows the inequalities.
 */
inline std::vector<RationalVector> closed_form_vertices(CodeFamily f, std::size_t k)
{
    check_family_k(f, k);
    using detail::scaled_unit;
    std::vector<RationalVector> out;
    out.emplace_back(k, Rational(0));
    const Rational half = Rational(detail::pow2(k - 1)) / 2;   // 2^{k-2}
    switch (f)
    {
        case CodeFamily::binary_simplex:
            for (std::size_t i = 0; i < k; ++i) out.push_back(scaled_unit(k, i, Rational(detail::pow2(k - 1))));
            break;
        case CodeFamily::rm_nonsystematic:
            for (std::size_t i = 0; i + 1 < k; ++i) out.push_back(scaled_unit(k, i, half));
            if (k <= 3)
                out.push_back(scaled_unit(k, k - 1, half));
            else
            {
                out.push_back(scaled_unit(k, k - 1, Rational(detail::pow2(k - 1) + 2, 3)));
                for (std::size_t j = 0; j + 1 < k; ++j)
                {
                    RationalVector w(k, Rational(0));
                    w[j] = half - 2;
                    w[k - 1] = 2;
                    out.push_back(std::move(w));
                }
            }
            break;
        case CodeFamily::rm_systematic:
            if (k == 2)
            {
                out.push_back({Rational(1), Rational(0)});
                out.push_back({Rational(0), Rational(1)});
                out.push_back({Rational(1), Rational(1)});
            }
            else if (k == 3)
            {
                for (std::size_t i = 0; i < 3; ++i) out.push_back(scaled_unit(3, i, 2));
                out.emplace_back(3, Rational(1));
            }
            else if (k == 4)
            {
                for (std::size_t i = 0; i < 4; ++i) out.push_back(scaled_unit(4, i, Rational(10, 3)));
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j)
                        if (i != j)
                        {
                            RationalVector q(4, Rational(0));
                            q[i] = 3;
                            q[j] = 1;
                            out.push_back(std::move(q));
                        }
                out.emplace_back(4, Rational(4, 3));
            }
            else
                out.clear();
            break;
    }
    detail::sort_unique_points(out);
    return out;
}

namespace detail {

struct ScheduleEntry
{
    std::size_t file;
    std::vector<FieldVector> members;
    Rational rate;
};

/** Unordered triples {x, x', x + x' + e_i} inside `pool`, skipping any that touch `avoid`. */
inline std::vector<std::vector<FieldVector>> triples_for(const std::vector<FieldVector>& pool, const FieldVector& ei,
                                                         const std::vector<FieldVector>& avoid = {})
{
    std::set<std::vector<FieldVector>> seen;
    std::set<FieldVector> members(pool.begin(), pool.end());
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a + 1; b < pool.size(); ++b)
        {
            FieldVector c = pool[a] + pool[b] + ei;
            if (!members.count(c) || c == pool[a] || c == pool[b]) continue;
            std::vector<FieldVector> t{pool[a], pool[b], c};
            std::sort(t.begin(), t.end());
            bool bad = false;
            for (const auto& x : avoid)
                bad = bad || std::find(t.begin(), t.end(), x) != t.end();
            if (!bad) seen.insert(t);
        }
    return {seen.begin(), seen.end()};
}

}   // namespace detail

/**
 * Explicit allocation (against build_catalog of the family's generator) for
 * one of the family's region vertices. Throws NotATheoremVertex otherwise.
 */
inline Allocation achievability_schedule(CodeFamily f, std::size_t k, const RationalVector& target)
{
    check_family_k(f, k);
    if (target.size() != k) throw DimensionMismatch("target has wrong length");
    const GeneratorMatrix g = family_generator(f, k);
    const RecoveryCatalog cat = build_catalog(g);
    const FieldOrder f2(2);
    auto e = [&](std::size_t i) { return FieldVector::unit(f2, k, i); };
    const auto columns = g.columns();
    std::map<FieldVector, std::size_t> column_of;
    for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);

    std::vector<detail::ScheduleEntry> plan;
    auto pairs_for = [&](std::size_t i, const std::vector<FieldVector>& pool, const std::vector<FieldVector>& avoid) {
        for (const auto& x : pool)
        {
            if (x[i] != 0) continue;
            FieldVector y = x + e(i);
            if (!column_of.count(y)) continue;
            bool bad = false;
            for (const auto& a : avoid) bad = bad || a == x || a == y;
            if (!bad) plan.push_back({i, {x, y}, Rational(1)});
        }
    };
    auto is = [&](const RationalVector& v) { return v == target; };
    const Rational quarter_n = Rational(detail::pow2(k - 1)) / 2;   // 2^{k-2}

    bool matched = std::all_of(target.begin(), target.end(), [](const Rational& x) { return x == 0; });
    switch (f)
    {
        case CodeFamily::binary_simplex:
            for (std::size_t i = 0; i < k && !matched; ++i)
                if (is(detail::scaled_unit(k, i, Rational(detail::pow2(k - 1)))))
                {
                    plan.push_back({i, {e(i)}, Rational(1)});
                    pairs_for(i, columns, {e(i)});
                    // each pair {x, x+e_i} appears twice in the scan; keep one
                    std::set<std::vector<FieldVector>> uniq;
                    std::vector<detail::ScheduleEntry> dedup;
                    for (auto& s : plan)
                    {
                        std::sort(s.members.begin(), s.members.end());
                        if (uniq.insert(s.members).second) dedup.push_back(s);
                    }
                    plan = std::move(dedup);
                    matched = true;
                }
            break;
        case CodeFamily::rm_nonsystematic:
        {
            const FieldVector ek = e(k - 1);
            std::vector<FieldVector> rest;
            for (const auto& c : columns)
                if (!(c == ek)) rest.push_back(c);
            for (std::size_t i = 0; i + 1 < k && !matched; ++i)
                if (is(detail::scaled_unit(k, i, quarter_n)))
                {
                    pairs_for(i, columns, {});
                    matched = true;
                }
            if (!matched && k == 2 && is(detail::scaled_unit(k, 1, 1)))
            {
                plan.push_back({1, {ek}, Rational(1)});
                matched = true;
            }
            if (!matched && k >= 3 && is(detail::scaled_unit(k, k - 1, Rational(detail::pow2(k - 1) + 2, 3))))
            {
                plan.push_back({k - 1, {ek}, Rational(1)});
                for (auto& t : detail::triples_for(rest, ek))
                    plan.push_back({k - 1, t, Rational(1) / (quarter_n - 1)});
                matched = true;
            }
            if (!matched && k >= 4)
                for (std::size_t j = 0; j + 1 < k && !matched; ++j)
                {
                    RationalVector w(k, Rational(0));
                    w[j] = quarter_n - 2;
                    w[k - 1] = 2;
                    if (!is(w)) continue;
                    const std::size_t m = j == 0 ? 1 : 0;
                    const FieldVector a = ek, b = e(j) + ek, c = e(m) + ek, d = e(j) + e(m) + ek;
                    pairs_for(j, columns, {a, b, c, d});
                    plan.push_back({k - 1, {a}, Rational(1)});
                    plan.push_back({k - 1, {b, c, d}, Rational(1)});
                    matched = true;
                }
            break;
        }
        case CodeFamily::rm_systematic:
        {
            if (k == 2 || k == 3)
            {
                for (std::size_t mask = 1; mask < (std::size_t{1} << k) && !matched; ++mask)
                {
                    RationalVector v(k, Rational(0));
                    for (std::size_t i = 0; i < k; ++i)
                        if (mask & (std::size_t{1} << i)) v[i] = 1;
                    if (k == 3 && mask != 7) continue;
                    if (!is(v)) continue;
                    for (std::size_t i = 0; i < k; ++i)
                        if (v[i] == 1) plan.push_back({i, {e(i)}, Rational(1)});
                    matched = true;
                }
            }
            for (std::size_t i = 0; i < k && !matched && k >= 3; ++i)
            {
                if (!is(detail::scaled_unit(k, i, Rational(detail::pow2(k - 1) + 2, 3)))) continue;
                std::vector<FieldVector> rest;
                for (const auto& c : columns)
                    if (!(c == e(i))) rest.push_back(c);
                plan.push_back({i, {e(i)}, Rational(1)});
                for (auto& t : detail::triples_for(rest, e(i)))
                    plan.push_back({i, t, Rational(1) / (quarter_n - 1)});
                matched = true;
            }
            for (std::size_t i = 0; i < k && !matched && k >= 4; ++i)
                for (std::size_t j = 0; j < k && !matched; ++j)
                {
                    if (i == j) continue;
                    RationalVector q(k, Rational(0));
                    q[i] = Rational(detail::pow2(k - 1) + 1, 3);
                    q[j] = 1;
                    if (!is(q)) continue;
                    std::vector<FieldVector> rest;
                    for (const auto& c : columns)
                        if (!(c == e(i))) rest.push_back(c);
                    plan.push_back({i, {e(i)}, Rational(1)});
                    plan.push_back({j, {e(j)}, Rational(1)});
                    for (auto& t : detail::triples_for(rest, e(i), {e(j)}))
                        plan.push_back({i, t, Rational(1) / (quarter_n - 2)});
                    matched = true;
                }
            if (!matched && k == 4 && is(RationalVector(4, Rational(4, 3))))
            {
                std::vector<FieldVector> heavy;   // the weight-3 columns 1 - e_m
                for (const auto& c : columns)
                    if (c.weight() == 3) heavy.push_back(c);
                for (std::size_t i = 0; i < 4; ++i)
                {
                    plan.push_back({i, {e(i)}, Rational(1)});
                    std::vector<FieldVector> t;
                    for (const auto& h : heavy)
                        if (h[i] != 0) t.push_back(h);
                    plan.push_back({i, t, Rational(1, 3)});
                }
                matched = true;
            }
            break;
        }
    }
    if (!matched) throw NotATheoremVertex("target is not a vertex with a known construction for " + family_name(f));

    Allocation a = Allocation::zero(cat);
    for (const auto& s : plan)
    {
        std::vector<std::size_t> cols;
        for (const auto& v : s.members) cols.push_back(column_of.at(v));
        std::sort(cols.begin(), cols.end());
        const auto& sets = cat.sets[s.file];
        auto it = std::find_if(sets.begin(), sets.end(), [&](const RecoverySet& r) { return r.columns == cols; });
        if (it == sets.end()) throw NotATheoremVertex("construction uses a set that is not a reduced recovery set");
        a.rates[s.file][static_cast<std::size_t>(it - sets.begin())] += s.rate;
    }
    return a;
}

}   // namespace svcrate

#endif
