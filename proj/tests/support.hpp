#ifndef SVCRATE_TESTS_SUPPORT_HPP
#define SVCRATE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "svcrate/svcrate.hpp"

namespace support {

using namespace svcrate;

/** Seeded source of small random instances. */
class Gen
{
    private:
        std::mt19937_64 rng_;

    public:
        explicit Gen(std::uint64_t seed) : rng_(seed) {}

        std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
        std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

        FieldOrder field()
        {
            static const std::uint64_t qs[] = {2, 2, 3, 5};
            return FieldOrder(qs[below(4)]);
        }

        /** Full-rank k x n matrix, no zero column; retries until valid. */
        GeneratorMatrix code(FieldOrder f, std::size_t k, std::size_t n)
        {
            while (true)
            {
                GeneratorMatrix g(f, k, n);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < n; ++j) g.set(i, j, static_cast<Element>(below(f.value())));
                bool zero_col = false;
                for (std::size_t j = 0; j < n; ++j) zero_col = zero_col || g.column(j).is_zero();
                if (!zero_col && rank(g) == k) return g;
            }
        }

        GeneratorMatrix small_code(std::size_t max_k, std::size_t max_n)
        {
            FieldOrder f = field();
            std::size_t k = between(1, max_k);
            std::size_t n = between(k, max_n);
            return code(f, k, n);
        }

        /** Rates p/d with p in [0, 3], d in {1, 2, 3}. */
        Rational rate() { return Rational(static_cast<long>(below(4)), static_cast<long>(between(1, 3))); }

        RationalVector rates(std::size_t n, bool allow_zero = true)
        {
            RationalVector mu(n);
            for (auto& m : mu)
                do m = rate();
                while (!allow_zero && m == 0);
            return mu;
        }

        RationalVector small_ints(std::size_t k, long hi)
        {
            RationalVector h(k);
            for (auto& x : h) x = static_cast<long>(below(static_cast<std::size_t>(hi) + 1));
            return h;
        }
};

/** Every nonzero codeword weight, by direct enumeration of messages. */
inline std::size_t brute_min_weight(const GeneratorMatrix& g)
{
    std::size_t best = g.cols();
    for (const auto& a : enumerate_vectors(g.rows(), g.order(), true)) best = std::min(best, g.left_multiply(a).weight());
    return best;
}

/**
 * Reduced recovery sets by trying every coefficient vector with all entries
 * nonzero on every column subset of size <= k; no linear solve involved.
 */
inline std::vector<std::vector<std::size_t>> brute_recovery_sets(const GeneratorMatrix& g, std::size_t file)
{
    const std::size_t k = g.rows(), n = g.cols();
    const Element q = g.order().value();
    const FieldVector target = FieldVector::unit(g.order(), k, file);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask)
    {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (std::size_t{1} << j)) cols.push_back(j);
        if (cols.size() > k) continue;
        std::vector<FieldVector> vs;
        for (auto c : cols) vs.push_back(g.column(c));
        if (rank(FieldMatrix::from_columns(g.order(), vs)) != cols.size()) continue;
        std::vector<Element> alpha(cols.size(), 1);
        bool hit = false;
        while (!hit)
        {
            FieldVector s = FieldVector::zero(g.order(), k);
            for (std::size_t t = 0; t < cols.size(); ++t) s = s + vs[t].scaled(alpha[t]);
            hit = s == target;
            std::size_t t = 0;
            while (t < alpha.size() && ++alpha[t] == q) alpha[t++] = 1;
            if (t == alpha.size()) break;
        }
        if (hit) out.push_back(cols);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

/** Every column subset whose span contains e_i, reduced or not. */
inline RecoveryCatalog all_subset_catalog(const GeneratorMatrix& g)
{
    RecoveryCatalog cat{g.rows(), g.cols(), {}};
    for (std::size_t i = 0; i < g.rows(); ++i)
    {
        std::vector<RecoverySet> sets;
        const FieldVector target = FieldVector::unit(g.order(), g.rows(), i);
        for (std::size_t mask = 1; mask < (std::size_t{1} << g.cols()); ++mask)
        {
            std::vector<std::size_t> cols;
            std::vector<FieldVector> vs;
            for (std::size_t j = 0; j < g.cols(); ++j)
                if (mask & (std::size_t{1} << j))
                {
                    cols.push_back(j);
                    vs.push_back(g.column(j));
                }
            if (solve_linear(vs, target)) sets.push_back(RecoverySet{i, cols, {}});
        }
        cat.sets.push_back(std::move(sets));
    }
    return cat;
}

inline RationalVector unit_rates(std::size_t n) { return RationalVector(n, Rational(1)); }

inline RationalVector scaled(RationalVector v, const Rational& c)
{
    for (auto& x : v) x *= c;
    return v;
}

}   // namespace support

#endif
