#ifndef SVCRATE_FIELD_HPP
#define SVCRATE_FIELD_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

/**
 * Arithmetic and dense linear algebra over prime fields GF(q).
 *
 * Elements are canonical integers in [0, q). Matrices are small (desk scale,
 * n up to a few dozen columns), so everything is plain Gaussian elimination.
 */
namespace svcrate {

using Element = std::uint32_t;

enum class FieldOp { add, sub, mul, div, neg, inv };

/** The order q of a prime field. Primality is checked on construction. */
class FieldOrder
{
    private:
        Element q_ = 2;

        static bool is_prime(std::uint64_t n)
        {
            if (n < 2) return false;
            for (std::uint64_t d = 2; d * d <= n; ++d)
                if (n % d == 0) return false;
            return true;
        }

    public:
        FieldOrder() = default;

        explicit FieldOrder(std::uint64_t q)
        {
            // prime powers p^m with m >= 2 are rejected here as well
            if (q > 0x7fffffffULL || !is_prime(q))
                throw InvalidFieldOrder("field order " + std::to_string(q) + " is not a supported prime");
            q_ = static_cast<Element>(q);
        }

        Element value() const { return q_; }

        Element reduce(std::int64_t a) const
        {
            std::int64_t r = a % static_cast<std::int64_t>(q_);
            return static_cast<Element>(r < 0 ? r + q_ : r);
        }

        Element add(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} + b) % q_); }
        Element sub(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} + q_ - b) % q_); }
        Element mul(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} * b) % q_); }
        Element neg(Element a) const { return a == 0 ? 0 : q_ - a; }

        Element inv(Element a) const
        {
            if (a % q_ == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(q_) + ")");
            // Fermat: a^(q-2)
            std::uint64_t result = 1, base = a % q_, e = q_ - 2;
            while (e > 0)
            {
                if (e & 1) result = (result * base) % q_;
                base = (base * base) % q_;
                e >>= 1;
            }
            return static_cast<Element>(result);
        }

        Element div(Element a, Element b) const { return mul(a, inv(b)); }

        bool operator==(const FieldOrder&) const = default;
};

/** Generic entry point dispatching on the operation tag; unary ops ignore b. */
inline Element field_arith(const FieldOrder& f, Element a, Element b, FieldOp op)
{
    switch (op)
    {
        case FieldOp::add: return f.add(a, b);
        case FieldOp::sub: return f.sub(a, b);
        case FieldOp::mul: return f.mul(a, b);
        case FieldOp::div: return f.div(a, b);
        case FieldOp::neg: return f.neg(a);
        case FieldOp::inv: return f.inv(a);
    }
    return 0;
}

class FieldVector
{
    private:
        FieldOrder order_;
        std::vector<Element> entries_;

    public:
        FieldVector() = default;

        FieldVector(FieldOrder order, std::vector<Element> entries)
            : order_(order), entries_(std::move(entries))
        {
            for (auto& e : entries_) e %= order_.value();
        }

        FieldVector(FieldOrder order, std::initializer_list<Element> entries)
            : FieldVector(order, std::vector<Element>(entries)) {}

        static FieldVector zero(FieldOrder order, std::size_t length)
        {
            return FieldVector(order, std::vector<Element>(length, 0));
        }

        static FieldVector unit(FieldOrder order, std::size_t length, std::size_t i)
        {
            FieldVector v = zero(order, length);
            v.entries_.at(i) = 1;
            return v;
        }

        const FieldOrder& order() const { return order_; }
        std::size_t size() const { return entries_.size(); }
        Element operator[](std::size_t i) const { return entries_[i]; }
        const std::vector<Element>& entries() const { return entries_; }

        void set(std::size_t i, Element v) { entries_.at(i) = v % order_.value(); }

        bool is_zero() const
        {
            return std::all_of(entries_.begin(), entries_.end(), [](Element e) { return e == 0; });
        }

        std::size_t weight() const
        {
            return static_cast<std::size_t>(
                std::count_if(entries_.begin(), entries_.end(), [](Element e) { return e != 0; }));
        }

        Element dot(const FieldVector& other) const
        {
            if (other.size() != size() || !(other.order_ == order_))
                throw DimensionMismatch("dot product of vectors with different shapes");
            Element acc = 0;
            for (std::size_t i = 0; i < size(); ++i)
                acc = order_.add(acc, order_.mul(entries_[i], other.entries_[i]));
            return acc;
        }

        FieldVector operator+(const FieldVector& other) const
        {
            if (other.size() != size() || !(other.order_ == order_))
                throw DimensionMismatch("sum of vectors with different shapes");
            FieldVector out = *this;
            for (std::size_t i = 0; i < size(); ++i)
                out.entries_[i] = order_.add(entries_[i], other.entries_[i]);
            return out;
        }

        FieldVector scaled(Element c) const
        {
            FieldVector out = *this;
            for (auto& e : out.entries_) e = order_.mul(e, c);
            return out;
        }

        std::string to_string() const
        {
            std::string s = "(";
            for (std::size_t i = 0; i < size(); ++i)
            {
                if (i) s += ",";
                s += std::to_string(entries_[i]);
            }
            return s + ")";
        }

        bool operator==(const FieldVector& other) const
        {
            return order_ == other.order_ && entries_ == other.entries_;
        }

        std::strong_ordering operator<=>(const FieldVector& other) const
        {
            return entries_ <=> other.entries_;
        }
};

/** Dense row-major k x n matrix over GF(q). */
class FieldMatrix
{
    private:
        FieldOrder order_;
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<Element> data_;

    public:
        FieldMatrix() = default;

        FieldMatrix(FieldOrder order, std::size_t rows, std::size_t cols)
            : order_(order), rows_(rows), cols_(cols), data_(rows * cols, 0)
        {
            if (rows == 0 || cols == 0)
                throw DimensionMismatch("matrix dimensions must be positive");
        }

        FieldMatrix(FieldOrder order, const std::vector<std::vector<Element>>& rows)
            : FieldMatrix(order, rows.size(), rows.empty() ? 0 : rows.front().size())
        {
            for (std::size_t i = 0; i < rows_; ++i)
            {
                if (rows[i].size() != cols_)
                    throw DimensionMismatch("ragged rows in matrix literal");
                for (std::size_t j = 0; j < cols_; ++j)
                    set(i, j, rows[i][j]);
            }
        }

        static FieldMatrix from_columns(FieldOrder order, std::span<const FieldVector> columns)
        {
            if (columns.empty()) throw DimensionMismatch("no columns");
            FieldMatrix m(order, columns.front().size(), columns.size());
            for (std::size_t j = 0; j < columns.size(); ++j)
            {
                if (columns[j].size() != m.rows_)
                    throw DimensionMismatch("columns of unequal length");
                for (std::size_t i = 0; i < m.rows_; ++i)
                    m.set(i, j, columns[j][i]);
            }
            return m;
        }

        static FieldMatrix identity(FieldOrder order, std::size_t k)
        {
            FieldMatrix m(order, k, k);
            for (std::size_t i = 0; i < k; ++i) m.set(i, i, 1);
            return m;
        }

        const FieldOrder& order() const { return order_; }
        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }

        Element operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
        void set(std::size_t i, std::size_t j, Element v) { data_[i * cols_ + j] = v % order_.value(); }

        FieldVector column(std::size_t j) const
        {
            std::vector<Element> c(rows_);
            for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
            return FieldVector(order_, std::move(c));
        }

        FieldVector row(std::size_t i) const
        {
            return FieldVector(order_, std::vector<Element>(data_.begin() + i * cols_,
                                                            data_.begin() + (i + 1) * cols_));
        }

        std::vector<FieldVector> columns() const
        {
            std::vector<FieldVector> out;
            out.reserve(cols_);
            for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
            return out;
        }

        /** Row vector a (length k) times this matrix. */
        FieldVector left_multiply(const FieldVector& a) const
        {
            if (a.size() != rows_) throw DimensionMismatch("message length differs from k");
            std::vector<Element> out(cols_, 0);
            for (std::size_t i = 0; i < rows_; ++i)
            {
                if (a[i] == 0) continue;
                for (std::size_t j = 0; j < cols_; ++j)
                    out[j] = order_.add(out[j], order_.mul(a[i], (*this)(i, j)));
            }
            return FieldVector(order_, std::move(out));
        }

        bool operator==(const FieldMatrix& other) const = default;
};

/** A generator matrix is an ordinary k x n field matrix; validity is checked where it matters. */
using GeneratorMatrix = FieldMatrix;

struct RowReduction
{
    FieldMatrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

inline RowReduction row_reduce(const FieldMatrix& m)
{
    const FieldOrder& f = m.order();
    FieldMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c)
    {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
            {
                Element t = a(p, j);
                a.set(p, j, a(r, j));
                a.set(r, j, t);
            }
        Element s = f.inv(a(r, c));
        for (std::size_t j = 0; j < a.cols(); ++j) a.set(r, j, f.mul(a(r, j), s));
        for (std::size_t i = 0; i < a.rows(); ++i)
        {
            if (i == r || a(i, c) == 0) continue;
            Element factor = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.set(i, j, f.sub(a(i, j), f.mul(factor, a(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return RowReduction{std::move(a), r, std::move(pivots)};
}

inline std::size_t rank(const FieldMatrix& m) { return row_reduce(m).rank; }

/**
 * Solve sum_j alpha_j * columns[j] = target. Free variables are set to zero,
 * so for independent columns the unique solution is returned.
 */
inline std::optional<std::vector<Element>> solve_linear(std::span<const FieldVector> columns,
                                                        const FieldVector& target)
{
    for (const auto& c : columns)
        if (c.size() != target.size() || !(c.order() == target.order()))
            throw DimensionMismatch("solve_linear: column and target shapes differ");
    if (columns.empty())
    {
        if (target.is_zero()) return std::vector<Element>{};
        return std::nullopt;
    }

    const FieldOrder& f = target.order();
    FieldMatrix aug(f, target.size(), columns.size() + 1);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < target.size(); ++i)
            aug.set(i, j, columns[j][i]);
    for (std::size_t i = 0; i < target.size(); ++i)
        aug.set(i, columns.size(), target[i]);

    RowReduction red = row_reduce(aug);
    if (!red.pivot_cols.empty() && red.pivot_cols.back() == columns.size())
        return std::nullopt;

    std::vector<Element> alpha(columns.size(), 0);
    for (std::size_t r = 0; r < red.rank; ++r)
        alpha[red.pivot_cols[r]] = red.rref(r, columns.size());
    return alpha;
}

/**
 * Visit all vectors of GF(q)^length in lexicographic order (first coordinate
 * most significant). The visitor may return false to stop early.
 */
template <typename Visitor>
void for_each_vector(std::size_t length, FieldOrder order, bool nonzero_only, Visitor&& visit)
{
    if (length == 0) throw DimensionMismatch("vector length must be positive");
    std::vector<Element> cur(length, 0);
    const Element q = order.value();
    bool first = true;
    while (true)
    {
        if (!(first && nonzero_only))
        {
            if constexpr (std::is_same_v<std::invoke_result_t<Visitor, const FieldVector&>, bool>)
            {
                if (!visit(FieldVector(order, cur))) return;
            }
            else
                visit(FieldVector(order, cur));
        }
        first = false;
        std::size_t pos = length;
        while (pos > 0)
        {
            --pos;
            if (++cur[pos] < q) break;
            cur[pos] = 0;
            if (pos == 0) return;
        }
    }
}

inline std::vector<FieldVector> enumerate_vectors(std::size_t length, FieldOrder order, bool nonzero_only)
{
    std::vector<FieldVector> out;
    for_each_vector(length, order, nonzero_only, [&](const FieldVector& v) { out.push_back(v); });
    return out;
}

}   // namespace svcrate

template <>
struct std::hash<svcrate::FieldVector>
{
    std::size_t operator()(const svcrate::FieldVector& v) const noexcept
    {
        std::size_t h = v.order().value();
        for (auto e : v.entries()) h = h * 1000003u ^ e;
        return h;
    }
};

#endif
