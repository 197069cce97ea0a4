#ifndef SVCRATE_IO_HPP
#define SVCRATE_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polytope.hpp"
#include "projective.hpp"

/**
 * Text formats.
 *
 * Generator matrix: first line `q k n`, then k lines of n entries in [0, q).
 *
 * Polytope: first line `dim k`, then `V p1/d1 ... pk/dk` vertex lines and
 * `F c1 ... ck r` facet lines (sum c_i x_i <= r), each block sorted, and an
 * optional trailing `TAG outer-bound-only`. Canonical output always writes
 * the denominator, so `2` is written `2/1`.
 */
namespace svcrate {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

inline std::vector<std::string> content_lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
    {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(line);
    }
    return out;
}

inline unsigned long long parse_uint(const std::string& tok, const std::string& what)
{
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(what + ": expected a nonnegative integer, got '" + tok + "'");
    try
    {
        return std::stoull(tok);
    }
    catch (const std::exception&)
    {
        throw ParseError(what + ": integer out of range '" + tok + "'");
    }
}

inline Integer parse_integer(const std::string& tok, const std::string& what)
{
    const std::size_t start = (!tok.empty() && tok[0] == '-') ? 1 : 0;
    if (tok.size() == start || tok.find_first_not_of("0123456789", start) != std::string::npos)
        throw ParseError(what + ": expected an integer, got '" + tok + "'");
    return Integer(tok);
}

}   // namespace detail

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

/** Parses and validates (no zero column, full rank). */
inline GeneratorMatrix parse_generator(const std::string& text)
{
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("generator file is empty");
    const auto head = detail::split_ws(lines[0]);
    if (head.size() != 3) throw ParseError("header must be 'q k n'");
    const auto q = detail::parse_uint(head[0], "q");
    const auto k = detail::parse_uint(head[1], "k");
    const auto n = detail::parse_uint(head[2], "n");
    if (k == 0 || n == 0) throw ParseError("k and n must be positive");
    FieldOrder f = [&] {
        try
        {
            return FieldOrder(q);
        }
        catch (const InvalidFieldOrder& e)
        {
            throw ParseError(e.what());
        }
    }();
    if (lines.size() != k + 1)
        throw ParseError("expected " + std::to_string(k) + " matrix rows, found " + std::to_string(lines.size() - 1));
    GeneratorMatrix g(f, k, n);
    for (std::size_t r = 0; r < k; ++r)
    {
        const auto toks = detail::split_ws(lines[r + 1]);
        const std::string where = "row " + std::to_string(r + 1);
        if (toks.size() != n)
            throw ParseError(where + ": expected " + std::to_string(n) + " entries, found " + std::to_string(toks.size()));
        for (std::size_t c = 0; c < n; ++c)
        {
            const auto v = detail::parse_uint(toks[c], where + ", column " + std::to_string(c + 1));
            if (v >= q) throw ParseError(where + ", column " + std::to_string(c + 1) + ": entry " + toks[c] + " not in [0, q)");
            g.set(r, c, static_cast<Element>(v));
        }
    }
    try
    {
        validate_generator(g);
    }
    catch (const Error& e)
    {
        throw ParseError(e.what());
    }
    return g;
}

inline std::string serialize_generator(const GeneratorMatrix& g)
{
    std::ostringstream out;
    out << g.order().value() << ' ' << g.rows() << ' ' << g.cols() << '\n';
    for (std::size_t r = 0; r < g.rows(); ++r)
    {
        for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g(r, c);
        out << '\n';
    }
    return out.str();
}

inline std::string canonical_rational(const Rational& r)
{
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline std::string serialize_polytope(const Polytope& p)
{
    std::ostringstream out;
    out << "dim " << p.dim << '\n';
    for (const auto& v : p.vertices)
    {
        out << 'V';
        for (const auto& x : v) out << ' ' << canonical_rational(x);
        out << '\n';
    }
    for (const auto& f : p.facets)
    {
        out << 'F';
        for (const auto& c : f.coeffs) out << ' ' << c.str();
        out << ' ' << f.rhs.str() << '\n';
    }
    if (p.outer_bound_only) out << "TAG outer-bound-only\n";
    return out.str();
}

/**
 * Reads both representations as written; does not recompute either one.
 * Vertices must be reduced rationals and facets primitive, else ParseError.
 */
inline Polytope parse_polytope(const std::string& text)
{
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("polytope file is empty");
    const auto head = detail::split_ws(lines[0]);
    if (head.size() != 2 || head[0] != "dim") throw ParseError("line 1: header must be 'dim k'");
    Polytope p;
    p.dim = detail::parse_uint(head[1], "dim");
    if (p.dim == 0) throw ParseError("dim must be positive");
    for (std::size_t ln = 1; ln < lines.size(); ++ln)
    {
        const auto toks = detail::split_ws(lines[ln]);
        const std::string where = "line " + std::to_string(ln + 1);
        if (toks[0] == "TAG")
        {
            if (toks.size() != 2 || toks[1] != "outer-bound-only") throw ParseError(where + ": unknown tag");
            p.outer_bound_only = true;
        }
        else if (toks[0] == "V")
        {
            if (toks.size() != p.dim + 1) throw ParseError(where + ": vertex needs " + std::to_string(p.dim) + " entries");
            RationalVector v;
            for (std::size_t i = 1; i < toks.size(); ++i)
            {
                const auto slash = toks[i].find('/');
                if (slash != std::string::npos)
                {
                    Integer num = detail::parse_integer(toks[i].substr(0, slash), where);
                    Integer den = detail::parse_integer(toks[i].substr(slash + 1), where);
                    if (den <= 0 || gcd(num, den) != 1) throw ParseError(where + ": '" + toks[i] + "' is not a reduced rational");
                }
                try
                {
                    v.push_back(parse_rational(toks[i]));
                }
                catch (const ParseError& e)
                {
                    throw ParseError(where + ": " + e.what());
                }
            }
            p.vertices.push_back(std::move(v));
        }
        else if (toks[0] == "F")
        {
            if (toks.size() != p.dim + 2) throw ParseError(where + ": facet needs " + std::to_string(p.dim + 1) + " integers");
            Facet f;
            for (std::size_t i = 1; i <= p.dim; ++i) f.coeffs.push_back(detail::parse_integer(toks[i], where));
            f.rhs = detail::parse_integer(toks.back(), where);
            IntVector all = f.coeffs;
            all.push_back(f.rhs);
            if (primitive(all) != all) throw ParseError(where + ": facet is not primitive");
            p.facets.push_back(std::move(f));
        }
        else
            throw ParseError(where + ": expected V, F or TAG");
    }
    return p;
}

/** One rate per server, whitespace or comma separated. */
inline RationalVector parse_rates(const std::string& text)
{
    std::string t = text;
    for (auto& ch : t)
        if (ch == ',') ch = ' ';
    RationalVector out;
    for (const auto& tok : detail::split_ws(t))
    {
        Rational r = parse_rational(tok);
        if (r < 0) throw ParseError("rate '" + tok + "' is negative");
        out.push_back(r);
    }
    if (out.empty()) throw ParseError("no rates given");
    return out;
}

}   // namespace svcrate

#endif
