#ifndef SVCRATE_CLI_HPP
#define SVCRATE_CLI_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bounds.hpp"
#include "io.hpp"
#include "known_codes.hpp"
#include "region.hpp"

/**
 * Command-line front end. run_cli takes the streams explicitly so tests can
 * call it in-process. Exit codes are part of the interface.
 */
namespace svcrate::cli {

enum Exit : int
{
    ok = 0,
    outside = 1,   // also MISMATCH from verify
    parse_failure = 2,
    oracle_mismatch = 3,
    oracle_limit = 4,
    unsupported_k = 5,
};

struct RateChoice
{
    std::string mu_path;
    std::string uniform;
};

inline RationalVector resolve_rates(const RateChoice& rc, std::size_t n)
{
    if (!rc.mu_path.empty() && !rc.uniform.empty()) throw ParseError("--mu and --uniform are exclusive");
    if (!rc.mu_path.empty())
    {
        RationalVector mu = parse_rates(read_file(rc.mu_path));
        if (mu.size() != n)
            throw ParseError("rate file has " + std::to_string(mu.size()) + " entries, expected n = " + std::to_string(n));
        return mu;
    }
    Rational r = 1;
    if (!rc.uniform.empty())
    {
        r = parse_rational(rc.uniform);
        if (r < 0) throw ParseError("--uniform must be nonnegative");
    }
    return RationalVector(n, r);
}

inline std::string join(const RationalVector& v, const char* sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + to_string(v[i]);
    return s;
}

/** k = 2: the vertices in counter-clockwise order; k = 3: the vertices on each facet. */
inline std::string plot_text(const Polytope& p)
{
    std::ostringstream out;
    if (p.dim == 2)
    {
        double cx = 0, cy = 0;
        for (const auto& v : p.vertices)
        {
            cx += v[0].convert_to<double>();
            cy += v[1].convert_to<double>();
        }
        cx /= static_cast<double>(p.vertices.size());
        cy /= static_cast<double>(p.vertices.size());
        auto cyc = p.vertices;
        std::stable_sort(cyc.begin(), cyc.end(), [&](const RationalVector& a, const RationalVector& b) {
            return std::atan2(a[1].convert_to<double>() - cy, a[0].convert_to<double>() - cx) <
                   std::atan2(b[1].convert_to<double>() - cy, b[0].convert_to<double>() - cx);
        });
        out << "CYCLE " << cyc.size() << '\n';
        for (const auto& v : cyc) out << "P " << join(v) << '\n';
    }
    else if (p.dim == 3)
    {
        for (const auto& f : p.facets)
        {
            out << "FACET " << f.coeffs[0].str() << ' ' << f.coeffs[1].str() << ' ' << f.coeffs[2].str() << ' '
                << f.rhs.str() << '\n';
            for (const auto& v : p.vertices)
                if (f.tight_at(v)) out << "P " << join(v) << '\n';
        }
    }
    else
        throw ParseError("--plot needs k = 2 or k = 3");
    return out.str();
}

inline int cmd_mindist(const std::string& gen, std::ostream& out)
{
    const std::size_t d = min_distance_geometric(parse_generator(read_file(gen)));
    out << "d=" << d << '\n';
    return ok;
}

struct RegionArgs
{
    std::string gen;
    RateChoice rates;
    std::string out_path;
    std::string plot_path;
    bool oracle = false;
    std::size_t threads = 1;
    std::size_t oracle_limit = kDefaultOracleLimit;
};

inline int cmd_region(const RegionArgs& a, std::ostream& out, std::ostream& err)
{
    const GeneratorMatrix g = parse_generator(read_file(a.gen));
    const RationalVector mu = resolve_rates(a.rates, g.cols());
    const RecoveryCatalog cat = build_catalog(g);
    const ServiceRegion region = compute_region(cat, mu, RegionOptions{a.threads});
    const std::string text = serialize_polytope(region.polytope);
    if (a.out_path.empty()) out << text;
    else write_file(a.out_path, text);
    if (!a.plot_path.empty()) write_file(a.plot_path, plot_text(region.polytope));

    if (a.oracle)
    {
        Polytope check;
        try
        {
            check = fm_projection_oracle(cat, mu, a.oracle_limit);
        }
        catch (const OracleTooLarge& e)
        {
            err << "oracle: " << e.what() << '\n';
            return oracle_limit;
        }
        if (!polytope_equal(check, region.polytope))
        {
            err << "oracle: projection disagrees with facet expansion\n";
            return oracle_mismatch;
        }
        err << "oracle: agree\n";
    }
    return ok;
}

inline int cmd_check(const std::string& gen, const RateChoice& rc, const std::string& lambda, std::ostream& out)
{
    const GeneratorMatrix g = parse_generator(read_file(gen));
    const RationalVector mu = resolve_rates(rc, g.cols());
    RationalVector demand;
    std::string t = lambda;
    std::replace(t.begin(), t.end(), ',', ' ');
    for (const auto& tok : detail::split_ws(t))
    {
        Rational r = parse_rational(tok);
        if (r < 0) throw ParseError("demand entry '" + tok + "' is negative");
        demand.push_back(r);
    }
    if (demand.size() != g.rows())
        throw ParseError("lambda has " + std::to_string(demand.size()) + " entries, expected k = " + std::to_string(g.rows()));
    const RecoveryCatalog cat = build_catalog(g);
    auto witness = membership(cat, mu, demand);
    if (!witness)
    {
        out << "outside\n";
        return outside;
    }
    out << "inside\n";
    for (std::size_t i = 0; i < cat.k; ++i)
        for (std::size_t j = 0; j < witness->rates[i].size(); ++j)
            if (witness->rates[i][j] != 0) out << i + 1 << ' ' << j + 1 << ' ' << to_string(witness->rates[i][j]) << '\n';
    return ok;
}

inline int cmd_bounds(const std::string& gen, std::ostream& out)
{
    const GeneratorMatrix g = parse_generator(read_file(gen));
    const RationalVector mu(g.cols(), Rational(1));
    for (const auto& c : all_hyperplane_cuts(induced_multiset(g, mu)))
        out << "CUT " << join(c.coeffs) << ' ' << to_string(c.rhs) << '\n';
    const RationalVector axis = axis_maxima(build_catalog(g), mu);
    out << "DLOWER " << ceil_of(*std::min_element(axis.begin(), axis.end())).str() << '\n';
    return ok;
}

inline int cmd_known(const std::string& family, std::size_t k, const std::string& out_path, std::ostream& out)
{
    const std::string text = serialize_polytope(known_region(parse_family(family), k));
    if (out_path.empty()) out << text;
    else write_file(out_path, text);
    return ok;
}

inline int cmd_verify(const std::string& gen, const std::string& region_path, std::ostream& out)
{
    Polytope claimed = parse_polytope(read_file(region_path));
    detail::sort_unique_points(claimed.vertices);
    std::sort(claimed.facets.begin(), claimed.facets.end());
    const GeneratorMatrix g = parse_generator(read_file(gen));
    if (claimed.dim != g.rows())
        throw ParseError("region has dim " + std::to_string(claimed.dim) + " but the code has k = " + std::to_string(g.rows()));
    const Polytope computed = compute_region(g, RationalVector(g.cols(), Rational(1))).polytope;
    // a tagged file only claims to contain the region; an untagged one claims it exactly
    if (claimed.outer_bound_only && polytope_contains(claimed, computed))
    {
        out << "CONTAINED\n";
        if (polytope_equal(claimed, computed)) out << "TIGHT\n";
        return ok;
    }
    if (!claimed.outer_bound_only && polytope_equal(claimed, computed))
    {
        out << "EQUAL\n";
        return ok;
    }
    out << "MISMATCH\n";
    if (auto v = first_violation(claimed, computed))
    {
        // computed vertex outside the claimed region
        out << "VERTEX " << join(v->first) << '\n';
        out << "FACET";
        for (const auto& c : v->second.coeffs) out << ' ' << c.str();
        out << ' ' << v->second.rhs.str() << '\n';
    }
    else if (auto w = first_violation(computed, claimed))
    {
        // claimed vertex the code cannot serve
        out << "VERTEX " << join(w->first) << '\n';
        out << "FACET";
        for (const auto& c : w->second.coeffs) out << ' ' << c.str();
        out << ' ' << w->second.rhs.str() << '\n';
    }
    return outside;
}

/** Maps library errors to exit codes; everything the user supplied wrongly is a parse failure. */
inline int guarded(const std::function<int()>& body, std::ostream& err)
{
    try
    {
        return body();
    }
    catch (const UnsupportedK& e)
    {
        err << "error: " << e.what() << '\n';
        return unsupported_k;
    }
    catch (const OracleTooLarge& e)
    {
        err << "error: " << e.what() << '\n';
        return oracle_limit;
    }
    catch (const Error& e)
    {
        err << "error: " << e.what() << '\n';
        return parse_failure;
    }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact service rate regions of linear codes over prime fields", "svcrate"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string gen;
    RateChoice rates;
    RegionArgs region;
    std::string lambda, family, out_path, region_path;
    std::size_t k = 0;

    auto* mindist = app.add_subcommand("mindist", "Minimum distance from hyperplane intersections");
    mindist->add_option("--gen", gen, "Generator matrix file")->required();
    mindist->callback([&] { action = [&] { return cmd_mindist(gen, out); }; });

    auto* reg = app.add_subcommand("region", "Compute the service rate region");
    reg->add_option("--gen", region.gen, "Generator matrix file")->required();
    auto* mu_opt = reg->add_option("--mu", region.rates.mu_path, "Server rate file");
    reg->add_option("--uniform", region.rates.uniform, "Same rate for every server")->excludes(mu_opt);
    reg->add_option("--out", region.out_path, "Polytope output file (default stdout)");
    reg->add_option("--plot", region.plot_path, "Plot text for k = 2 or 3");
    reg->add_flag("--oracle", region.oracle, "Cross-check with Fourier-Motzkin projection");
    reg->add_option("--oracle-limit", region.oracle_limit, "Largest recovery catalog the oracle accepts");
    reg->add_option("--threads", region.threads, "Facet LPs solved concurrently")->check(CLI::PositiveNumber);
    reg->callback([&] { action = [&] { return cmd_region(region, out, err); }; });

    auto* check = app.add_subcommand("check", "Test one demand vector and print a witness");
    check->add_option("--gen", gen, "Generator matrix file")->required();
    auto* cmu = check->add_option("--mu", rates.mu_path, "Server rate file");
    check->add_option("--uniform", rates.uniform, "Same rate for every server")->excludes(cmu);
    check->add_option("--lambda", lambda, "Demand as r1,r2,...,rk")->required();
    check->callback([&] { action = [&] { return cmd_check(gen, rates, lambda, out); }; });

    auto* bounds = app.add_subcommand("bounds", "Hyperplane cuts and the minimum distance lower bound");
    bounds->add_option("--gen", gen, "Generator matrix file")->required();
    bounds->callback([&] { action = [&] { return cmd_bounds(gen, out); }; });

    auto* known = app.add_subcommand("known", "Closed-form region of a known family");
    known->add_option("--family", family, "simplex, rm-nonsys or rm-sys")->required();
    known->add_option("--k", k, "Dimension")->required();
    known->add_option("--out", out_path, "Polytope output file (default stdout)");
    known->callback([&] { action = [&] { return cmd_known(family, k, out_path, out); }; });

    auto* verify = app.add_subcommand("verify", "Compare a polytope file with the computed region");
    verify->add_option("--gen", gen, "Generator matrix file")->required();
    verify->add_option("--region", region_path, "Polytope file")->required();
    verify->callback([&] { action = [&] { return cmd_verify(gen, region_path, out); }; });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        std::ostringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? ok : parse_failure;
    }
    return guarded(action, err);
}

}   // namespace svcrate::cli

#endif
