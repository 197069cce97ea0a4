"""Independent oracle for frozen test values.

Shares no code with the C++ library: recovery sets by brute force over column
subsets, minimum distance by enumerating all codewords, LP optima with scipy's
floating-point solver rounded to small-denominator fractions. Writes
tests/frozen_values.hpp.
"""
import itertools
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
from scipy.optimize import linprog


def simplex(k):
    cols = [v for v in itertools.product([0, 1], repeat=k) if any(v)]
    return [list(r) for r in zip(*cols)]


def rm(k, systematic):
    pts = list(itertools.product([0, 1], repeat=k - 1))
    rows = [[1 if p[a] == 0 else 0 for p in pts] for a in range(k - 1)]
    last = [1] * len(pts)
    if systematic:
        last = [(1 + sum(r[c] for r in rows)) % 2 for c in range(len(pts))]
    return rows + [last]


def gf2_rank(vectors):
    rows = [int("".join(map(str, v)), 2) for v in vectors]
    rank = 0
    while rows:
        pivot = max(rows)
        if pivot == 0:
            break
        rows.remove(pivot)
        top = pivot.bit_length()
        rows = [r ^ pivot if r.bit_length() == top else r for r in rows]
        rank += 1
    return rank


def recovery_count(g, i):
    """Minimal column sets whose span contains e_i using every column (binary)."""
    k, n = len(g), len(g[0])
    cols = [tuple(g[r][c] for r in range(k)) for c in range(n)]
    target = tuple(1 if r == i else 0 for r in range(k))
    count = 0
    for size in range(1, k + 1):
        for subset in itertools.combinations(range(n), size):
            vs = [cols[c] for c in subset]
            if gf2_rank(vs) != size:
                continue
            # over GF(2) all coefficients nonzero means the plain sum hits e_i
            s = tuple(sum(v[r] for v in vs) % 2 for r in range(k))
            if s == target:
                count += 1
    return count


def catalog(g):
    k, n = len(g), len(g[0])
    cols = [tuple(g[r][c] for r in range(k)) for c in range(n)]
    out = []
    for i in range(k):
        target = tuple(1 if r == i else 0 for r in range(k))
        sets = []
        for size in range(1, k + 1):
            for subset in itertools.combinations(range(n), size):
                vs = [cols[c] for c in subset]
                if gf2_rank(vs) == size and tuple(sum(v[r] for v in vs) % 2 for r in range(k)) == target:
                    sets.append(subset)
        out.append(sets)
    return out


def min_weight(g):
    k, n = len(g), len(g[0])
    best = n
    for a in itertools.product([0, 1], repeat=k):
        if not any(a):
            continue
        w = sum(1 for c in range(n) if sum(a[r] * g[r][c] for r in range(k)) % 2)
        best = min(best, w)
    return best


def lp_max(g, h):
    k, n = len(g), len(g[0])
    cat = catalog(g)
    var = [(i, s) for i in range(k) for s in cat[i]]
    c = np.array([-h[i] for i, _ in var], dtype=float)
    a = np.zeros((n, len(var)))
    for j, (_, s) in enumerate(var):
        for col in s:
            a[col, j] = 1
    res = linprog(c, A_ub=a, b_ub=np.ones(n), bounds=(0, None), method="highs")
    assert res.status == 0
    return Fraction(-res.fun).limit_denominator(100)


def frac(f):
    return f'"{f.numerator}/{f.denominator}"'


def main(out_path):
    codes = {"simplex_k2": simplex(2), "simplex_k3": simplex(3), "simplex_k4": simplex(4)}
    for k in range(2, 6):
        codes[f"rm_nonsys_k{k}"] = rm(k, False)
        codes[f"rm_sys_k{k}"] = rm(k, True)
    lines = [
        "// Generated by tests/oracle/derive.py; do not edit by hand.",
        "#ifndef SVCRATE_TESTS_FROZEN_VALUES_HPP",
        "#define SVCRATE_TESTS_FROZEN_VALUES_HPP",
        "",
        "#include <cstddef>",
        "#include <string>",
        "#include <vector>",
        "",
        "namespace frozen {",
        "",
        "struct CodeFacts",
        "{",
        "    std::string name;",
        "    std::vector<std::size_t> catalog_sizes;",
        "    std::size_t min_distance;",
        "    std::vector<std::string> axis_maxima;",
        "    std::string all_ones_optimum;",
        "};",
        "",
        "inline const std::vector<CodeFacts> codes = {",
    ]
    for name, g in sorted(codes.items()):
        k = len(g)
        sizes = [recovery_count(g, i) for i in range(k)]
        axis = [lp_max(g, [1 if j == i else 0 for j in range(k)]) for i in range(k)]
        ones = lp_max(g, [1] * k)
        lines.append(
            f'    {{"{name}", {{{", ".join(map(str, sizes))}}}, {min_weight(g)}, '
            f'{{{", ".join(frac(a) for a in axis)}}}, {frac(ones)}}},'
        )
        print(name, sizes, min_weight(g), [str(a) for a in axis], ones, file=sys.stderr)
    lines += ["};", "", "}   // namespace frozen", "", "#endif", ""]
    Path(out_path).write_text("\n".join(lines))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/frozen_values.hpp")
