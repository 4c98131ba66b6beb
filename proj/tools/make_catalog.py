#!/usr/bin/env python3
"""Writes catalogs/standard.json from the readable tables below.

Polynomials are written as text here and serialized as coefficient/exponent
lists. The C++ loader re-verifies everything (matrix factorizations, AR
sequences, tau, arrows, directedness), so this file is data entry only.
"""
import json
import sys
from fractions import Fraction

import sympy


def poly(text, names):
    syms = sympy.symbols(names)
    p = sympy.Poly(sympy.sympify(text.replace("^", "**")), *syms, domain="QQ")
    terms = []
    for exps, c in sorted(p.terms(), reverse=True):
        c = Fraction(int(c.p), int(c.q))
        terms.append([f"{c.numerator}/{c.denominator}", list(exps)])
    return terms


def matrix(rows, names):
    return [[poly(e, names) for e in row] for row in rows]


def univariate(text):
    s = sympy.Symbol("s")
    p = sympy.Poly(sympy.sympify(text.replace("^", "**")), s, domain="QQ")
    return [[f"{Fraction(int(c.p), int(c.q)).numerator}/{Fraction(int(c.p), int(c.q)).denominator}", e[0]]
            for e, c in sorted(p.terms(), reverse=True)]


def module(mid, names, phi, rows, cols, psi=None, free=False):
    m = {"id": mid, "free": free, "row_degrees": rows, "col_degrees": cols, "phi": matrix(phi, names)}
    if psi is not None:
        m["psi"] = matrix(psi, names)
    return m


def ring(name, variables, relation, flags, modules, quiver=None, primes=(), notes=""):
    names = [v for v, _ in variables]
    weights = [w for _, w in variables]
    p = sympy.Poly(sympy.sympify(relation.replace("^", "**")), *sympy.symbols(names))
    deg = max(sum(e * w for e, w in zip(exps, weights)) for exps in p.monoms())
    out = {
        "name": name,
        "variables": [{"name": v, "weight": w} for v, w in variables],
        "relation": poly(relation, names),
        "canonical_twist": deg - sum(weights),
        "flags": flags,
        "minimal_primes": [
            {"id": pid, "generators": [poly(g, names) for g in gens], "parametrization": [univariate(t) for t in par]}
            for pid, gens, par in primes
        ],
        "modules": modules,
        "notes": notes,
    }
    if quiver is not None:
        arrows, tau, seqs = quiver
        out["quiver"] = {
            "arrows": [list(a) for a in arrows],
            "tau": [{"vertex": v, "image": i, "shift": s} for v, (i, s) in tau.items()],
            "ar_sequences": [
                {"end": e, "middle": mid, "into_middle": matrix(a, names), "onto_end": matrix(b, names)}
                for e, mid, a, b in seqs
            ],
        }
    return out


DIRECTED = {"gorenstein": True, "isolated": True, "finite_type": True, "representation_directed": True}


def truncated(n):
    names = ["x"]
    mods = [module("Rfree", names, [[f"x^{n}"]], [0], [n], [["1"]], free=True)]
    label = lambda i: "Rfree" if i == n else f"L{i}"
    for i in range(1, n):
        mods.append(module(f"L{i}", names, [[f"x^{i}"]], [0], [i], [[f"x^{n - i}"]]))
    arrows, tau, seqs = [], {}, []
    for i in range(1, n):
        tau[label(i)] = (label(i), -1)
        if i == 1:
            seqs.append((label(i), label(2), [["x"]], [["1"]]))
        else:
            seqs.append((label(i), f"{label(i + 1)} + {label(i - 1)}(-1)", [["x"], ["1"]], [["1", "-x"]]))
        arrows.append((label(i + 1), label(i), 0))
        arrows.append((label(i), label(i + 1), 1))
    return ring(f"kx{n}", [("x", 1)], f"x^{n}", DIRECTED, mods, (sorted(arrows), tau, seqs),
                notes="L_i = R/(x^i); tau L_i = L_i(-1); shifts fixed with the exactness oracle")


def two_lines():
    names = ["x", "y"]
    mods = [
        module("Rfree", names, [["x^2 - y^2"]], [0], [2], [["1"]], free=True),
        module("Lplus", names, [["x + y"]], [0], [1], [["x - y"]]),
        module("Lminus", names, [["x - y"]], [0], [1], [["x + y"]]),
    ]
    tau = {"Lplus": ("Lminus", -1), "Lminus": ("Lplus", -1)}
    seqs = [("Lplus", "Rfree", [["x + y"]], [["1"]]), ("Lminus", "Rfree", [["x - y"]], [["1"]])]
    arrows = [("Lminus", "Rfree", 1), ("Rfree", "Lplus", 0), ("Lplus", "Rfree", 1), ("Rfree", "Lminus", 0)]
    primes = [("p_plus", ["x + y"], ["s", "-s"]), ("p_minus", ["x - y"], ["s", "s"])]
    return ring("two-lines", [("x", 1), ("y", 1)], "x^2 - y^2", DIRECTED, mods, (sorted(arrows), tau, seqs), primes,
                notes="Lplus = R/(x+y), Lminus = R/(x-y)")


def cusp():
    names = ["x", "y"]
    m1 = [["x", "y^2"], ["-y", "-x"]]
    mods = [
        module("Rfree", names, [["x^2 - y^3"]], [0], [6], [["1"]], free=True),
        module("M1", names, m1, [0, 1], [3, 4], m1),
    ]
    tau = {"M1": ("M1", -2)}
    seqs = [("M1", "Rfree + M1(-1)", [["y", "x"], ["0", "y"], ["1", "0"]], [["1", "0", "-y"], ["0", "-1", "0"]])]
    arrows = [("Rfree", "M1", 0), ("M1", "M1", 1), ("M1", "Rfree", 2)]
    primes = [("zero", [], ["s^3", "s^2"])]
    return ring("cusp", [("x", 3), ("y", 2)], "x^2 - y^3", DIRECTED, mods, (sorted(arrows), tau, seqs), primes,
                notes="M1 = maximal ideal (x, y); deg x = 3, deg y = 2")


def double_line():
    names = ["x", "y"]
    mods = [
        module("Rfree", names, [["x^2"]], [0], [2], [["1"]], free=True),
        module("Rx", names, [["x"]], [0], [1], [["x"]]),
        module("I1", names, [["x", "y"], ["0", "-x"]], [1, 1], [2, 2], [["x", "y"], ["0", "-x"]]),
        module("I2", names, [["x", "y^2"], ["0", "-x"]], [1, 2], [2, 3], [["x", "y^2"], ["0", "-x"]]),
    ]
    flags = {"gorenstein": True, "isolated": False, "finite_type": False}
    return ring("kxy-x2", [("x", 1), ("y", 1)], "x^2", flags, mods,
                notes="not an isolated singularity; I_n = (x, y^n)R; no quiver")


def render(obj, level=0):
    """JSON with objects spread over lines and every list of plain data on one line."""
    pad = "  " * (level + 1)
    if isinstance(obj, dict):
        items = [f"{pad}{json.dumps(k)}: {render(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * level + "}"
    if isinstance(obj, list) and any(isinstance(x, dict) for x in obj):
        return "[\n" + ",\n".join(pad + render(x, level + 1) for x in obj) + "\n" + "  " * level + "]"
    return json.dumps(obj)


def main():
    cat = {"schema": "degenlab-catalog/1",
           "rings": [truncated(2), truncated(3), truncated(4), two_lines(), cusp(), double_line()]}
    out = sys.argv[1] if len(sys.argv) > 1 else "catalogs/standard.json"
    with open(out, "w") as f:
        f.write(render(cat) + "\n")


if __name__ == "__main__":
    main()
