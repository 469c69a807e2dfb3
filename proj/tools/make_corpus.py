#!/usr/bin/env python3
"""Writes corpus/NAME.cfg and corpus/NAME.expect.json.

Expected values come from closed forms computed here, not from singspec:
Brieskorn-Pham spectra, the plane Kouchnirenko number, the monomial
description of the missing spectrum of f_{n,a}, and fixed literature values.
"""
import itertools
import json
import math
import sys
from collections import Counter
from fractions import Fraction as F
from pathlib import Path

OUT = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "corpus")


def spec_list(values):
    c = Counter(values)
    return [{"alpha": str(a), "mult": c[a]} for a in sorted(c)]


def bp_spectrum(exps):
    return [sum(F(k, a) for k, a in zip(ks, exps)) for ks in itertools.product(*[range(1, a) for a in exps])]


def kouchnirenko_plane(support):
    """2*area - a - b + 1 for the region under the lower hull of a convenient support."""
    pts = sorted(set(support))
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    # keep the part from the y-axis point down to the x-axis point
    start = next(i for i, p in enumerate(hull) if p[0] == 0)
    end = next(i for i, p in enumerate(hull) if p[1] == 0)
    chain = hull[start:end + 1]
    area2 = sum(x1 * y2 - x2 * y1 for (x1, y1), (x2, y2) in zip(chain, chain[1:]))
    area2 = -area2  # chain runs clockwise around the origin
    a = chain[-1][0]
    b = chain[0][1]
    return area2 - a - b + 1


def fna_missing(n, a):
    e = a * n - 1
    out = []
    for k in range(0, n - 1):
        for p in itertools.permutations(range(n), k):
            fixed = {j: (i + 1) * a - 1 for i, j in enumerate(p)}
            free = [j for j in range(n) if j not in fixed]
            for vals in itertools.product(range((k + 1) * a, n * a - 2), repeat=len(free)):
                nu = sum(fixed.values()) + sum(vals)
                out.append(F(nu + n, e))
    return out


PASS = {"status": "pass"}
NA = {"status": "not_applicable"}
FAIL = {"status": "fail"}


def distinct_checks():
    return {k: PASS for k in ["spectrum_symmetry", "graded_symmetry", "minimal_partner", "prop3", "prop5", "prop7",
                              "cor2", "briancon_skoda", "sigma_order", "mode_guards"]}


def equal_checks():
    c = {k: NA for k in ["graded_symmetry", "minimal_partner", "prop3", "prop5", "cor2", "briancon_skoda",
                         "sigma_order", "missing_global_symmetry"]}
    c.update({"spectrum_symmetry": PASS, "prop7": PASS, "mode_guards": PASS})
    return c


entries = {}


def add(name, cfg, expect):
    entries[name] = (cfg, expect)


def poly_text(terms):
    return "+".join(terms)


# Brieskorn-Pham germs: mu = tau, spectrum by the product formula.
for exps in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (4, 7), (5, 7), (6, 6), (7, 7), (2, 3, 4), (3, 3, 3),
             (2, 4, 5), (3, 4, 5), (3, 5, 7), (4, 4, 4)]:
    names = "xyz"
    text = poly_text(f"{names[i]}^{a}" for i, a in enumerate(exps))
    sp = bp_spectrum(exps)
    mu = math.prod(a - 1 for a in exps)
    add("bp_" + "_".join(map(str, exps)), f"f={text}\n",
        {"n": len(exps), "mu": mu, "tau_e": mu, "alpha_1": str(min(sp)), "spectrum": spec_list(sp),
         "tjurina_spectrum": spec_list(sp), "missing": [], "mode": "wh", "checks": equal_checks()})

add("x3_y3", "f=x^3+y^3\n",
    {"n": 2, "mu": 4, "tau_e": 4, "spectrum": spec_list(bp_spectrum((3, 3))), "missing": [],
     "mode": "wh", "checks": equal_checks()})

# Semi-weighted-homogeneous: spectrum of the weight-one part.
add("swh_x3_y3_x2y2", "f=x^3+y^3+x^2*y^2\nmode=swh\nweights=1/3,1/3\n",
    {"n": 2, "mu": 4, "spectrum": spec_list(bp_spectrum((3, 3))), "mode": "swh"})

# Literature values for the two germs with mu - tau = 2.
add("x6_y5_x3y3", "f=x^6+y^5+x^3*y^3\n",
    {"n": 2, "e": 1, "mu": 20, "tau_e": 18, "alpha_1": "11/30",
     "missing": spec_list([F(44, 30), F(49, 30)]),
     "graded_blocks": [{"gamma": "11/10", "quasi_weight": "31/10",
                        "entries": spec_list([F(44, 30), F(49, 30)]), "symmetric": True}],
     "checks": distinct_checks()})
add("x6_y5_x4y2_x3y3", "f=x^6+y^5+x^4*y^2+x^3*y^3\n",
    {"n": 2, "mu": 20, "tau_e": 18, "missing": spec_list([F(43, 30), F(49, 30)]), "checks": distinct_checks()})

m7652 = [F(57, 42), F(64, 42), F(65, 42), F(71, 42)]
c7652 = distinct_checks()
c7652["missing_global_symmetry"] = FAIL
add("abpq_7_6_5_2", "f=x^7+y^6+x^5*y^2\n",
    {"n": 2, "mu": 30, "tau_e": 26, "missing": spec_list(m7652), "checks": c7652})

# f_{n,a}: missing spectrum from the explicit monomial basis of the image.
for n, a in [(2, 3), (2, 4), (2, 5), (3, 2), (3, 3)]:
    names = "xyz"[:n]
    text = poly_text([f"{v}^{a * n - 1}" for v in names] + ["*".join(f"{v}^{a}" for v in names)])
    miss = fna_missing(n, a)
    exp = {"n": n, "missing": spec_list(miss), "checks": distinct_checks()}
    if n == 2:
        exp["mu"] = kouchnirenko_plane([(2 * a - 1, 0), (0, 2 * a - 1), (a, a)])
        exp["tau_e"] = exp["mu"] - len(miss)
    if (n, a) == (2, 3):
        exp.update({"sigma_f": "6/5", "bs_bound": 2, "bs_actual": 2})
    add(f"fna_{n}_{a}", f"f={text}\n", exp)

# Newton germs checked through the Kouchnirenko number and invariants.
for name, terms in [("x6_y6_x4y3", [(6, 0), (0, 6), (4, 3)]), ("x9_y7_x4y4", [(9, 0), (0, 7), (4, 4)]),
                    ("x8_y8_x5y4", [(8, 0), (0, 8), (5, 4)]), ("x5_y4_x2y2", [(5, 0), (0, 4), (2, 2)])]:
    text = poly_text(f"x^{i}*y^{j}".replace("x^0*", "").replace("*y^0", "") for i, j in terms)
    add(name, f"f={text}\n", {"n": 2, "mu": kouchnirenko_plane(terms), "mode": "newton",
                              "checks": {"spectrum_symmetry": PASS, "prop7": PASS, "mode_guards": PASS}})

add("degenerate_xyz", "f=x^2*y*z+x*y^2*z+x*y*z^2+x^5+y^5+z^5\n", {"error": "NEWTON_DEGENERATE"})
add("non_isolated", "f=x^2*y\n", {"error": "NON_ISOLATED"})

add("h_x11_y10_z9_e2", "f=x^11+2*y^10+3*z^9+x^9*y^2+x^4*y^4*z^3\ne=2\nslow=1\n",
    {"n": 3, "e": 2, "mu": 720, "tau_e": 716, "alpha_1": "299/990",
     "missing": spec_list([F(k, 990) for k in (2471, 2561, 2581, 2671)]),
     "checks": {"graded_symmetry": PASS}})

OUT.mkdir(parents=True, exist_ok=True)
for name, (cfg, expect) in entries.items():
    (OUT / f"{name}.cfg").write_text(f"name={name}\n" + cfg)
    (OUT / f"{name}.expect.json").write_text(json.dumps(expect, indent=2) + "\n")
print(f"wrote {len(entries)} entries to {OUT}")
