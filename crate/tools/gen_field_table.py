#!/usr/bin/env python3
"""Regenerate data/totally_real_fields.jsonl.

Usage: gen_field_table.py OUTPUT_PATH

Requires cypari2 (PARI/GP >= 2.15) and numpy.

Enumeration:
  degree 2   fundamental discriminants D <= bound
  degree 3,4 nflist over every transitive group
  degree 5   Hunter search (all quintic fields are primitive)
  degree 6   nflist over groups [6,1]..[6,13] (minus [6,12], which needs the
             external nflistdata package) united with a Hunter search, which
             is complete for the primitive groups 6T12, 6T14, 6T15, 6T16.
Class numbers come from bnfinit + bnfcertify. Splitting data for primes that
divide the polynomial index is taken from idealprimedec and written as
overrides.
"""
import json, math, sys
import numpy as np
import cypari2

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9)

BOUNDS = {2: 362, 3: 3104, 4: 26574, 5: 227481, 6: 1947276}
GROUPS = {3: ["C3", "S3"], 4: ["C4", "V4", "D4", "A4", "S4"]}
HERMITE = {2: (4 / 3) ** 0.5, 3: 2 ** (1 / 3), 4: 2**0.5, 5: 8**0.2}


def hunter(n, bound):
    """Candidate monic polynomials (highest coefficient first)."""
    out = []
    b0 = HERMITE[n - 1] * (bound / n) ** (1.0 / (n - 1))
    for a1 in range(0, n // 2 + 1):
        big_b = a1 * a1 / n + b0
        lo2 = math.ceil((a1 * a1 - big_b) / 2 - 1e-9)
        hi2 = math.floor((n - 1) / (2 * n) * a1 * a1 + 1e-9)
        for an2 in range(lo2, hi2 + 1):
            t2 = a1 * a1 - 2 * an2
            if t2 > big_b + 1e-9:
                continue
            amax0 = (t2 / n) ** (n / 2)
            stack = [[1, -a1, an2]]
            while stack:
                cf = stack.pop()
                m = len(cf)
                if m == n + 1:
                    if cf[-1] != 0:
                        out.append(cf)
                    continue
                k = n - m
                full = np.array(cf + [0] * (n + 1 - m), dtype=float)
                dk = full
                for _ in range(k):
                    dk = np.polyder(dk)
                dk1 = np.polyder(dk)
                roots = np.roots(dk1)
                if np.max(np.abs(roots.imag)) > 1e-7:
                    continue
                roots = np.sort(roots.real)
                fact = math.factorial(k)
                lo, hi = -1e300, 1e300
                for i, b in enumerate(roots):
                    val = np.polyval(dk, b)
                    if (len(roots) - 1 - i) % 2 == 0:
                        hi = min(hi, -val / fact)
                    else:
                        lo = max(lo, -val / fact)
                if k == 0:
                    lo, hi = max(lo, -amax0), min(hi, amax0)
                for a in range(math.ceil(lo - 1e-6), math.floor(hi + 1e-6) + 1):
                    stack.append(cf + [a])
    return out


def keep(f, n, bound):
    if pari.polsturm(f) != n or not pari.polisirreducible(f):
        return None
    if abs(int(pari.core(pari.poldisc(f)))) > bound:
        return None
    d = int(pari.nfdisc(f))
    return d if d <= bound else None


def fields_of_degree(n):
    bound = BOUNDS[n]
    polys = {}
    if n == 2:
        for d in range(5, bound + 1):
            if pari.isfundamental(d):
                f = pari(f"x^2 - x - {(d - 1) // 4}") if d % 4 == 1 else pari(f"x^2 - {d // 4}")
                polys[str(pari.polredabs(f))] = d
        return polys
    sources = []
    if n in GROUPS:
        for g in GROUPS[n]:
            sources += list(pari(f'nflist("{g}", [1, {bound}], 0)'))
    if n == 6:
        for i in range(1, 14):
            if i == 12:
                continue
            sources += list(pari(f"nflist([6, {i}], [1, {bound}], 0)"))
    if n in (5, 6):
        sources += [pari.Pol(cf) for cf in hunter(n, bound)]
    for f in sources:
        d = keep(f, n, bound)
        if d is not None:
            polys[str(pari.polredabs(f))] = d
    return polys


def record(poly_str, disc, n, ordinal):
    f = pari(poly_str)
    bnf = pari.bnfinit(f, 1)
    assert pari.bnfcertify(bnf) == 1
    h = int(bnf.bnf_get_no())
    coeffs = [int(c) for c in pari.Vecrev(f)]
    nf = bnf.bnf_get_nf() if hasattr(bnf, "bnf_get_nf") else pari.nfinit(f)
    index = int(pari.nf_get_index(nf)) if hasattr(pari, "nf_get_index") else int(nf[3])
    overrides = []
    if index > 1:
        for p in pari.factor(index)[0]:
            p = int(p)
            decomp = pari.idealprimedec(nf, p)
            overrides.append({"p": p, "factors": [[int(P[3]), int(P[2])] for P in decomp]})
    rec = {"label": f"{n}.{n}.{disc}.{ordinal}", "degree": n, "disc": disc, "h": h, "poly": coeffs}
    if overrides:
        rec["splitting_overrides"] = overrides
    return rec


def main():
    out = open(sys.argv[1], "w")
    print("# Totally real number fields of degree 2..6 with discriminant inside the", file=out)
    print("# bounds 362, 3104, 26574, 227481, 1947276 (one JSON object per line).", file=out)
    print(f"# Generated by tools/gen_field_table.py with PARI/GP {'.'.join(map(str, pari.version()))}.", file=out)
    print("# Completeness is a trust assumption on nflist + Hunter search; class", file=out)
    print("# numbers certified with bnfcertify.", file=out)
    print(json.dumps({"label": "1.1.1.1", "degree": 1, "disc": 1, "h": 1, "poly": [0, 1]}), file=out)
    for n in range(2, 7):
        polys = fields_of_degree(n)
        by_disc = {}
        for p, d in polys.items():
            by_disc.setdefault(d, []).append(p)
        count = 0
        for d in sorted(by_disc):
            for k, p in enumerate(sorted(by_disc[d]), start=1):
                print(json.dumps(record(p, d, n, k)), file=out)
                count += 1
        print(f"degree {n}: {count}", file=sys.stderr)


if __name__ == "__main__":
    main()
