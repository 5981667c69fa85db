#!/usr/bin/env python3
"""Regenerate data/curves.jsonl and tests/data/pari_periods.json.

Needs PARI/GP through cypari2 (e.g. `pip install passagemath-pari`). The
reference degree is PARI's ellmoddegree, i.e. deg(phi)/c^2, which is what
every certified lower bound must stay under.
"""
import json
import random
import sys
from pathlib import Path

import cypari2

pari = cypari2.Pari()
pari.allocatemem(10**9)

# Cremona-labelled optimal curves (minimal models).
NAMED = [
    ("11a1", [0, -1, 1, -10, -20]),
    ("14a1", [1, 0, 1, 4, -6]),
    ("15a1", [1, 1, 1, -10, -10]),
    ("27a1", [0, 0, 1, 0, -7]),
    ("32a1", [0, 0, 0, 4, 0]),
    ("36a1", [0, 0, 0, 0, 1]),
    ("37a1", [0, 0, 1, -1, 0]),
    ("37b1", [0, 1, 1, -23, -50]),
    ("43a1", [0, 1, 1, 0, 0]),
    ("49a1", [1, -1, 0, -2, -1]),
    ("389a1", [0, 1, 1, -2, 0]),
    ("5077a1", [0, 0, 1, -7, 6]),
]


def record(label, a):
    E = pari.ellinit(a)
    E = pari.ellminimalmodel(E)
    ai = [int(E[i]) for i in range(5)]
    N = int(pari.ellglobalred(E)[0])
    deg = pari.ellmoddegree(E)
    if deg.type() != "t_INT":
        return None
    twist = pari.ellminimaltwist(E)
    rec = {
        "label": label,
        "a": ai,
        "conductor": N,
        "semistable": bool(pari.issquarefree(N)),
        "twist_minimal": int(twist) == 1,
        "deg_phi": int(deg),
    }
    if rec["semistable"]:
        rec["n2"] = N * N
    om = E.omega()
    w1, w2 = complex(om[0]), complex(om[1])
    area = abs((w1.conjugate() * w2).imag)
    return rec, {"a": ai, "omega": area, "real_period": abs(w1.real) if w1.imag == 0 else None}


def main():
    root = Path(__file__).resolve().parent.parent
    rng = random.Random(20061)
    out, periods = [], []
    for label, a in NAMED:
        r = record(label, a)
        if r:
            out.append(r[0])
            periods.append(r[1])
    seen = set()
    while len([r for r in out if r["conductor"] >= 20000]) < 18:
        a = [rng.randint(0, 1), rng.randint(-1, 1), rng.randint(0, 1),
             rng.randint(-20, 20), rng.randint(-40, 40)]
        E = pari.ellinit(a)
        if len(E) == 0:
            continue
        N = int(pari.ellglobalred(E)[0])
        if not (20000 <= N <= 80000) or N in seen:
            continue
        seen.add(N)
        try:
            r = record(f"N{N}", a)
        except cypari2.PariError:
            continue
        if r:
            out.append(r[0])
            periods.append(r[1])
            print(r[0], file=sys.stderr, flush=True)
    with open(root / "data" / "curves.jsonl", "w") as f:
        for r in out:
            f.write(json.dumps(r) + "\n")
    (root / "tests" / "data").mkdir(parents=True, exist_ok=True)
    with open(root / "tests" / "data" / "pari_periods.json", "w") as f:
        json.dump(periods, f, indent=1)


if __name__ == "__main__":
    main()
