#!/usr/bin/env python3
"""Regenerate tests/golden/roots_*.json from the Weyl-orbit construction.

Positive roots are obtained as the orbit of the simple roots under the simple
reflections, which is independent of the root-string closure in the library.
"""
import json
import pathlib

NORMS = {
    "A": lambda l: [2] * l,
    "B": lambda l: [4] * (l - 1) + [2],
    "C": lambda l: [2] * (l - 1) + [4],
    "D": lambda l: [2] * l,
    "E": lambda l: [2] * l,
    "F": lambda l: [4, 4, 2, 2],
    "G": lambda l: [2, 6],
}


def edges(t, l):
    if t in "ABC":
        return [(i, i + 1) for i in range(l - 1)]
    if t == "D":
        return [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)]
    if t == "E":
        return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, l - 1)]
    if t == "F":
        return [(0, 1), (1, 2), (2, 3)]
    return [(0, 1)]


def form(t, l):
    n = NORMS[t](l)
    f = [[0] * l for _ in range(l)]
    for i in range(l):
        f[i][i] = n[i]
    for i, j in edges(t, l):
        f[i][j] = f[j][i] = -max(n[i], n[j]) // 2
    return f


def positive_roots(t, l):
    f = form(t, l)

    def reflect(i, v):
        s = sum(v[k] * f[k][i] for k in range(l))
        v = list(v)
        v[i] -= 2 * s // f[i][i]
        return tuple(v)

    seen = set()
    todo = [tuple(1 if k == i else 0 for k in range(l)) for i in range(l)]
    while todo:
        v = todo.pop()
        if v in seen:
            continue
        seen.add(v)
        todo.extend(reflect(i, v) for i in range(l))
    pos = [v for v in seen if all(c >= 0 for c in v)]
    pos.sort(key=lambda v: (sum(v), [-c for c in v]))
    return [list(v) for v in pos], f


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"
    out.mkdir(parents=True, exist_ok=True)
    for t, l in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3),
                 ("D", 4), ("G", 2), ("F", 4), ("E", 6)]:
        roots, f = positive_roots(t, l)
        short = min(f[i][i] for i in range(l))
        norms = [sum(r[i] * f[i][j] * r[j] for i in range(l) for j in range(l)) for r in roots]
        doc = {
            "type": t,
            "rank": l,
            "positive_roots": roots,
            "long": [t in "ADE" or n > short for n in norms],
        }
        (out / f"roots_{t}{l}.json").write_text(json.dumps(doc) + "\n")


if __name__ == "__main__":
    main()
