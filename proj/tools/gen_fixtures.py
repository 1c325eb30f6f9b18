#!/usr/bin/env python3
"""Regenerates the graph files and oracle point lists under data/.

The point lists are committed; rerunning with the same seed reproduces them.
"""
import json
import random
from fractions import Fraction
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"


def frac(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def graph(vertices, edges, divisor=None):
    doc = {
        "vertices": vertices,
        "edges": [{"from": a, "to": b, "length": frac(l)} for a, b, l in edges],
    }
    if divisor is not None:
        doc["divisor"] = divisor
    return doc


def tesseract():
    edges = [(i, j, 1) for i in range(16) for j in range(i + 1, 16) if bin(i ^ j).count("1") == 1]
    return graph([f"p{k}" for k in range(16)], edges, list(range(16)))


F = Fraction
GRAPHS = {
    "segment": graph(["p0", "p1"], [(0, 1, 1)]),
    "circle": graph(["p1", "p0", "p2"], [(1, 0, F(1, 2)), (1, 2, 1), (0, 2, F(1, 2))]),
    "joint_circles": graph(
        [f"p{k}" for k in range(5)],
        [(0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 3, 2), (3, 4, 2), (4, 0, 2)],
        [2, 0, 0, 0, 0],
    ),
    "tesseract": tesseract(),
    "banana": graph(
        [f"p{k}" for k in range(4)],
        [(0, 1, 2), (0, 2, F(1, 2)), (2, 1, F(1, 2)), (0, 3, F(3, 2)), (3, 1, F(3, 2))],
        [1, 1, 0, 0],
    ),
    "two_bridges": graph(
        [f"p{k}" for k in range(6)],
        [(0, 1, 1), (1, 2, 2), (1, 3, F(3, 2)), (2, 4, F(1, 2)), (3, 4, F(5, 2)), (4, 5, 3)],
        [1, 0, 2, -1, 0, 3],
    ),
    "dumbbell": graph(
        [f"p{k}" for k in range(9)],
        [(0, 1, 1), (2, 1, 2), (0, 2, F(1, 2)), (3, 2, F(3, 2)), (3, 4, 1),
         (4, 5, 1), (6, 5, 2), (6, 7, F(1, 3)), (4, 7, 3), (8, 6, F(5, 2))],
        [1, 0, -1, 2, 0, 1, 0, 0, 3],
    ),
    "circle_line": graph(["p1", "p2", "p3"], [(0, 1, 1), (0, 1, 1), (1, 2, 2)], [0, 3, 1]),
}

POINT_GRAPHS = ["circle", "joint_circles", "tesseract", "banana", "two_bridges", "dumbbell"]


def random_offset(rng, length):
    length = Fraction(length)
    r = rng.random()
    if r < 0.1:
        return Fraction(0)
    if r < 0.2:
        return length
    den = rng.choice([2, 3, 4, 5, 7, 8, 11])
    return length * Fraction(rng.randint(1, den - 1), den)


def main():
    (DATA / "points").mkdir(parents=True, exist_ok=True)
    for name, doc in GRAPHS.items():
        (DATA / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")
    rng = random.Random(20240611)
    for name in POINT_GRAPHS:
        edges = GRAPHS[name]["edges"]
        lines = [f"# {name}: fixed oracle point pairs (EDGE:OFFSET EDGE:OFFSET)"]
        for _ in range(60):
            i = rng.randrange(len(edges))
            j = i if rng.random() < 0.25 else rng.randrange(len(edges))
            x = random_offset(rng, Fraction(edges[i]["length"]))
            y = random_offset(rng, Fraction(edges[j]["length"]))
            lines.append(f"{i}:{frac(x)} {j}:{frac(y)}")
        (DATA / "points" / f"{name}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
