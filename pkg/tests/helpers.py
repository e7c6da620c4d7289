"""Shared randomized-instance generators for the test suite."""

import math
import random

from ldpsurf import LatticePolygon, UnimodularMap, is_ldp


def random_primitive(rng: random.Random, bound: int) -> tuple[int, int]:
    """Uniformish primitive lattice point in [-bound, bound]^2, never zero."""
    while True:
        x = rng.randint(-bound, bound)
        y = rng.randint(-bound, bound)
        if (x, y) != (0, 0) and math.gcd(x, y) == 1:
            return (x, y)


def random_unimodular(rng: random.Random, shears: int = 4,
                      det: int | None = None) -> UnimodularMap:
    """Random product of elementary shears, optionally reflected to det -1."""
    m = UnimodularMap.identity()
    for _ in range(shears):
        s = rng.randint(-3, 3)
        if rng.random() < 0.5:
            step = UnimodularMap(1, s, 0, 1)
        else:
            step = UnimodularMap(1, 0, s, 1)
        m = step.compose(m)
    want = det if det is not None else rng.choice((1, -1))
    if m.det != want:
        m = UnimodularMap(0, 1, 1, 0).compose(m)
    return m


def convex_hull(points):
    """Andrew monotone chain with strict turns: vertices only, anticlockwise."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2:
                (ax, ay), (bx, by) = out[-2], out[-1]
                if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) > 0:
                    break
                out.pop()
            out.append(p)
        return out[:-1]

    return half(pts) + half(pts[::-1])


def random_lattice_polygon(rng: random.Random, bound: int = 6,
                           tries: int = 200) -> LatticePolygon:
    """Hull of a handful of random lattice points; arbitrary position."""
    for _ in range(tries):
        sample = [(rng.randint(-bound, bound), rng.randint(-bound, bound))
                  for _ in range(rng.randint(3, 9))]
        hull = convex_hull(sample)
        if len(hull) >= 3:
            return LatticePolygon(tuple(hull))
    raise AssertionError("could not sample a polygon")


def random_ldp_polygon(rng: random.Random, bound: int = 4,
                       tries: int = 2000) -> LatticePolygon:
    """Random polygon with primitive vertices and the origin strictly inside."""
    for _ in range(tries):
        sample = [random_primitive(rng, bound) for _ in range(rng.randint(3, 8))]
        hull = convex_hull(sample)
        if len(hull) < 3:
            continue
        poly = LatticePolygon(tuple(hull))
        if is_ldp(poly):
            return poly
    raise AssertionError("could not sample an LDP polygon")
