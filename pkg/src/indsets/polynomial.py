"""Exact independence polynomials with arbitrary-precision integer coefficients.

Coefficient t of the polynomial counts the independent sets of size t, so the
degree is the independence number and the coefficient sum is the total count.
The main algorithm applies the vertex recurrence

    P(G) = P(G - v) + activity * P(G - v - N(v))

at a maximum-degree vertex, splits residual subgraphs into connected
components (their polynomials multiply), and memoizes residuals by vertex
mask. A 2^n enumeration oracle is kept alongside as an independent
cross-check and is never routed through the recurrence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graphs import Graph, component_masks

BRUTE_FORCE_LIMIT = 24
DEFAULT_MEMO_LIMIT = 1 << 22


@dataclass(frozen=True)
class IndependencePolynomial:
    """Exact coefficient vector; index t holds the number of size-t independent sets."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("coefficient 0 must be 1 (the empty set)")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("coefficients must be nonnegative")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("top coefficient must be positive")
        if self.n > 0 and (len(self.coeffs) < 2 or self.coeffs[1] != self.n):
            raise ValueError("coefficient 1 must equal the vertex count")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, t: int) -> int:
        return self.coeffs[t] if 0 <= t < len(self.coeffs) else 0

    def total(self) -> int:
        """Total number of independent sets (evaluation at activity 1)."""
        return sum(self.coeffs)

    def evaluate(self, activity) -> Fraction:
        lam = Fraction(activity)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * lam + c
        return acc

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "coeffs": [str(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "IndependencePolynomial":
        obj = json.loads(text)
        return cls(int(obj["n"]), tuple(int(c) for c in obj["coeffs"]))


def _convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _max_degree_vertex(adj, verts: int) -> int:
    best = -1
    best_deg = -1
    rest = verts
    while rest:
        low = rest & -rest
        rest ^= low
        v = low.bit_length() - 1
        deg = (adj[v] & verts).bit_count()
        if deg > best_deg:
            best_deg = deg
            best = v
    return best


def independence_polynomial(
    g: Graph, memo_limit: int = DEFAULT_MEMO_LIMIT
) -> IndependencePolynomial:
    """Exact independence polynomial via the vertex recurrence.

    Branches at a maximum-degree vertex of the current induced subgraph
    (lowest index on ties), factors over connected components at every node,
    and memoizes per vertex mask. The memo table is private to this call and
    stops growing once `memo_limit` entries are stored.
    """
    adj = g.adj
    memo: dict[int, list[int]] = {}

    def solve(verts: int) -> list[int]:
        if verts == 0:
            return [1]
        cached = memo.get(verts)
        if cached is not None:
            return cached
        comps = component_masks(adj, verts)
        if len(comps) == 1:
            coeffs = solve_connected(verts)
        else:
            coeffs = [1]
            for comp in comps:
                coeffs = _convolve(coeffs, solve(comp))
        if len(memo) < memo_limit:
            memo[verts] = coeffs
        return coeffs

    def solve_connected(verts: int) -> list[int]:
        k = verts.bit_count()
        if k == 1:
            return [1, 1]
        v = _max_degree_vertex(adj, verts)
        vbit = 1 << v
        without = solve(verts & ~vbit)
        contracted = solve(verts & ~vbit & ~adj[v])
        out = list(without)
        if len(out) < len(contracted) + 1:
            out.extend([0] * (len(contracted) + 1 - len(out)))
        for t, c in enumerate(contracted):
            out[t + 1] += c
        return out

    return IndependencePolynomial(g.n, tuple(solve(g.full_mask)))


def brute_force_polynomial(g: Graph) -> IndependencePolynomial:
    """Enumeration oracle: test all 2^n subsets for independence.

    A subset is independent iff the subset without its lowest vertex is
    independent and that vertex has no neighbor inside the subset, so the
    scan reuses earlier answers but still visits every subset.
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices")
    adj = g.adj
    coeffs = [0] * (g.n + 1)
    coeffs[0] = 1
    indep = bytearray(1 << g.n)
    indep[0] = 1
    for s in range(1, 1 << g.n):
        low = s & -s
        if indep[s ^ low] and not (adj[low.bit_length() - 1] & s):
            indep[s] = 1
            coeffs[s.bit_count()] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return IndependencePolynomial(g.n, tuple(coeffs))


def poly_product(
    p: IndependencePolynomial, q: IndependencePolynomial
) -> IndependencePolynomial:
    """Polynomial of a disjoint union: exact coefficient convolution."""
    return IndependencePolynomial(p.n + q.n, tuple(_convolve(list(p.coeffs), list(q.coeffs))))


def evaluate(p: IndependencePolynomial, activity) -> Fraction:
    """Exact rational value of the polynomial at a rational activity."""
    return p.evaluate(activity)


def count_independent_sets(g: Graph) -> int:
    """Exact number of independent sets, empty set included."""
    return independence_polynomial(g).total()


def kdd_polynomial(d: int) -> IndependencePolynomial:
    """Polynomial of K_{d,d}: 2(1+activity)^d - 1, i.e. coefficient 2*C(d,t) for t >= 1."""
    if d < 1:
        raise ValueError("side size must be at least 1")
    return IndependencePolynomial(
        2 * d, tuple([1] + [2 * comb(d, t) for t in range(1, d + 1)])
    )


def kdd_union_polynomial(m: int, d: int) -> IndependencePolynomial:
    """Polynomial of m disjoint copies of K_{d,d} via repeated convolution."""
    if m < 1:
        raise ValueError("need at least one copy")
    out = kdd_polynomial(d)
    for _ in range(m - 1):
        out = poly_product(out, kdd_polynomial(d))
    return out
