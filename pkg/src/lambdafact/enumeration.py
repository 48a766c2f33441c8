"""Brute-force generation of permutations, endofunctions and rooted forests,
plus the colored-forest bijection that explains the tree-count convolution
identity combinatorially.

Everything here is deliberately exhaustive and simple: these generators are
the ground truth that the closed-form routes in `sequences` are checked
against.  Cutoffs keep every stream at desk scale; exceeding one raises
ValueError rather than silently grinding.

Vertex labels are 1-based throughout.  An endofunction on [n] is stored as
a tuple `image` with image[i-1] = sigma(i).  A rooted forest on [m] is a
parent tuple of the same shape where parent 0 marks a root, with all edges
oriented toward the roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations, product as _product
from typing import Iterator, Mapping, Sequence

from .polynomial import Polynomial
from .symbols import LAM, U

PERMUTATION_CUTOFF = 8
ENDOFUNCTION_CUTOFF = 7
FOREST_CUTOFF = 7
MSTAR_CUTOFF = 10 ** 6
PERMANENT_CUTOFF = 10


@dataclass(frozen=True)
class Endofunction:
    """A self-map of [n], n = len(image), with image[i-1] = sigma(i)."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        for v in self.image:
            if not 1 <= v <= n:
                raise ValueError(f"image value {v} outside [{n}]")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]


@dataclass(frozen=True)
class DigraphDecomposition:
    """Cycle vertices of a functional digraph plus the hanging forest.

    `parent[v-1]` is sigma(v) for vertices off the cycles and 0 for cycle
    vertices, which are exactly the roots of the forest.
    """

    cycle_vertices: frozenset[int]
    parent: tuple[int, ...]


@dataclass(frozen=True)
class ColoredForestPermutation:
    """A rooted forest, a permutation of its roots, and colored fixed points.

    parent: forest on [n+1] (0 marks roots); pi: sorted (root, image) pairs
    forming a permutation of the root set; colors: sorted (vertex, color)
    pairs whose domain is exactly the fixed points of pi.
    """

    parent: tuple[int, ...]
    pi: tuple[tuple[int, int], ...]
    colors: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.parent) - 1

    def roots(self) -> frozenset[int]:
        return frozenset(v for v, p in enumerate(self.parent, start=1) if p == 0)

    def component_count(self) -> int:
        return sum(1 for p in self.parent if p == 0)


# ---- permutations and the families they count ----


def permutations_with_fix(n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """All permutations of [n] (1-based image tuples) with fixed-point counts."""
    if n < 0 or n > PERMUTATION_CUTOFF:
        raise ValueError(f"permutation enumeration supports 0 <= n <= {PERMUTATION_CUTOFF}")
    for p in _permutations(range(1, n + 1)):
        fix = sum(1 for i, v in enumerate(p, start=1) if v == i)
        yield p, fix


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Set partitions of [n] as restricted growth strings (block of element i+1
    is rgs[i]; blocks are numbered from 0 in order of first appearance)."""
    if n < 0 or n > PERMUTATION_CUTOFF:
        raise ValueError(f"set partition enumeration supports 0 <= n <= {PERMUTATION_CUTOFF}")
    if n == 0:
        yield ()
        return

    rgs = [0] * n

    def extend(i: int, maxval: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(rgs)
            return
        for b in range(maxval + 2):
            rgs[i] = b
            yield from extend(i + 1, max(maxval, b))

    yield from extend(1, 0)


@dataclass(frozen=True)
class EnumeratedFamilies:
    """Exhaustively computed statistics for one n."""

    n: int
    lambda_factorial: Polynomial  # fixed-point generating polynomial in λ
    bell: Polynomial              # block-count generating polynomial in u
    hermite: Polynomial           # involution fixed-point polynomial in u
    derangements: int
    involutions: int
    matchings: int


def oracle_polynomials(n: int) -> EnumeratedFamilies:
    """Compute the named families by direct enumeration (n <= cutoff)."""
    lam = Polynomial.variable(LAM)
    u = Polynomial.variable(U)

    fix_counts: dict[int, int] = {}
    inv_fix_counts: dict[int, int] = {}
    for p, fix in permutations_with_fix(n):
        fix_counts[fix] = fix_counts.get(fix, 0) + 1
        if all(p[v - 1] == i for i, v in enumerate(p, start=1)):
            inv_fix_counts[fix] = inv_fix_counts.get(fix, 0) + 1

    block_counts: dict[int, int] = {}
    for rgs in set_partitions(n):
        blocks = (max(rgs) + 1) if rgs else 0
        block_counts[blocks] = block_counts.get(blocks, 0) + 1

    f = sum((lam ** j * c for j, c in fix_counts.items()), Polynomial.zero())
    b = sum((u ** j * c for j, c in block_counts.items()), Polynomial.zero())
    h = sum((u ** j * c for j, c in inv_fix_counts.items()), Polynomial.zero())
    return EnumeratedFamilies(
        n=n,
        lambda_factorial=f,
        bell=b,
        hermite=h,
        derangements=fix_counts.get(0, 0),
        involutions=sum(inv_fix_counts.values()),
        matchings=inv_fix_counts.get(0, 0),
    )


# ---- endofunctions and their digraphs ----


def endofunctions(n: int) -> Iterator[Endofunction]:
    """All n**n self-maps of [n], in lexicographic order of the image tuple."""
    if n < 0 or n > ENDOFUNCTION_CUTOFF:
        raise ValueError(f"endofunction enumeration supports 0 <= n <= {ENDOFUNCTION_CUTOFF}")
    for image in _product(range(1, n + 1), repeat=n):
        yield Endofunction(image)


def digraph_decompose(sigma: Endofunction) -> DigraphDecomposition:
    """Split a functional digraph into its cycle vertices and hanging forest.

    The cycle set is found by iterating the image of the whole vertex set
    until it stabilizes.
    """
    image = sigma.image
    current = frozenset(range(1, len(image) + 1))
    while True:
        nxt = frozenset(image[v - 1] for v in current)
        if nxt == current:
            break
        current = nxt
    parent = tuple(
        0 if v in current else image[v - 1] for v in range(1, len(image) + 1)
    )
    return DigraphDecomposition(cycle_vertices=current, parent=parent)


# ---- rooted forests ----


def is_forest(parent: Sequence[int]) -> bool:
    """True iff following parents from every vertex reaches a root (0)."""
    m = len(parent)
    state = [0] * (m + 1)  # 0 unknown, 1 on current path, 2 proven good
    for start in range(1, m + 1):
        v = start
        path = []
        while v != 0 and state[v] == 0:
            state[v] = 1
            path.append(v)
            v = parent[v - 1]
        ok = v == 0 or state[v] == 2
        for w in path:
            state[w] = 2 if ok else 1
        if not ok:
            return False
    return True


def forests(m: int) -> Iterator[tuple[int, ...]]:
    """All rooted labeled forests on [m], as parent tuples (0 marks roots).

    Generated by filtering the (m+1)**m maps [m] -> [m] u {root marker}
    for acyclicity, in lexicographic order.
    """
    if m < 0 or m > FOREST_CUTOFF:
        raise ValueError(f"forest enumeration supports 0 <= m <= {FOREST_CUTOFF}")
    for parent in _product(range(0, m + 1), repeat=m):
        if is_forest(parent):
            yield parent


def forest_root_count(parent: Sequence[int]) -> int:
    return sum(1 for p in parent if p == 0)


# ---- the colored bijection ----


def enumerate_m_star(n: int, lam: int) -> Iterator[Endofunction]:
    """Self-maps of [n+lam+1] with nothing mapping to n+1 and every vertex
    above n+1 fixed.  There are (n+lam)**(n+1) of them; streamed in
    lexicographic order of the image tuple."""
    if n < 0 or lam < 0:
        raise ValueError("need n >= 0 and lam >= 0")
    count = (n + lam) ** (n + 1)
    if count > MSTAR_CUTOFF:
        raise ValueError(f"{count} maps exceeds the enumeration cutoff {MSTAR_CUTOFF}")
    size = n + lam + 1
    allowed = tuple(v for v in range(1, size + 1) if v != n + 1)
    tail = tuple(range(n + 2, size + 1))
    for head in _product(allowed, repeat=n + 1):
        yield Endofunction(head + tail)


def _validate_m_star(sigma: Endofunction, n: int, lam: int) -> None:
    if sigma.n != n + lam + 1:
        raise ValueError(f"expected a map on [{n + lam + 1}], got [{sigma.n}]")
    for i in range(1, sigma.n + 1):
        if sigma(i) == n + 1:
            raise ValueError(f"vertex {i} maps to the forbidden vertex {n + 1}")
    for k in range(n + 2, sigma.n + 1):
        if sigma(k) != k:
            raise ValueError(f"vertex {k} must be fixed, maps to {sigma(k)}")


def sigma_to_tau(
    sigma: Endofunction, n: int, lam: int
) -> tuple[tuple[int, ...], dict[int, int]]:
    """Rewrite sigma into the intermediate map tau on [n+1] plus colors.

    Three rules: a fixed point in [n] becomes an edge to n+1; an edge into
    color vertex n+j+1 becomes a fixed point colored j; the color vertices
    are dropped.  Other edges are copied.
    """
    _validate_m_star(sigma, n, lam)
    tau = [0] * (n + 1)
    colors: dict[int, int] = {}
    for i in range(1, n + 2):
        s = sigma(i)
        if s == i:  # only possible for i in [n]
            tau[i - 1] = n + 1
        elif s <= n:
            tau[i - 1] = s
        else:  # s >= n+2: colored fixed point
            tau[i - 1] = i
            colors[i] = s - n - 1
    return tuple(tau), colors


def tau_to_sigma(
    tau: Sequence[int], colors: Mapping[int, int], n: int, lam: int
) -> Endofunction:
    """Invert the three rewriting rules and restore the fixed tail."""
    image = [0] * (n + lam + 1)
    for i in range(1, n + 2):
        t = tau[i - 1]
        if t == i:
            j = colors.get(i)
            if j is None:
                raise ValueError(f"fixed point {i} has no color")
            if not 1 <= j <= lam:
                raise ValueError(f"color {j} of vertex {i} outside [1..{lam}]")
            image[i - 1] = n + 1 + j
        elif t == n + 1:
            image[i - 1] = i
        else:
            image[i - 1] = t
    for k in range(n + 2, n + lam + 2):
        image[k - 1] = k
    return Endofunction(tuple(image))


def sigma_to_pair(sigma: Endofunction, n: int, lam: int) -> ColoredForestPermutation:
    """Map a member of the restricted family to (forest, root permutation,
    colored fixed points)."""
    tau, colors = sigma_to_tau(sigma, n, lam)
    decomp_current = frozenset(range(1, n + 2))
    while True:
        nxt = frozenset(tau[v - 1] for v in decomp_current)
        if nxt == decomp_current:
            break
        decomp_current = nxt
    parent = tuple(
        0 if v in decomp_current else tau[v - 1] for v in range(1, n + 2)
    )
    pi = tuple(sorted((v, tau[v - 1]) for v in decomp_current))
    fixed = {v for v, w in pi if v == w}
    if fixed != set(colors):
        raise ValueError("colored vertices do not match the fixed points")
    return ColoredForestPermutation(
        parent=parent,
        pi=pi,
        colors=tuple(sorted(colors.items())),
    )


def pair_to_tau(
    pair: ColoredForestPermutation, n: int, lam: int
) -> tuple[tuple[int, ...], dict[int, int]]:
    """Rebuild the intermediate map from a validated pair."""
    if len(pair.parent) != n + 1:
        raise ValueError(f"forest must cover [{n + 1}]")
    if not is_forest(pair.parent):
        raise ValueError("parent map contains a cycle")
    roots = pair.roots()
    domain = {v for v, _ in pair.pi}
    image = [w for _, w in pair.pi]
    if domain != roots or set(image) != roots or len(set(image)) != len(image):
        raise ValueError("pi must permute exactly the roots of the forest")
    pi = dict(pair.pi)
    fixed = {v for v, w in pair.pi if v == w}
    colors = dict(pair.colors)
    if set(colors) != fixed:
        raise ValueError("colors must be assigned to exactly the fixed points")
    for v, c in colors.items():
        if not 1 <= c <= lam:
            raise ValueError(f"color {c} of vertex {v} outside [1..{lam}]")
    tau = tuple(
        pi[v] if pair.parent[v - 1] == 0 else pair.parent[v - 1]
        for v in range(1, n + 2)
    )
    return tau, colors


def pair_to_sigma(pair: ColoredForestPermutation, n: int, lam: int) -> Endofunction:
    """Inverse of sigma_to_pair."""
    tau, colors = pair_to_tau(pair, n, lam)
    return tau_to_sigma(tau, colors, n, lam)


def exhaustive_roundtrip(n: int, lam: int) -> dict[int, int]:
    """Round-trip every member of the restricted family through the bijection.

    Returns the census {k: count} keyed by forest component count minus one.
    Raises if any round trip fails; success proves the map injective, and
    the caller can compare the census against the closed-form counts.
    """
    strata: dict[int, int] = {}
    for sigma in enumerate_m_star(n, lam):
        pair = sigma_to_pair(sigma, n, lam)
        back = pair_to_sigma(pair, n, lam)
        if back.image != sigma.image:
            raise RuntimeError(
                f"round trip failed at sigma={sigma.image}: got {back.image}"
            )
        k = pair.component_count() - 1
        strata[k] = strata.get(k, 0) + 1
    return strata


# ---- permanents ----


def ryser_permanent(rows: Sequence[Sequence[int]]) -> int:
    """Exact permanent of a small square integer matrix by inclusion-exclusion."""
    n = len(rows)
    if n == 0:
        return 1
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix must be square")
    total = 0
    for mask in range(1, 1 << n):
        cols = [j for j in range(n) if mask >> j & 1]
        prod = 1
        for r in rows:
            s = 0
            for j in cols:
                s += r[j]
            prod *= s
            if prod == 0:
                break
        total += (-1) ** len(cols) * prod
    return (-1) ** n * total


def permanent_check(n: int) -> int:
    """Permanent of the all-ones matrix minus the identity (counts derangements)."""
    if n < 0 or n > PERMANENT_CUTOFF:
        raise ValueError(f"permanent check supports 0 <= n <= {PERMANENT_CUTOFF}")
    rows = [[0 if i == j else 1 for j in range(n)] for i in range(n)]
    return ryser_permanent(rows)


# ---- DOT rendering ----


def endofunction_to_dot(sigma: Endofunction, name: str = "endofunction") -> str:
    """Graphviz text for a functional digraph; cycle edges are drawn bold."""
    decomp = digraph_decompose(sigma)
    lines = [f"digraph {name} {{"]
    for v in range(1, sigma.n + 1):
        lines.append(f"  {v};")
    for v in range(1, sigma.n + 1):
        style = " [style=bold]" if v in decomp.cycle_vertices else ""
        lines.append(f"  {v} -> {sigma(v)}{style};")
    lines.append("}")
    return "\n".join(lines)


def pair_to_dot(pair: ColoredForestPermutation, name: str = "forest_pair") -> str:
    """Graphviz text for (forest, root permutation, colors).

    Tree edges point toward the roots; permutation edges are bold; colored
    fixed points carry their color in the node label.
    """
    colors = dict(pair.colors)
    lines = [f"digraph {name} {{"]
    for v in range(1, pair.n + 2):
        if v in colors:
            lines.append(f'  {v} [label="{v} (c{colors[v]})"];')
        else:
            lines.append(f"  {v};")
    for v, p in enumerate(pair.parent, start=1):
        if p != 0:
            lines.append(f"  {v} -> {p};")
    for v, w in pair.pi:
        lines.append(f"  {v} -> {w} [style=bold];")
    lines.append("}")
    return "\n".join(lines)
