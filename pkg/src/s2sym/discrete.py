"""Exact word arithmetic on the discrete subgroup D(theta).

Every element of D has a unique normal form A^q B^m C^n (powers of A
collected on the left; B and C commute). The normal form embeds into the
group manifold at the integer point (theta^q (m, n), q) in "e" coordinates,
and the whole of D is exactly the integer lattice Z^3 under the twisted
product. The multiplication rule on normal forms,

    (q1, m1, n1) * (q2, m2, n2) = (q1 + q2, theta^{-q2} (m1, n1) + (m2, n2)),

is forced by the 4x4 matrix representation rmat, which doubles as an
independent oracle for it in the tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotGeneratingError
from .intmat import Mat2Z, Vec2Z, hcf_all, theta_power
from .liegroup import S2Group, GroupPoint, epoint


@dataclass(frozen=True)
class DElement:
    """Normal form A^q B^m C^n, stored as exact integers."""

    q: int
    m: int
    n: int


IDENTITY_WORD = DElement(0, 0, 0)
GEN_A = DElement(1, 0, 0)
GEN_B = DElement(0, 1, 0)
GEN_C = DElement(0, 0, 1)


def dmul(theta: Mat2Z, d1: DElement, d2: DElement) -> DElement:
    tm = theta_power(theta, -d2.q)
    m, n = tm.apply((d1.m, d1.n))
    return DElement(d1.q + d2.q, m + d2.m, n + d2.n)


def dinv(theta: Mat2Z, d: DElement) -> DElement:
    m, n = theta_power(theta, d.q).apply((d.m, d.n))
    return DElement(-d.q, -m, -n)


def dpow(theta: Mat2Z, d: DElement, e: int) -> DElement:
    if d.q == 0:
        # B- and C-type words commute, so powers are plain scalings.
        return DElement(0, e * d.m, e * d.n)
    if e < 0:
        d = dinv(theta, d)
        e = -e
    result = IDENTITY_WORD
    base = d
    while e:
        if e & 1:
            result = dmul(theta, result, base)
        base = dmul(theta, base, base)
        e >>= 1
    return result


def dcommutator(theta: Mat2Z, d1: DElement, d2: DElement) -> DElement:
    """d1^{-1} d2^{-1} d1 d2 in normal form."""
    out = dmul(theta, dinv(theta, d1), dinv(theta, d2))
    out = dmul(theta, out, d1)
    return dmul(theta, out, d2)


def rmat(theta: Mat2Z, d: DElement) -> tuple[tuple[int, ...], ...]:
    """The 4x4 integer matrix representation of a normal-form word."""
    tq = theta_power(theta, d.q)
    t1, t2 = tq.apply((d.m, d.n))
    return (
        (tq.a, tq.b, 0, t1),
        (tq.c, tq.d, 0, t2),
        (0, 0, 1, d.q),
        (0, 0, 0, 1),
    )


def embed_int(theta: Mat2Z, d: DElement) -> tuple[int, int, int]:
    """Exact "e"-frame lattice coordinates (theta^q (m, n), q) of a word."""
    x1, x2 = theta_power(theta, d.q).apply((d.m, d.n))
    return (x1, x2, d.q)


def embed(g: S2Group, d: DElement) -> GroupPoint:
    return epoint(*embed_int(g.theta, d))


def word_at(theta: Mat2Z, point: tuple[int, int, int]) -> DElement:
    """The unique normal-form word embedding at a given integer lattice point."""
    x1, x2, x3 = point
    m, n = theta_power(theta, -x3).apply((x1, x2))
    return DElement(x3, m, n)


@dataclass(frozen=True)
class GeneratorTriple:
    """Three candidate generators of D in normal form."""

    g1: DElement
    g2: DElement
    g3: DElement

    @property
    def words(self) -> tuple[DElement, DElement, DElement]:
        return (self.g1, self.g2, self.g3)

    @property
    def alphas(self) -> tuple[int, int, int]:
        return (self.g1.q, self.g2.q, self.g3.q)


@dataclass(frozen=True)
class ReducedTriple:
    """An equivalent triple with A-exponents (1, 0, 0).

    beta1, gamma1 are the B/C exponents of the A-carrying generator;
    exponents holds the 2x2 matrix ((b2, b3), (g2, g3)) of the other two.
    """

    beta1: int
    gamma1: int
    exponents: Mat2Z

    @property
    def words(self) -> tuple[DElement, DElement, DElement]:
        ex = self.exponents
        return (
            DElement(1, self.beta1, self.gamma1),
            DElement(0, ex.a, ex.c),
            DElement(0, ex.b, ex.d),
        )


def reduce_generators(theta: Mat2Z, triple: GeneratorTriple) -> ReducedTriple:
    """Nielsen-reduce a triple so the first generator carries A exactly once.

    Requires hcf of the A-exponents to be 1. The moves used (multiply one
    generator by a power of another, invert, swap) never change the
    generated subgroup; the Euclid schedule on A-exponents terminates since
    the sum of their absolute values strictly decreases.
    """
    if hcf_all(triple.alphas) != 1:
        raise NotGeneratingError(
            f"hcf of A-exponents {triple.alphas} is {hcf_all(triple.alphas)}, not 1"
        )
    gens = list(triple.words)
    while True:
        nonzero = [i for i in range(3) if gens[i].q != 0]
        if len(nonzero) == 1:
            break
        j = min(nonzero, key=lambda i: abs(gens[i].q))
        for i in nonzero:
            if i == j:
                continue
            t = gens[i].q // gens[j].q
            gens[i] = dmul(theta, gens[i], dpow(theta, gens[j], -t))
    idx = next(i for i in range(3) if gens[i].q != 0)
    if gens[idx].q == -1:
        gens[idx] = dinv(theta, gens[idx])
    gens[0], gens[idx] = gens[idx], gens[0]
    assert gens[0].q == 1 and gens[1].q == 0 and gens[2].q == 0
    return ReducedTriple(
        beta1=gens[0].m,
        gamma1=gens[0].n,
        exponents=Mat2Z(gens[1].m, gens[2].m, gens[1].n, gens[2].n),
    )


def tau_vectors(theta: Mat2Z, reduced: ReducedTriple) -> tuple[Vec2Z, Vec2Z, Vec2Z, Vec2Z]:
    """The four integer test vectors of a reduced triple: the exponent
    columns and their images under theta."""
    ex = reduced.exponents
    t1 = (ex.a, ex.c)
    t2 = (ex.b, ex.d)
    return (t1, t2, theta.apply(t1), theta.apply(t2))


def _wedge(u: Vec2Z, v: Vec2Z) -> int:
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class GenerationCertificate:
    """Outcome of the generator decision, with the data that settles it.

    violated is None on success, otherwise the first failed condition:
    "hcf(alpha)" (A-exponents not coprime), "5.11" (a component row of the
    tau vectors has hcf > 1) or "5.12" (the pairwise wedges do).
    """

    generates: bool
    violated: str | None
    reduced: ReducedTriple | None
    taus: tuple[Vec2Z, Vec2Z, Vec2Z, Vec2Z] | None


def generates_d(theta: Mat2Z, triple: GeneratorTriple) -> GenerationCertificate:
    """Decide whether a triple generates all of D(theta)."""
    if hcf_all(triple.alphas) != 1:
        return GenerationCertificate(False, "hcf(alpha)", None, None)
    reduced = reduce_generators(theta, triple)
    taus = tau_vectors(theta, reduced)
    row1 = [t[0] for t in taus]
    row2 = [t[1] for t in taus]
    if hcf_all(row1) != 1 or hcf_all(row2) != 1:
        return GenerationCertificate(False, "5.11", reduced, taus)
    wedges = [_wedge(taus[i], taus[j]) for i in range(4) for j in range(i + 1, 4)]
    if hcf_all(wedges) != 1:
        return GenerationCertificate(False, "5.12", reduced, taus)
    return GenerationCertificate(True, None, reduced, taus)


def word_closure(theta: Mat2Z, gens, max_len: int) -> set[DElement]:
    """All elements expressible as words of length <= max_len in gens and inverses.

    Confirmation-only tooling: it can witness that a triple generates, never
    refute it.
    """
    steps = []
    for gword in gens:
        steps.append(gword)
        steps.append(dinv(theta, gword))
    seen = {IDENTITY_WORD}
    frontier = [IDENTITY_WORD]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for s in steps:
                e = dmul(theta, w, s)
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return seen


def words_reach(theta: Mat2Z, gens, targets, max_len: int) -> bool:
    """Breadth-first search for all target words, stopping at max_len."""
    steps = []
    for gword in gens:
        steps.append(gword)
        steps.append(dinv(theta, gword))
    remaining = set(targets) - {IDENTITY_WORD}
    seen = {IDENTITY_WORD}
    frontier = deque([IDENTITY_WORD])
    depth = 0
    while frontier and remaining and depth < max_len:
        depth += 1
        for _ in range(len(frontier)):
            w = frontier.popleft()
            for s in steps:
                e = dmul(theta, w, s)
                if e not in seen:
                    seen.add(e)
                    remaining.discard(e)
                    frontier.append(e)
        if not remaining:
            return True
    return not remaining
