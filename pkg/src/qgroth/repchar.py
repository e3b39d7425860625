"""Representation-theoretic layer on top of the mutation engine.

Provides the distinguished mutation sequence that produces fundamental
(q,t)-characters as quantum cluster variables, an independent classical
q-character oracle (iterative ladder expansion, valid for the thin
fundamental modules exercised here), truncated prefundamental characters,
the quantized Baxter relation, the Drinfeld-double relation battery, and
the type-A thinness check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanData
from .quiver import QuiverError, QuiverSlice, Vertex, build_slice
from .qcluster import QuantumSeed, initial_seed, mutate_along
from .qtorus import (
    TorusElement,
    TorusError,
    embed_Y,
    evaluate_t1,
    weight_character,
)

Verdict = tuple[str, bool, str]


class RepCharError(ValueError):
    pass


# ----------------------------------------------------------- mutation sequence

@dataclass(frozen=True)
class MutationSequenceSpec:
    origin: Vertex
    h_prime: int
    column_order: tuple[int, ...]
    sequence: tuple[Vertex, ...]

    @property
    def read_vertex(self) -> Vertex:
        return self.sequence[-1]


def mutation_sequence(c: CartanData, i: int, r: int) -> MutationSequenceSpec:
    """The column-by-column mutation sequence producing the fundamental
    (q,t)-character at origin (i, r), read off at (i, r + 2h')."""
    if not c.in_ihat(i, r):
        raise RepCharError(f"origin ({i},{r}) lies off the vertex lattice")
    h_prime = (c.dual_coxeter + 1) // 2
    same = [j for j in c.nodes if c.node_class(j) == c.node_class(i) and j != i]
    other = [j for j in c.nodes if c.node_class(j) != c.node_class(i)]
    column_order = (i, *same, *other)
    top = r + 2 * h_prime
    seq: list[Vertex] = []
    for k in range(h_prime, 1, -1):
        for j in column_order:
            eps = 0 if c.node_class(j) == c.node_class(i) else 1
            seq.extend((j, top - eps - 2 * l) for l in range(k))
    seq.append((i, top))
    return MutationSequenceSpec(
        origin=(i, r),
        h_prime=h_prime,
        column_order=column_order,
        sequence=tuple(seq),
    )


# ------------------------------------------------------ fundamental characters

@dataclass(frozen=True)
class QtCharacter:
    origin: Vertex
    vertex_read: Vertex
    value: TorusElement
    seed: QuantumSeed


def default_window(c: CartanData, i: int, r: int) -> tuple[int, int]:
    h_prime = (c.dual_coxeter + 1) // 2
    return (r - 1, r + 2 * h_prime + 2)


def fundamental_qt_character(
    c: CartanData, i: int, r: int, window: tuple[int, int] | None = None
) -> QtCharacter:
    """Run the mutation sequence from the initial seed and read the variable
    at (i, r + 2h'); the result is window-independent once the window holds
    the whole sequence in its exchangeable range."""
    spec = mutation_sequence(c, i, r)
    if window is None:
        window = default_window(c, i, r)
    slc = build_slice(c, window=window)
    missing = [v for v in spec.sequence if v not in slc.exchangeable]
    if missing:
        raise RepCharError(
            f"window {window} too small: sequence vertices {missing} not exchangeable"
        )
    seed = mutate_along(initial_seed(c, slc), spec.sequence)
    return QtCharacter(
        origin=spec.origin,
        vertex_read=spec.read_vertex,
        value=seed.vars[spec.read_vertex],
        seed=seed,
    )


# ----------------------------------------------------- classical q-char oracle

FM_DEFAULT_BUDGET = 10000


def _ladder(c: CartanData, j: int, s: int) -> dict[Vertex, int]:
    # root-monomial exponent pattern anchored at Y-key (j, s)
    out = {(j, s): 1, (j, s + 2): 1}
    for l in c.neighbors(j):
        out[(l, s + 1)] = out.get((l, s + 1), 0) - 1
    return out


def classical_fm_qchar(
    c: CartanData, i: int, r: int, budget: int = FM_DEFAULT_BUDGET
) -> dict[tuple, int]:
    """Classical q-character of the fundamental module with highest Y-key
    (i, r), by iterated ladder expansion from the dominant monomial.

    Each positive Y-factor of a monomial spawns the monomial obtained by
    dividing out the ladder anchored at that factor.  For the thin modules
    tested here every monomial has multiplicity 1, so the expansion is a
    plain saturation; the budget guards against misuse."""
    if not c.in_ihat(i, r):
        raise RepCharError(f"highest Y-key ({i},{r}) lies off the vertex lattice")
    start = frozenset({((i, r), 1)})
    seen = {start}
    queue = [start]
    while queue:
        if len(seen) > budget:
            raise RepCharError(
                f"q-character expansion exceeded budget {budget}; "
                "oracle is only valid for thin fundamental modules"
            )
        mono = queue.pop()
        exp = dict(mono)
        for (j, s), e in exp.items():
            if e <= 0:
                continue
            nxt = dict(exp)
            for key, de in _ladder(c, j, s).items():
                nxt[key] = nxt.get(key, 0) - de
            cand = frozenset(kv for kv in nxt.items() if kv[1] != 0)
            if cand not in seen:
                seen.add(cand)
                queue.append(cand)
    return {tuple(sorted(m)): 1 for m in seen}


def fm_qchar_embedded(c: CartanData, i: int, r: int) -> dict:
    """The oracle's q-character pushed into the z-torus and read at t=1."""
    total = TorusElement.zero(c)
    for mono in classical_fm_qchar(c, i, r):
        total = total + embed_Y(c, dict(mono))
    return evaluate_t1(total)


# ----------------------------------------------------------- prefundamentals

@dataclass(frozen=True)
class Prefundamental:
    monomial: TorusElement            # the z-variable carrying the class
    weight: tuple[int, ...]           # doubled fundamental-weight coordinates
    chi_truncated: dict[tuple[int, ...], int]
    depth: int


def prefundamental_qt_character(
    c: CartanData, i: int, r: int, depth: int
) -> Prefundamental:
    """Truncation of the prefundamental class: exact monomial and weight
    factor for any type, character factor implemented in rank 1 only."""
    if depth < 0:
        raise RepCharError("depth must be non-negative")
    if not c.in_ihat(i, r):
        raise RepCharError(f"({i},{r}) lies off the vertex lattice")
    weight = tuple(r if j == i else 0 for j in c.nodes)
    if (c.dynkin_type, c.rank) != ("A", 1):
        raise RepCharError(
            "the character factor is only available in type A1; "
            "no closed formula is implemented for higher rank"
        )
    chi = {(-2 * l,): 1 for l in range(depth + 1)}
    return Prefundamental(
        monomial=TorusElement.monomial(c, {(i, r): 1}),
        weight=weight,
        chi_truncated=chi,
        depth=depth,
    )


# ------------------------------------------------------------ Baxter relation

@dataclass(frozen=True)
class BaxterVerdict:
    r: int
    ok: bool
    lhs: TorusElement
    rhs: TorusElement

    def __str__(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return (
            f"{tag} baxter r={self.r}\n  lhs = {self.lhs.to_text()}\n"
            f"  rhs = {self.rhs.to_text()}"
        )


def baxter_check(c: CartanData, r: int) -> BaxterVerdict:
    """Quantized Baxter relation in rank 1 at spectral level 2r:

        chi * z[1,2r] = t^{-1/2} z[1,2r-2] + t^{1/2} z[1,2r+2]

    where chi is the fundamental (q,t)-character with highest Y-key
    (1, 2r-2).  Weight bookkeeping is cross-checked via the character map."""
    if (c.dynkin_type, c.rank) != ("A", 1):
        raise RepCharError("the Baxter relation check is rank-1 only")
    char = fundamental_qt_character(c, 1, 2 * r - 2)
    lhs = char.value * TorusElement.monomial(c, {(1, 2 * r): 1})
    rhs = TorusElement.monomial(c, {(1, 2 * r - 2): 1}, {-1: 1}) + (
        TorusElement.monomial(c, {(1, 2 * r + 2): 1}, {1: 1})
    )
    ok = lhs == rhs and weight_character(lhs) == weight_character(rhs)
    return BaxterVerdict(r=r, ok=ok, lhs=lhs, rhs=rhs)


# ------------------------------------------------------------ Drinfeld double

def drinfeld_double_check(q_sign: int = -1) -> list[Verdict]:
    """Relation battery for the rank-1 realization.

    E is the mutated cluster variable of the three-vertex slice, F = z[1,0],
    K = z[1,-2], K' = z[1,2], and q = q_sign * t^{1/2}.  The expected sign is
    q_sign = -1; passing +1 falsifies the E/F commutator relation."""
    if q_sign not in (-1, 1):
        raise RepCharError("q_sign must be +1 or -1")
    from .cartan import build_cartan

    c = build_cartan("A", 1)
    slc = build_slice(c, N=1)
    seed = mutate_along(initial_seed(c, slc), [(1, 0)])
    E = seed.vars[(1, 0)]
    F = TorusElement.monomial(c, {(1, 0): 1})
    K = TorusElement.monomial(c, {(1, -2): 1})
    Kp = TorusElement.monomial(c, {(1, 2): 1})

    # q = q_sign v, so q^2 = t and q - q^{-1} = q_sign (t^{1/2} - t^{-1/2})
    q2 = {2: 1}
    qm2 = {-2: 1}
    q_minus_qinv = {1: q_sign, -1: -q_sign}

    checks: list[Verdict] = []

    def rel(name: str, lhs: TorusElement, rhs: TorusElement) -> None:
        ok = lhs == rhs
        detail = "" if ok else f"lhs={lhs.to_text()} rhs={rhs.to_text()}"
        checks.append((name, ok, detail))

    rel("KE = q^2 EK", K * E, (E * K).scaled(q2))
    rel("K'E = q^-2 EK'", Kp * E, (E * Kp).scaled(qm2))
    rel("KF = q^-2 FK", K * F, (F * K).scaled(qm2))
    rel("K'F = q^2 FK'", Kp * F, (F * Kp).scaled(q2))
    rel("KK' = K'K", K * Kp, Kp * K)
    rel(
        "[E,F] = (q - q^-1)(K - K')",
        E * F - F * E,
        (K - Kp).scaled(q_minus_qinv),
    )
    rel(
        "EF = t^-1/2 K + t^1/2 K'",
        E * F,
        K.scaled({-1: 1}) + Kp.scaled({1: 1}),
    )
    return checks


# ------------------------------------------------------------------- thinness

def thinness_flatten_check(c: CartanData, i: int, r: int) -> Verdict:
    """Type A only: every coefficient of the fundamental (q,t)-character
    must be the constant 1 (thin module, trivial t-powers)."""
    if c.dynkin_type != "A":
        raise RepCharError("the thinness check applies to type A only")
    char = fundamental_qt_character(c, i, r)
    bad = [
        k for k, coeff in char.value.terms.items() if coeff != {0: 1}
    ]
    if bad:
        return (
            f"thin A{c.rank} ({i},{r})",
            False,
            f"{len(bad)} monomials with nontrivial coefficients",
        )
    return (f"thin A{c.rank} ({i},{r})", True, f"{len(char.value.terms)} monomials")
