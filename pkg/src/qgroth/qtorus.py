"""Quantum torus arithmetic over a Dynkin diagram's vertex lattice.

Elements are finite sums of commutative monomials in the variables z[i,r],
with coefficients that are Laurent polynomials in v = t^{1/2} (stored as
integer dicts v-exponent -> coefficient, so no rationals ever appear).  The
commutative monomials are the bar-invariant basis; the noncommutative star
product inserts a power of v determined by the skew form

    Lambda((i,r), (j,s)) = f_form(i, j, s - r),

extended bilinearly, via comm(e) * comm(f) = v^Lambda(e,f) comm(e+f).

Also provided: the embedding of Y-variable monomials (Y keyed by (i,r),
standing for the Y-variable at spectral shift r+1, maps to z[i,r]/z[i,r+2]),
evaluation at t=1, the weight-group-ring character, and exact left division
(the workhorse of quantum exchange relations, where the Laurent phenomenon
guarantees exactness).
"""

from __future__ import annotations

import json

from .cartan import CartanData, f_form

Vertex = tuple[int, int]
TCoeff = dict[int, int]          # v-exponent -> integer coefficient
ExpKey = tuple[tuple[Vertex, int], ...]  # ((i,r), e) factors in canonical order


class TorusError(ValueError):
    pass


class NonExactDivision(TorusError):
    """Left division left a remainder; carries it for diagnosis."""

    def __init__(self, message: str, remainder: "TorusElement"):
        super().__init__(message)
        self.remainder = remainder


# ---------------------------------------------------------------- TCoeff ops

def tc_add(a: TCoeff, b: TCoeff) -> TCoeff:
    out = dict(a)
    for k, v in b.items():
        n = out.get(k, 0) + v
        if n:
            out[k] = n
        else:
            out.pop(k, None)
    return out


def tc_mul(a: TCoeff, b: TCoeff) -> TCoeff:
    out: TCoeff = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = ka + kb
            n = out.get(k, 0) + va * vb
            if n:
                out[k] = n
            else:
                out.pop(k, None)
    return out


def tc_neg(a: TCoeff) -> TCoeff:
    return {k: -v for k, v in a.items()}


def tc_shift(a: TCoeff, s: int) -> TCoeff:
    return {k + s: v for k, v in a.items()}


def tc_bar(a: TCoeff) -> TCoeff:
    return {-k: v for k, v in a.items()}


def tc_exact_div(num: TCoeff, den: TCoeff) -> TCoeff:
    """Exact division of Laurent polynomials in v over the integers."""
    if not den:
        raise TorusError("division by zero coefficient")
    if not num:
        return {}
    quot: TCoeff = {}
    rem = dict(num)
    d_top = max(den)
    d_lead = den[d_top]
    # any exact quotient has its v-exponents confined to this range
    min_shift = min(num) - min(den)
    while rem:
        r_top = max(rem)
        shift = r_top - d_top
        if shift < min_shift:
            raise TorusError(f"coefficient {num} not divisible by {den}")
        lead, r = divmod(rem[r_top], d_lead)
        if r != 0:
            raise TorusError(f"coefficient {num} not divisible by {den}")
        quot[shift] = lead
        rem = tc_add(rem, {k + shift: -v * lead for k, v in den.items()})
    return quot


def tc_text(a: TCoeff) -> str:
    if not a:
        return "0"
    parts = []
    for k in sorted(a, reverse=True):
        c = a[k]
        if k == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else ("-" if c == -1 else str(c) + "*")
            parts.append(f"{head}t^{{{k}/2}}")
    return "(" + " + ".join(parts) + ")" if len(parts) > 1 else parts[0]


# ------------------------------------------------------------ exponent keys

def vertex_sort_key(v: Vertex) -> tuple[int, int]:
    # level descending, node ascending: the slice reading order
    return (-v[1], v[0])


def make_key(exp: dict[Vertex, int]) -> ExpKey:
    return tuple(
        (u, exp[u]) for u in sorted(exp, key=vertex_sort_key) if exp[u] != 0
    )


def key_add(a: ExpKey, b: ExpKey, sign: int = 1) -> ExpKey:
    exp = {u: e for u, e in a}
    for u, e in b:
        exp[u] = exp.get(u, 0) + sign * e
    return make_key(exp)


def key_cmp(a: ExpKey, b: ExpKey) -> int:
    """Lexicographic comparison along the canonical vertex order.

    Keys are stored sorted by (level desc, node asc) with no zero exponents,
    so a single merge pass suffices; a vertex missing on one side counts as
    exponent 0 there."""
    ia, ib = 0, 0
    la, lb = len(a), len(b)
    while ia < la and ib < lb:
        (na, ra), ea = a[ia]
        (nb, rb), eb = b[ib]
        ka = (-ra, na)
        kb = (-rb, nb)
        if ka < kb:
            return 1 if ea > 0 else -1
        if kb < ka:
            return -1 if eb > 0 else 1
        if ea != eb:
            return 1 if ea > eb else -1
        ia += 1
        ib += 1
    while ia < la:
        return 1 if a[ia][1] > 0 else -1
    while ib < lb:
        return -1 if b[ib][1] > 0 else 1
    return 0


class _KeyOrder:
    __slots__ = ("key",)

    def __init__(self, key: ExpKey):
        self.key = key

    def __lt__(self, other: "_KeyOrder") -> bool:
        return key_cmp(self.key, other.key) < 0


def lambda_of(c: CartanData, e: ExpKey | dict, f: ExpKey | dict) -> int:
    """Skew form, extended bilinearly from Lambda((i,r),(j,s)) = F_ij(s-r)."""
    ee = dict(e) if not isinstance(e, dict) else e
    ff = dict(f) if not isinstance(f, dict) else f
    total = 0
    for (i, r), a in ee.items():
        for (j, s), b in ff.items():
            if a and b:
                total += a * b * f_form(c, i, j, s - r)
    return total


# ------------------------------------------------------------- torus values

class TorusElement:
    """Finite sum of commutative monomials with Laurent coefficients in v."""

    __slots__ = ("cartan", "terms", "_lead", "_trail")

    def __init__(self, cartan: CartanData, terms: dict[ExpKey, TCoeff]):
        self.cartan = cartan
        self.terms = {k: c for k, c in terms.items() if c}
        self._lead: ExpKey | None = None
        self._trail: ExpKey | None = None

    # -- constructors
    @classmethod
    def zero(cls, cartan: CartanData) -> "TorusElement":
        return cls(cartan, {})

    @classmethod
    def monomial(
        cls,
        cartan: CartanData,
        exp: dict[Vertex, int],
        coeff: TCoeff | int = 1,
    ) -> "TorusElement":
        if isinstance(coeff, int):
            coeff = {0: coeff} if coeff else {}
        return cls(cartan, {make_key(exp): dict(coeff)})

    @classmethod
    def one(cls, cartan: CartanData) -> "TorusElement":
        return cls.monomial(cartan, {})

    # -- ring structure
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TorusElement)
            and self.cartan is other.cartan
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset((k, frozenset(c.items())) for k, c in self.terms.items()))

    def __add__(self, other: "TorusElement") -> "TorusElement":
        self._check_peer(other)
        out = {k: dict(c) for k, c in self.terms.items()}
        for k, c in other.terms.items():
            out[k] = tc_add(out.get(k, {}), c)
        return TorusElement(self.cartan, out)

    def __neg__(self) -> "TorusElement":
        return TorusElement(self.cartan, {k: tc_neg(c) for k, c in self.terms.items()})

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        """Star product: comm(e) * comm(f) = v^Lambda(e,f) comm(e+f)."""
        self._check_peer(other)
        out: dict[ExpKey, TCoeff] = {}
        for ke, ce in self.terms.items():
            for kf, cf in other.terms.items():
                shift = lambda_of(self.cartan, ke, kf)
                k = key_add(ke, kf)
                out[k] = tc_add(out.get(k, {}), tc_shift(tc_mul(ce, cf), shift))
        return TorusElement(self.cartan, out)

    def __pow__(self, n: int) -> "TorusElement":
        if n < 0:
            raise TorusError("negative powers only via explicit inverse monomials")
        acc = TorusElement.one(self.cartan)
        for _ in range(n):
            acc = acc * self
        return acc

    def scaled(self, coeff: TCoeff | int) -> "TorusElement":
        if isinstance(coeff, int):
            coeff = {0: coeff} if coeff else {}
        return TorusElement(
            self.cartan, {k: tc_mul(c, coeff) for k, c in self.terms.items()}
        )

    def bar(self) -> "TorusElement":
        """Bar involution: fixes commutative monomials, inverts v."""
        return TorusElement(self.cartan, {k: tc_bar(c) for k, c in self.terms.items()})

    # -- term access
    def lead_key(self) -> ExpKey:
        if not self.terms:
            raise TorusError("zero element has no leading term")
        if self._lead is None:
            self._lead = max(self.terms, key=_KeyOrder)
        return self._lead

    def trail_key(self) -> ExpKey:
        if not self.terms:
            raise TorusError("zero element has no trailing term")
        if self._trail is None:
            self._trail = min(self.terms, key=_KeyOrder)
        return self._trail

    def _check_peer(self, other: "TorusElement") -> None:
        if not isinstance(other, TorusElement) or other.cartan is not self.cartan:
            raise TorusError("operands must live over the same Cartan data")

    # -- rendering
    def sorted_keys(self) -> list[ExpKey]:
        return sorted(self.terms, key=_KeyOrder, reverse=True)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in self.sorted_keys():
            factors = "".join(
                f"z[{i},{r}]" + (f"^{e}" if e != 1 else "") for (i, r), e in k
            )
            coeff = self.terms[k]
            if coeff == {0: 1} and factors:
                parts.append(factors)
            elif factors:
                parts.append(f"{tc_text(coeff)}*{factors}")
            else:
                parts.append(tc_text(coeff))
        return " + ".join(parts)

    def to_json_obj(self) -> dict:
        terms = []
        for k in self.sorted_keys():
            for vpow in sorted(self.terms[k], reverse=True):
                terms.append(
                    {
                        "t_num": vpow,
                        "c": self.terms[k][vpow],
                        "exp": [[i, r, e] for (i, r), e in k],
                    }
                )
        return {"terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def __repr__(self) -> str:
        return f"TorusElement({self.to_text()})"


def monomial(c: CartanData, exp: dict[Vertex, int], coeff: TCoeff | int = 1) -> TorusElement:
    return TorusElement.monomial(c, exp, coeff)


# ----------------------------------------------------- Y-variable embedding

def embed_Y(c: CartanData, y_monomial: dict[Vertex, int]) -> TorusElement:
    """Map a commutative Y-monomial into the z-torus.

    The Y-variable keyed by (i, r) maps to the commutative monomial
    z[i,r] z[i,r+2]^{-1}; the map is multiplicative on Y-monomials."""
    exp: dict[Vertex, int] = {}
    for (i, r), e in y_monomial.items():
        if not c.in_ihat(i, r):
            raise TorusError(f"Y key ({i},{r}) lies off the vertex lattice")
        if e:
            exp[(i, r)] = exp.get((i, r), 0) + e
            exp[(i, r + 2)] = exp.get((i, r + 2), 0) - e
    return TorusElement.monomial(c, exp)


def a_monomial(c: CartanData, i: int, r: int) -> dict[Vertex, int]:
    """Y-exponent map of the root monomial attached to node i at shift r.

    Convention fixed by the rank-1 worked mutation: the monomial with Y-keys
    (i, r-3) and (i, r-1) and inverse neighbor keys (j, r-2), which keeps
    every key on the vertex lattice.  Requires (i, r-1) on the lattice."""
    if not c.in_ihat(i, r - 1):
        raise TorusError(f"root monomial needs ({i},{r - 1}) on the lattice")
    out: dict[Vertex, int] = {(i, r - 3): 1, (i, r - 1): 1}
    for j in c.neighbors(i):
        out[(j, r - 2)] = out.get((j, r - 2), 0) - 1
    return out


# --------------------------------------------------------- specializations

def evaluate_t1(a: TorusElement) -> dict[ExpKey, int]:
    """Evaluate at t=1: each coefficient collapses to its integer value."""
    out: dict[ExpKey, int] = {}
    for k, c in a.terms.items():
        n = sum(c.values())
        if n:
            out[k] = n
    return out


def weight_character(a: TorusElement) -> dict[tuple[int, ...], int]:
    """Group-ring character: z[i,r]^{+-1} maps to the weight -+(r/2) omega_i.

    Weights are tuples of doubled fundamental-weight coordinates (so that
    half-integers stay integral); t-powers map to 1."""
    n = a.cartan.rank
    out: dict[tuple[int, ...], int] = {}
    for k, c in a.terms.items():
        w = [0] * n
        for (i, r), e in k:
            w[i - 1] += -r * e
        coeff = sum(c.values())
        if coeff:
            key = tuple(w)
            tot = out.get(key, 0) + coeff
            if tot:
                out[key] = tot
            else:
                out.pop(key, None)
    return out


def weight_mul(
    a: dict[tuple[int, ...], int], b: dict[tuple[int, ...], int]
) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = tuple(x + y for x, y in zip(wa, wb))
            n = out.get(w, 0) + ca * cb
            if n:
                out[w] = n
            else:
                out.pop(w, None)
    return out


# ------------------------------------------------------------ exact division

MAX_DIVISION_STEPS = 10000


def exact_left_divide(a: TorusElement, d: TorusElement) -> TorusElement:
    """Solve d * x = a exactly; raise NonExactDivision otherwise.

    Strategy: repeatedly eliminate the leading monomial of the remainder
    against the leading monomial of d.  A quotient with d * x = a forces
    lead(a) = lead(d) + lead(x) and trail(a) = trail(d) + trail(x), so the
    candidate exponent is lead(rem) - lead(d), and trail(rem) - trail(d)
    exceeding it certifies non-exactness early."""
    if not d:
        raise TorusError("division by zero")
    c = a.cartan
    d_lead = d.lead_key()
    d_trail = d.trail_key()
    quot = TorusElement.zero(c)
    rem = a
    for _ in range(MAX_DIVISION_STEPS):
        if not rem:
            return quot
        ex = key_add(rem.lead_key(), d_lead, sign=-1)
        low = key_add(rem.trail_key(), d_trail, sign=-1)
        if key_cmp(low, ex) > 0:
            raise NonExactDivision(
                f"non-exact division, remainder {rem.to_text()}", rem
            )
        shift = lambda_of(c, d_lead, ex)
        try:
            cx = tc_exact_div(rem.terms[rem.lead_key()], tc_shift(d.terms[d_lead], shift))
        except TorusError:
            raise NonExactDivision(
                f"non-exact division at coefficient level, remainder {rem.to_text()}",
                rem,
            ) from None
        term = TorusElement.monomial(c, dict(ex), cx)
        quot = quot + term
        rem = rem - d * term
    raise NonExactDivision("division did not terminate", rem)
