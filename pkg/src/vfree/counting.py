"""Free-subgroup counting series and their holonomic structure.

For a datum with invariants m and mu, let g_l be the number of actions on
a set of l*m points that are free on every finite subgroup, divided by
(l*m)!, and let f_l be the number of free subgroups of index l*m. The two
sequences determine each other through the index-counting convolution

    sum_{u=0}^{l-1} g_u * f_{l-u} = m * l * g_l,   l >= 1,   g_0 = 1,

which is how f_l is computed here. g_l itself has the closed product form

    g_l = prod over geometric edges e of (l*m/|G_e|)! * |G_e|^(l*m/|G_e|)
        / prod over vertices v       of (l*m/|G_v|)! * |G_v|^(l*m/|G_v|),

a hypergeometric-type sequence: its generating function G(z) satisfies an
order-mu linear ODE with integer coefficients theta_0..theta_mu computable
from the type data alone. All arithmetic is exact; g_l is a Fraction and
f_l an arbitrary-precision integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    MissingParam,
    NonIntegralCount,
    NonIntegralTheta,
    NonPositiveCount,
    UnknownClass,
    WrongRank,
)
from .gog import GraphOfGroups, NormalizedGog, check_valid
from .invariants import free_rank, m_gamma, type_vector
from .normalize import normalize


@dataclass(frozen=True)
class CountSeries:
    """Truncated exact series: g[0..N] with g[0] = 1, and f[0] = f_1 etc."""

    m: int
    g: tuple[Fraction, ...]
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.g or self.g[0] != 1:
            raise ValueError("g must start with g_0 = 1")
        if len(self.f) != len(self.g) - 1:
            raise ValueError("f must cover indices 1..N for g covering 0..N")


@dataclass(frozen=True)
class ThetaCoeffs:
    """Integer ODE coefficients theta_0..theta_mu."""

    theta: tuple[int, ...]


def g_series(gog: GraphOfGroups, N: int) -> list[Fraction]:
    """g_0..g_N from the closed product form, exactly.

    Independent of the orientation, since edge orders agree on {e, bar(e)}.
    """
    check_valid(gog)
    m = m_gamma(gog)
    edge_orders = [gog.edge_order[e] for e in gog.graph.orientation_reps()]
    vertex_orders = list(gog.vertex_order.values())
    out = []
    for lam in range(N + 1):
        num = 1
        for s in edge_orders:
            k = lam * m // s
            num *= math.factorial(k) * s**k
        den = 1
        for n in vertex_orders:
            k = lam * m // n
            den *= math.factorial(k) * n**k
        out.append(Fraction(num, den))
    return out


def f_series(gog: GraphOfGroups, N: int) -> list[int]:
    """f_1..f_N, solved from the convolution against g_0..g_N.

    Each value must come out a nonnegative integer, positive whenever the
    free rank is at least 1; a violation signals corrupted order data.
    (A rank-0 datum presents a finite group, where f_1 = 1 and every later
    count is 0.)
    """
    g = g_series(gog, N)
    m = m_gamma(gog)
    mu = free_rank(gog)
    f: list[int] = []
    for lam in range(1, N + 1):
        val = m * lam * g[lam]
        for u in range(1, lam):
            val -= g[u] * f[lam - u - 1]
        if val.denominator != 1:
            raise NonIntegralCount(f"f_{lam} = {val} is not an integer")
        n = int(val)
        if n < 0 or (mu >= 1 and n == 0):
            raise NonPositiveCount(f"f_{lam} = {n} with free rank {mu}")
        f.append(n)
    return f


def count_series(gog: GraphOfGroups, N: int) -> CountSeries:
    return CountSeries(
        m=m_gamma(gog), g=tuple(g_series(gog, N)), f=tuple(f_series(gog, N))
    )


def theta_coeffs(gog: GraphOfGroups) -> ThetaCoeffs:
    """ODE coefficients theta_0..theta_mu from the type data.

    theta_u = (1/u!) * sum_{j=0}^{u} (-1)^(u-j) * C(u,j) * m * (j+1)
              * prod_{k=1}^{m} (j*m + k)^zeta_{gcd(m,k)}.

    Negative exponents contribute reciprocal factors, so the intermediate
    values are rationals; each final theta_u must be an integer.
    """
    check_valid(gog)
    tv = type_vector(gog)
    m = tv.m
    mu = free_rank(gog)

    def base_term(j: int) -> Fraction:
        num = m * (j + 1)
        den = 1
        for k in range(1, m + 1):
            z = tv.zeta[math.gcd(m, k)]
            if z >= 0:
                num *= (j * m + k) ** z
            else:
                den *= (j * m + k) ** (-z)
        return Fraction(num, den)

    terms = [base_term(j) for j in range(mu + 1)]
    # for genuine data the terms are integers (the m*(j+1) factor cancels
    # the lone negative exponent at k = m); stay in plain ints when so
    work: list = (
        [t.numerator for t in terms]
        if all(t.denominator == 1 for t in terms)
        else list(terms)
    )

    # the alternating binomial sum for theta_u is the u-th forward
    # difference of the term sequence at 0, divided by u!
    theta: list[int] = []
    factorial = 1
    for u in range(mu + 1):
        if u:
            factorial *= u
            work = [b - a for a, b in zip(work, work[1:])]
        val = Fraction(work[0], factorial)
        if val.denominator != 1:
            raise NonIntegralTheta(f"theta_{u} = {val} is not an integer")
        theta.append(int(val))
    return ThetaCoeffs(theta=tuple(theta))


def ode_check(g: list[Fraction], theta: ThetaCoeffs, m: int) -> bool:
    """Check that g satisfies the coefficient recurrence of the ODE.

    With G(z) = sum g_l z^l, the relation

        theta_0 G + (theta_1 z - m) G' + sum_{u=2}^{d} theta_u z^u G^(u) = 0

    is read off coefficient-wise: z^u G^(u) shifts nothing and multiplies
    g_l by the falling factorial l(l-1)...(l-u+1), while -m G' contributes
    -m(l+1) g_{l+1}. Hence for every l,

        sum_{u=0}^{d} theta_u * l(l-1)...(l-u+1) * g_l = m (l+1) g_{l+1},

    with the empty product (u = 0) equal to 1. True iff this holds for all
    l representable in the given truncation.
    """
    th = theta.theta
    for lam in range(len(g) - 1):
        total = 0
        falling = 1
        for u, coeff in enumerate(th):
            if u > 0:
                falling *= lam - (u - 1)
            if falling == 0:
                break
            total += coeff * falling
        if total * g[lam] != m * (lam + 1) * g[lam + 1]:
            return False
    return True


RANK2_CLASSES = ("i", "ii", "iii", "iv", "v")


def _rank2_inputs(class_label: str, params: dict[str, int]) -> tuple[int, int | None]:
    if class_label not in RANK2_CLASSES:
        raise UnknownClass(class_label)
    if "m" not in params:
        raise MissingParam("m")
    m = params["m"]
    s = None
    if class_label == "iii":
        if "S" not in params:
            raise MissingParam("S")
        s = params["S"]
    return m, s


def f_series_rank2(class_label: str, params: dict[str, int], N: int) -> list[int]:
    """f_1..f_N for a rank-2 class, by its specialized recurrence.

    f_{l+1} = c_l * m * f_l + sum_{u=1}^{l-1} f_u * f_{l-u}, where c_l is
    (2l+3)/2 for classes i and iv, l+2 for class ii, and l+1 for classes
    iii and v. Initial values: m^2/2 (i, iv), m^2 (ii), (m-|S|)*|S| (iii),
    (m/2)^2 (v). Must agree with the generic convolution on every datum of
    the class.
    """
    m, s = _rank2_inputs(class_label, params)
    if class_label in ("i", "iv", "v") and m % 2 != 0:
        raise MissingParam(f"class {class_label} requires even m, got {m}")

    if class_label in ("i", "iv"):
        f1 = m * m // 2
    elif class_label == "ii":
        f1 = m * m
    elif class_label == "iii":
        f1 = (m - s) * s
    else:
        f1 = (m // 2) ** 2

    f = [f1]
    for lam in range(1, N):
        if class_label in ("i", "iv"):
            c = (2 * lam + 3) * m // 2
        elif class_label == "ii":
            c = (lam + 2) * m
        else:
            c = (lam + 1) * m
        nxt = c * f[lam - 1]
        for u in range(1, lam):
            nxt += f[u - 1] * f[lam - u - 1]
        f.append(nxt)
    return f[:N]


def parity_profile(f: list[int]) -> list[bool]:
    """True where f_l is odd."""
    return [x % 2 == 1 for x in f]


def predicted_parity(class_label: str, params: dict[str, int], N: int) -> list[bool]:
    """Predicted parity of f_1..f_N for a rank-2 class.

    Classes iii (index pairs {2,3} and {2,4}) and v with odd amalgam order
    are odd exactly at l = 1, 3, 7, 15, ... (l + 1 a power of two); every
    other class is constant mod 2, with the constant read off f_1.
    """
    m, s = _rank2_inputs(class_label, params)

    alternating = False
    if class_label == "iii":
        if s < 1 or m % s != 0 or m // s not in (3, 4, 6):
            raise UnknownClass(f"class iii requires m/|S| in {{3, 4, 6}}, got m={m} S={s}")
        alternating = m // s in (4, 6) and s % 2 == 1
    elif class_label == "v":
        if m % 2 != 0:
            raise MissingParam(f"class v requires even m, got {m}")
        alternating = (m // 2) % 2 == 1

    if alternating:
        return [((lam + 1) & lam) == 0 for lam in range(1, N + 1)]
    f1_odd = f_series_rank2(class_label, params, 1)[0] % 2 == 1
    return [f1_odd] * N


def is_triple_c2_shape(ngog: NormalizedGog) -> bool:
    """True for the path of three order-2 vertices with order-1 edges."""
    gog = ngog.gog
    g = gog.graph
    return (
        len(g.vertices) == 3
        and len(g.half_edges) == 4
        and all(n == 2 for n in gog.vertex_order.values())
        and all(s == 1 for s in gog.edge_order.values())
    )


def growth_check(gog: GraphOfGroups, N: int, start: int | None = None) -> bool:
    """Check f_{l+1} - f_l >= m * (l+1)! for l = start..N on a rank-2 datum.

    ``start`` defaults to 1, except for the datum presenting the free
    product of three order-2 groups, where the bound first holds at l = 2
    (it genuinely fails at l = 1, which callers may report).
    """
    if free_rank(gog) != 2:
        raise WrongRank(f"free rank {free_rank(gog)} != 2")
    if start is None:
        ngog, _ = normalize(gog)
        start = 2 if is_triple_c2_shape(ngog) else 1
    m = m_gamma(gog)
    f = f_series(gog, N + 1)
    return all(
        f[lam] - f[lam - 1] >= m * math.factorial(lam + 1)
        for lam in range(start, N + 1)
    )
