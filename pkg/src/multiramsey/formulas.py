"""Closed-form bounds and exact values, in exact integer arithmetic.

Every quantity here is a floor or ceiling of a ratio of integers.  Rational
denominators such as j/(m-1) - 1 are cleared by cross-multiplication before
the floor is taken (floor((n-1) / (j/(m-1) - 1)) = floor((n-1)(m-1) /
(j-m+1))), so no floating point is ever involved; floats can misround at
exact boundaries and the boundaries are precisely where these formulas are
attained.

Each result carries provenance labels (the vocabulary used by the CLI and
the TSV output) identifying which case produced it.  When several exact
cases apply to the same input they are all evaluated and must agree; a
disagreement raises InternalInconsistency and is treated as a bug, never
silently resolved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InternalInconsistency

# Provenance labels (stable output vocabulary).
THM_2_1 = "Thm 2.1"
THM_2_2 = "Thm 2.2"
THM_2_3 = "Thm 2.3"
COR_2_4 = "Cor 2.4"
COR_2_5 = "Cor 2.5"
THM_2_6 = "Thm 2.6"
THM_2_7 = "Thm 2.7"
M2_CASE = "M2-case"

PART_I = "part-i"
PART_II = "part-ii"
PART_III_INTERVAL = "part-iii-interval"
PART_IV = "part-iv"
SEARCH = "search"


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for positive b, exact."""
    return -(-a // b)


@dataclass(frozen=True)
class BoundResult:
    """Lower/upper/exact value of an m_j quantity (a part size t >= 1)."""

    lower: int | None = None
    upper: int | None = None
    exact: int | None = None
    provenance: tuple[str, ...] = ()

    def __post_init__(self):
        for name in ("lower", "upper", "exact"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise InternalInconsistency(f"{name}={value} < 1")
        if self.exact is not None:
            if self.lower is not None and self.lower > self.exact:
                raise InternalInconsistency(f"lower {self.lower} > exact {self.exact}")
            if self.upper is not None and self.exact > self.upper:
                raise InternalInconsistency(f"exact {self.exact} > upper {self.upper}")


@dataclass(frozen=True)
class FRecord:
    """Exact value or interval for the clique-free extremal degree f(t, j, m).

    f(t, j, m) is the largest minimum degree among spanning subgraphs of the
    host K_{j x t} that contain no K_m.  `lo` and `hi` always hold the
    general two-sided bounds; `exact` is set when some case pins the value.
    """

    t: int
    j: int
    m: int
    lo: int
    hi: int
    exact: int | None
    provenance: tuple[str, ...]

    def __post_init__(self):
        host_degree = (self.j - 1) * self.t
        if not 0 <= self.lo <= self.hi <= host_degree:
            raise InternalInconsistency(
                f"f bounds [{self.lo}, {self.hi}] out of 0..{host_degree}"
            )
        if self.exact is not None and not self.lo <= self.exact <= self.hi:
            raise InternalInconsistency(
                f"f exact {self.exact} outside [{self.lo}, {self.hi}]"
            )

    @property
    def is_exact(self) -> bool:
        return self.exact is not None


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def chromatic_lower_bound(j: int, chi: int, n: int) -> int:
    """Lower bound on m_j(H, G) for chi(H) = chi and connected G of order n.

    Value: floor((n-1) / ceil(j/(chi-1))) + 1.  Certified by the grouped
    coloring built in constructions.partition_witness.
    """
    _require(j >= chi >= 2, f"require j >= chi >= 2, got j={j}, chi={chi}")
    _require(n >= 2, f"require n >= 2, got n={n}")
    return (n - 1) // ceil_div(j, chi - 1) + 1


def maxdeg_lower_bound(j: int, m: int, delta: int) -> int:
    """Lower bound on m_j(K_m, G) for max degree delta = Delta(G).

    Value: floor((delta-1) / (ceil(j/(m-1)) - 1)) + 1.  The denominator is
    >= 1 throughout the domain: for m = 2 it is j - 1, and for m >= 3,
    j >= m forces ceil(j/(m-1)) >= 2.
    """
    _require(j >= m >= 2, f"require j >= m >= 2, got j={j}, m={m}")
    _require(delta >= 1, f"require delta >= 1, got delta={delta}")
    return (delta - 1) // (ceil_div(j, m - 1) - 1) + 1


def star_bounds(j: int, m: int, n: int) -> BoundResult:
    """Two-sided bounds on m_j(K_m, K_{1,n}).

    lower = floor((n-1) / (ceil(j/(m-1)) - 1)) + 1
    upper = floor((n-1)(m-1) / (j-m+1)) + 1, the exact-rational evaluation
    of floor((n-1) / (j/(m-1) - 1)) + 1.
    """
    _require(j >= m >= 2, f"require j >= m >= 2, got j={j}, m={m}")
    _require(n >= 2, f"require n >= 2, got n={n}")
    lower = (n - 1) // (ceil_div(j, m - 1) - 1) + 1
    upper = (n - 1) * (m - 1) // (j - m + 1) + 1
    if lower > upper:
        raise InternalInconsistency(
            f"star bounds inverted at (j={j}, m={m}, n={n}): {lower} > {upper}"
        )
    return BoundResult(lower=lower, upper=upper, provenance=(THM_2_3,))


def exact_star(j: int, m: int, n: int) -> BoundResult:
    """Exact value of m_j(K_m, K_{1,n}) when some exact case applies.

    Cases, in dispatch order (all applicable ones are evaluated and must
    agree):

      M2-case   m = 2:                 floor((n-1)/(j-1)) + 1
      Thm 2.7   m = 3:                 floor((n-1)/(ceil(j/2)-1)) + 1
      Thm 2.6   m = j, j even:         floor(2(n-1)(j-1)/j) + 1
                m = j, j odd:          floor(2(n-1)(j-2)/(j-1)) + 1
      Cor 2.5   m >= 3, (m-1) | j:     floor((n-1)(m-1)/(j-m+1)) + 1
      Cor 2.4   m >= 4, j = k(m-1)-1
                for some k >= 2:       floor((n-1)/(ceil(j/(m-1))-1)) + 1

    When no case applies the result carries only the star_bounds interval.
    """
    bounds = star_bounds(j, m, n)
    cases: list[tuple[str, int]] = []
    if m == 2:
        cases.append((M2_CASE, (n - 1) // (j - 1) + 1))
    if m == 3:
        cases.append((THM_2_7, (n - 1) // (ceil_div(j, 2) - 1) + 1))
    if m == j:
        if j % 2 == 0:
            value = 2 * (n - 1) * (j - 1) // j + 1
        else:
            value = 2 * (n - 1) * (j - 2) // (j - 1) + 1
        cases.append((THM_2_6, value))
    if m >= 3 and j % (m - 1) == 0:
        cases.append((COR_2_5, (n - 1) * (m - 1) // (j - m + 1) + 1))
    if m >= 4 and j % (m - 1) == m - 2 and (j + 1) // (m - 1) >= 2:
        cases.append((COR_2_4, (n - 1) // (ceil_div(j, m - 1) - 1) + 1))

    if not cases:
        return bounds

    values = {value for _, value in cases}
    if len(values) != 1:
        raise InternalInconsistency(
            f"exact cases disagree at (j={j}, m={m}, n={n}): {cases}"
        )
    exact = values.pop()
    return BoundResult(
        lower=bounds.lower,
        upper=bounds.upper,
        exact=exact,
        provenance=tuple(tag for tag, _ in cases),
    )


def f_formula(t: int, j: int, m: int) -> FRecord:
    """Exact value or interval for the clique-free extremal degree f(t, j, m).

    Exact cases (all applicable ones must agree):

      part-i    m = 3:                 floor(j/2) * t
      part-ii   m = j, j even:         (j-1)t - ceil(jt / (2(j-1)))
                m = j, j odd:          (j-1)t - ceil((j-1)t / (2(j-2)))
      part-iv   m >= 4, j = k(m-1)-1,
                k >= 2:                (j - ceil(j/(m-1))) * t

    Otherwise the two-sided interval

      (j - ceil(j/(m-1))) * t  <=  f  <=  floor(jt(m-2) / (m-1))

    is reported; when its endpoints coincide the value is exact with
    part-iii-interval provenance.
    """
    _require(j >= m >= 3, f"require j >= m >= 3, got j={j}, m={m}")
    _require(t >= 1, f"require t >= 1, got t={t}")
    lo = (j - ceil_div(j, m - 1)) * t
    hi = j * t * (m - 2) // (m - 1)

    cases: list[tuple[str, int]] = []
    if m == 3:
        cases.append((PART_I, (j // 2) * t))
    if m == j:
        if j % 2 == 0:
            value = (j - 1) * t - ceil_div(j * t, 2 * (j - 1))
        else:
            value = (j - 1) * t - ceil_div((j - 1) * t, 2 * (j - 2))
        cases.append((PART_II, value))
    if m >= 4 and j % (m - 1) == m - 2 and (j + 1) // (m - 1) >= 2:
        cases.append((PART_IV, lo))
    if lo == hi:
        cases.append((PART_III_INTERVAL, lo))

    if not cases:
        return FRecord(t=t, j=j, m=m, lo=lo, hi=hi, exact=None,
                       provenance=(PART_III_INTERVAL,))

    values = {value for _, value in cases}
    if len(values) != 1:
        raise InternalInconsistency(
            f"f cases disagree at (t={t}, j={j}, m={m}): {cases}"
        )
    return FRecord(t=t, j=j, m=m, lo=lo, hi=hi, exact=values.pop(),
                   provenance=tuple(tag for tag, _ in cases))
