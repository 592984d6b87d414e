"""Structural analysis of Hadamard-type subgroups of Z2^k1 x Z4^k2 x Q8^k3.

A group C analyzed here is layered as T(C) <= Z(C) <= A(C) <= C, where T is
the subgroup of elements of order at most two, Z the center, and A a maximal
abelian normal subgroup.  From that chain the group is classified into one of
seven shape labels, rewritten into a standard generating family
(x_1..x_sigma; r_1..r_tau; s_1..s_upsilon), and measured: the rank and kernel
dimension of its binary Gray image follow from swapper membership tests on the
standard generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .algebra import (
    AmbientSpace,
    BinaryWord,
    GroupElement,
    commutator,
    gray,
    inverse,
    mul,
    order,
    render_element,
    square,
    swapper,
)
from .code import BinaryCode, CodeGroup, closure, is_hadamard, rank_kernel_report

__all__ = [
    "StructureError",
    "CheckResult",
    "CodeProfile",
    "StandardGenerators",
    "StructureReport",
    "MeasureResult",
    "NormalizedGenerators",
    "torsion",
    "center",
    "normalized_generators",
    "classify_shape",
    "standardize",
    "measure",
    "verify_table3",
    "verify_duplication",
    "is_normal_subgroup",
    "render_report",
]

SHAPE_LABELS = ("1", "1*", "2", "3", "4", "4*", "5")


class StructureError(ValueError):
    """A group does not admit the structure these routines rely on."""


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict plus the first failed clause (empty when ok)."""

    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


### Subgroup scans ###########################################################


def _subgroup(space: AmbientSpace, generators: Sequence[GroupElement],
              elements: Iterable[GroupElement]) -> CodeGroup:
    ordered = sorted(set(elements), key=render_element)
    size = len(ordered)
    if size & (size - 1):
        raise StructureError(f"subgroup scan produced {size} elements, not a power of two")
    return CodeGroup(space, tuple(generators), ordered)


def _extend_span(span: set[GroupElement], c: GroupElement) -> set[GroupElement]:
    """span * <c> for a subgroup span normalized by c (true whenever the
    commutators of c land in span, which holds for every span containing all
    order-two elements of the enclosing group, and for abelian contexts)."""
    out = set(span)
    p = c
    while p not in span:
        out.update(mul(h, p) for h in span)
        p = mul(p, c)
    return out


def _greedy_basis(elements: Sequence[GroupElement], space: AmbientSpace,
                  start: set[GroupElement] | None = None) -> tuple[list[GroupElement], set[GroupElement]]:
    """First-come generating family for the given element list (scan order =
    canonical element order), starting from an optional already-spanned set."""
    span = set(start) if start is not None else {space.identity()}
    basis: list[GroupElement] = []
    for c in elements:
        if c not in span:
            basis.append(c)
            span = _extend_span(span, c)
    return basis, span


def torsion(group: CodeGroup) -> CodeGroup:
    """Subgroup of all elements of order at most two."""
    elems = [c for c in group.elements if order(c) <= 2]
    basis, span = _greedy_basis(elems, group.space)
    if len(span) != len(elems):
        raise StructureError("order-two elements do not form a subgroup")
    return _subgroup(group.space, basis, elems)


def center(group: CodeGroup) -> CodeGroup:
    """Subgroup of elements commuting with the whole group."""
    ident = group.space.identity()
    cen = [c for c in group.elements
           if all(commutator(c, g) == ident for g in group.generators)]
    basis, span = _greedy_basis(cen, group.space)
    if len(span) != len(cen):
        raise StructureError("centralizer scan did not close into a subgroup")
    return _subgroup(group.space, basis, cen)


@dataclass(frozen=True)
class NormalizedGenerators:
    """Greedy generating chain: x spans the torsion, y extends it to the
    center, z completes the group; lengths give (sigma, delta, rho)."""

    x: tuple[GroupElement, ...]
    y: tuple[GroupElement, ...]
    z: tuple[GroupElement, ...]

    @property
    def sigma(self) -> int:
        return len(self.x)

    @property
    def delta(self) -> int:
        return len(self.y)

    @property
    def rho(self) -> int:
        return len(self.z)


def normalized_generators(group: CodeGroup) -> NormalizedGenerators:
    t_group = torsion(group)
    z_group = center(group)
    xs = list(t_group.generators)
    span = set(t_group.elements)
    ys: list[GroupElement] = []
    for c in z_group.elements:
        if c not in span:
            ys.append(c)
            span = _extend_span(span, c)
    zs: list[GroupElement] = []
    for c in group.elements:
        if c not in span:
            zs.append(c)
            span = _extend_span(span, c)
    if len(span) != len(group) or 2 ** (len(xs) + len(ys) + len(zs)) != len(group):
        raise StructureError("group order is not 2^(sigma+delta+rho)")
    return NormalizedGenerators(tuple(xs), tuple(ys), tuple(zs))


### Shape classification #####################################################


def classify_shape(group: CodeGroup) -> str:
    """Label the group 1, 1*, 2, 3, 4, 4* or 5.

    Decision procedure: abelian groups are 1* when the order-two all-ones
    element u is the square of an order-four element, else 1.  Non-abelian
    groups with a central element of order four (delta = 1) are 4*.  With
    delta = 0: a pair z1, z2 with z1^2 = z2^2 = [z1, z2] = u means shape 2,
    upgraded to 5 when a second pair shares a square equal to its commutator
    outside {e, u}; otherwise shape 3 when u is a square at all, else 4.
    """
    space = group.space
    ident = space.identity()
    u = space.all_ones()
    t_group = torsion(group)
    z_group = center(group)
    if len(z_group) == len(group):
        has_u_square = any(order(c) == 4 and square(c) == u for c in group.elements)
        return "1*" if has_u_square else "1"
    delta = z_group.log2_order - t_group.log2_order
    if delta == 1:
        return "4*"
    if delta != 0:
        raise StructureError(
            f"unclassifiable: center exceeds torsion by 2^{delta}, expected factor 1 or 2")
    order4 = [c for c in group.elements if order(c) == 4]
    u_squares = [c for c in order4 if square(c) == u]
    pair_uu = any(commutator(z1, z2) == u for z1, z2 in combinations(u_squares, 2))
    if pair_uu:
        for z3, z4 in combinations(order4, 2):
            sq = square(z3)
            if sq != u and sq != ident and square(z4) == sq and commutator(z3, z4) == sq:
                return "5"
        return "2"
    if u_squares:
        return "3"
    return "4"


### Profile and report types #################################################


@dataclass(frozen=True)
class CodeProfile:
    """Logarithmic sizes of the quotient chain for a group of order 2^(m+1)."""

    m: int
    sigma: int
    tau: int
    tau_bar: int
    upsilon: int
    delta: int
    rho: int

    def __post_init__(self) -> None:
        if self.m + 1 != self.sigma + self.tau + self.upsilon:
            raise StructureError(
                f"profile violates m+1 = sigma+tau+upsilon: {self}")
        if self.upsilon not in (0, 1, 2):
            raise StructureError(f"upsilon must be 0, 1 or 2, got {self.upsilon}")
        if self.sigma + self.delta + self.rho - 1 != self.m:
            raise StructureError(
                f"profile violates sigma+delta+rho-1 = m: {self}")
        if self.tau_bar not in (self.tau, self.tau - 1):
            raise StructureError(f"tau_bar must be tau or tau-1: {self}")


@dataclass(frozen=True)
class StandardGenerators:
    """Standard generating family: torsion basis x, order-four abelian part r,
    outside witnesses s."""

    x: tuple[GroupElement, ...]
    r: tuple[GroupElement, ...]
    s: tuple[GroupElement, ...]

    def all_generators(self) -> tuple[GroupElement, ...]:
        return self.x + self.r + self.s


@dataclass(frozen=True)
class StructureReport:
    torsion: CodeGroup
    center: CodeGroup
    abelian_max: CodeGroup
    r_part: CodeGroup
    profile: CodeProfile
    shape: str
    std_gens: StandardGenerators


@dataclass(frozen=True)
class MeasureResult:
    k: int
    r: int
    case: str


### Standardization ##########################################################


def _gf2_span(space: AmbientSpace, elems: Iterable[GroupElement]) -> set[GroupElement]:
    span = {space.identity()}
    for e in elems:
        if e not in span:
            span = _extend_span(span, e)
    return span


def _abelian_extensions(group: CodeGroup, base_span: set[GroupElement], picks: int,
                        avoid_u_square: bool) -> Iterator[tuple[tuple[GroupElement, ...], set[GroupElement]]]:
    """Depth-first scan over commuting order-four extensions of base_span.

    Yields (chosen, spanned set) for every way (in canonical scan order) of
    enlarging base_span by `picks` pairwise-commuting order-four elements,
    optionally refusing any choice whose squares would span the all-ones
    element u.
    """
    space = group.space
    ident = space.identity()
    u = space.all_ones()
    elems = group.elements

    def rec(chosen: list[GroupElement], span: set[GroupElement],
            sq_span: set[GroupElement], start: int):
        if len(chosen) == picks:
            yield tuple(chosen), span
            return
        for i in range(start, len(elems)):
            c = elems[i]
            if order(c) != 4 or c in span:
                continue
            if any(commutator(c, d) != ident for d in chosen):
                continue
            new_sq = _extend_span(sq_span, square(c))
            if avoid_u_square and u in new_sq:
                continue
            yield from rec(chosen + [c], _extend_span(span, c), new_sq, i + 1)

    yield from rec([], set(base_span), {ident}, 0)


def _first(candidates: Iterable[GroupElement], cond) -> GroupElement | None:
    for c in candidates:
        if cond(c):
            return c
    return None


def _greedy_square_independent(pool: Sequence[GroupElement], space: AmbientSpace,
                               count: int, seeded: Iterable[GroupElement]) -> list[GroupElement]:
    """Pick `count` order-four elements whose squares are independent of the
    seeded torsion span (and of each other)."""
    sq_span = _gf2_span(space, seeded)
    picked: list[GroupElement] = []
    for c in pool:
        if len(picked) == count:
            break
        if order(c) == 4 and square(c) not in sq_span:
            picked.append(c)
            sq_span = _extend_span(sq_span, square(c))
    if len(picked) != count:
        raise StructureError(
            f"could not select {count} order-four generators with independent squares")
    return picked


def standardize(group: CodeGroup) -> StructureReport:
    """Rewrite the group on a standard generating family and profile it."""
    space = group.space
    ident = space.identity()
    u = space.all_ones()
    if u not in group:
        raise StructureError("the order-two all-ones element is missing from the group")
    t_group = torsion(group)
    z_group = center(group)
    sigma = t_group.log2_order
    m = group.log2_order - 1
    delta = z_group.log2_order - sigma
    rho = m + 1 - sigma - delta
    shape = classify_shape(group)
    t_set = set(t_group.elements)
    z_set = set(z_group.elements)

    if shape in ("1", "1*"):
        upsilon = 0
        tau = m + 1 - sigma
        order4 = [c for c in group.elements if order(c) == 4]
        rs: list[GroupElement] = []
        if shape == "1*":
            r1 = _first(order4, lambda c: square(c) == u)
            if r1 is None:
                raise StructureError("no order-four element squares to u")
            rs.append(r1)
        rs.extend(_greedy_square_independent(
            order4, space, tau - len(rs), [square(c) for c in rs]))
        a_set = set(group.elements)
        ss: tuple[GroupElement, ...] = ()
    else:
        upsilon = 2 if shape == "5" else 1
        tau = m + 1 - sigma - upsilon
        picks = tau - delta
        if picks < 0:
            raise StructureError(f"impossible layer sizes: tau={tau}, delta={delta}")
        found = None
        for chosen, a_set in _abelian_extensions(
                group, z_set, picks, avoid_u_square=shape in ("3", "4")):
            a_sorted = sorted(a_set, key=render_element)
            outside = [c for c in group.elements if c not in a_set]
            if shape == "2":
                found = _witness_shape2(group, a_sorted, outside, u, tau)
            elif shape == "3":
                found = _witness_shape3(group, a_sorted, outside, u, tau)
            elif shape == "4":
                found = _witness_shape4(a_sorted, outside, ident, u, tau)
            elif shape == "4*":
                found = _witness_shape4star(z_group, chosen, outside, ident, u, tau)
            else:
                found = _witness_shape5(chosen, a_set, outside, ident, u, tau)
            if found is not None:
                break
        if found is None:
            raise StructureError(
                f"no standard generating family found for shape {shape}")
        rs, ss = found

    tau_bar = tau - 1 if rs and square(rs[0]) == u else tau
    profile = CodeProfile(m=m, sigma=sigma, tau=tau, tau_bar=tau_bar,
                          upsilon=upsilon, delta=delta, rho=rho)
    a_group = _subgroup(space, tuple(t_group.generators) + tuple(rs), a_set)
    if tau_bar < tau:
        r_span = _gf2_span(space, list(t_group.elements) + list(rs[1:]))
        r_group = _subgroup(space, tuple(t_group.generators) + tuple(rs[1:]), r_span)
    else:
        r_group = a_group
    std = StandardGenerators(x=tuple(t_group.generators), r=tuple(rs), s=tuple(ss))
    report = StructureReport(torsion=t_group, center=z_group, abelian_max=a_group,
                             r_part=r_group, profile=profile, shape=shape, std_gens=std)
    _validate_report(group, report)
    return report


def _witness_shape2(group, a_sorted, outside, u, tau):
    for r1 in a_sorted:
        if order(r1) != 4 or square(r1) != u:
            continue
        s1 = _first(outside, lambda c: square(c) == u and commutator(r1, c) == u)
        if s1 is None:
            continue
        rest = _greedy_square_independent(a_sorted, r1.space, tau - 1, [u])
        return [r1] + rest, (s1,)
    return None


def _witness_shape3(group, a_sorted, outside, u, tau):
    s1 = _first(outside, lambda c: square(c) == u)
    if s1 is None:
        return None
    rs = _greedy_square_independent(a_sorted, s1.space, tau, [])
    return rs, (s1,)


def _witness_shape4(a_sorted, outside, ident, u, tau):
    if tau != 1:
        raise StructureError(f"shape 4 needs tau = 1, got {tau}")
    for r1 in a_sorted:
        sq = square(r1)
        if order(r1) != 4 or sq == u:
            continue
        s1 = _first(outside, lambda c: square(c) == sq and commutator(r1, c) == sq)
        if s1 is not None:
            return [r1], (s1,)
    return None


def _witness_shape4star(z_group, chosen, outside, ident, u, tau):
    if tau != 2 or len(chosen) != 1:
        raise StructureError(f"shape 4* needs tau = 2, got tau={tau}")
    y1 = _first(z_group.elements, lambda c: order(c) == 4)
    if y1 is None:
        raise StructureError("no central order-four element in a shape-4* group")
    c1 = chosen[0]
    t = square(c1)
    if t in (ident, u) or mul(square(y1), t) != u:
        return None
    s1 = _first(outside, lambda c: square(c) == t and commutator(c1, c) == t)
    if s1 is None:
        return None
    r1 = mul(y1, c1)
    if square(r1) != u:
        raise StructureError("central times picked generator fails to square to u")
    return [r1, c1], (s1,)


def _witness_shape5(chosen, a_set, outside, ident, u, tau):
    if tau != 2 or len(chosen) != 2:
        raise StructureError(f"shape 5 needs tau = 2, got tau={tau}")
    v, w = chosen
    cands = [v, w, mul(v, w)]
    r1 = _first(cands, lambda c: square(c) == u)
    r2 = _first(cands, lambda c: square(c) not in (ident, u))
    if r1 is None or r2 is None:
        return None
    r2sq = square(r2)
    s1 = _first(outside, lambda c: square(c) == u and commutator(r1, c) == u
                and commutator(r2, c) == r2sq)
    if s1 is None:
        return None
    extended = _extend_span(a_set, s1)
    s2 = _first(outside, lambda c: c not in extended and square(c) == r2sq
                and commutator(s1, c) == ident and commutator(r1, c) == r2sq
                and commutator(r2, c) == r2sq)
    if s2 is None:
        return None
    return [r1, r2], (s1, s2)


def is_normal_subgroup(group: CodeGroup, sub: CodeGroup) -> bool:
    """Conjugation test over generators of both groups."""
    members = set(sub.elements)
    for g in group.generators:
        gi = inverse(g)
        for h in sub.generators:
            if mul(mul(g, h), gi) not in members:
                return False
    return True


def _validate_report(group: CodeGroup, report: StructureReport) -> None:
    space = group.space
    ident = space.identity()
    u = space.all_ones()
    std = report.std_gens
    prof = report.profile

    regenerated = closure(std.all_generators(), space)
    if not regenerated.same_elements(group):
        raise StructureError("standard generators span a different group")
    t_span = _gf2_span(space, std.x)
    if t_span != set(report.torsion.elements):
        raise StructureError("x generators do not span the torsion subgroup")
    for r1, r2 in combinations(std.r, 2):
        if commutator(r1, r2) != ident:
            raise StructureError("r generators do not commute")
    r_squares = _gf2_span(space, [square(c) for c in std.r])
    if u in r_squares:
        if not std.r or square(std.r[0]) != u:
            raise StructureError("u is spanned by r squares but r1^2 != u")
        if u in _gf2_span(space, [square(c) for c in std.r[1:]]):
            raise StructureError("u is spanned by the squares of r2..r_tau")
    if prof.upsilon == 2:
        s1, s2 = std.s
        if square(s1) != u or square(s2) == u:
            raise StructureError("upsilon=2 requires s1^2 = u != s2^2")
        if commutator(s1, s2) != ident:
            raise StructureError("upsilon=2 requires commuting s1, s2")
    if std.r and std.s and square(std.r[0]) == u and square(std.s[0]) == u:
        if commutator(std.r[0], std.s[0]) != u:
            raise StructureError("r1^2 = s1^2 = u requires [r1, s1] = u")
    a_grp = report.abelian_max
    if len(a_grp) * 2 ** prof.upsilon != len(group):
        raise StructureError("abelian part has the wrong index")
    if not set(report.torsion.elements) <= set(a_grp.elements):
        raise StructureError("abelian part does not contain the torsion subgroup")
    if not is_normal_subgroup(group, a_grp):
        raise StructureError("abelian part is not normal")


### Measurement ##############################################################


def _match_case(group: CodeGroup, report: StructureReport) -> tuple[str, int, tuple[int, int]]:
    """Return (case tag, expected kernel dimension, inclusive rank range)."""
    prof = report.profile
    sigma, tau, tau_bar, upsilon = prof.sigma, prof.tau, prof.tau_bar, prof.upsilon
    rs, ss = report.std_gens.r, report.std_gens.s

    def exact(k: int, r: int, tag: str):
        return tag, k, (r, r)

    if upsilon == 0:
        if tau_bar <= 1:
            return exact(sigma + tau, sigma + tau, "1a")
        if tau_bar == tau - 1:
            return exact(sigma + 1, sigma + tau + comb(tau - 1, 2), "1b")
        return exact(sigma, sigma + tau + comb(tau, 2), "1c")
    if upsilon == 1 and tau == 1:
        if swapper(ss[0], rs[0]) in group:
            return exact(sigma + 2, sigma + 2, "2a")
        return exact(sigma, sigma + 3, "2b")
    if upsilon == 1 and tau == 2 and tau_bar == 1:
        s1, (r1, r2) = ss[0], rs
        inside = sum(swapper(s1, c) in group for c in (r1, r2, mul(r1, r2)))
        if inside == 3:
            return exact(sigma + 3, sigma + 3, "3a")
        if inside == 1:
            return exact(sigma + 1, sigma + 4, "3b")
        if inside == 0:
            return exact(sigma, sigma + 5, "3c")
        raise StructureError(f"impossible swapper membership count {inside} at tau=2")
    if upsilon == 1 and tau >= 2 and tau_bar >= 2:
        s1 = ss[0]
        a_gens = report.abelian_max.generators
        if any(all(swapper(mul(b, s1), a) in group for a in a_gens)
               for b in report.r_part.elements):
            return exact(sigma + 1 + tau - tau_bar, sigma + tau + 1 + comb(tau_bar, 2), "4a")
        if tau_bar == tau - 1 and swapper(s1, rs[0]) in group:
            return exact(sigma + 1, sigma + tau + 1 + comb(tau, 2), "4b")
        base = sigma + tau + 1
        if tau_bar == tau - 1:
            lo, hi = base + comb(tau - 1, 2), base + comb(tau, 2) + 1
        else:
            lo, hi = base + comb(tau, 2) + 1, base + comb(tau + 1, 2)
        return "4c", sigma, (lo, hi)
    if upsilon == 2:
        (r1, r2), (s1, s2) = rs, ss
        inside = sum(t in group for t in
                     (swapper(r2, s2), swapper(mul(r1, r2), mul(s1, s2))))
        if inside == 2:
            return exact(sigma + 4, sigma + 4, "5a")
        if inside == 1:
            return exact(sigma + 2, sigma + 5, "5b")
        return exact(sigma, sigma + 6, "5c")
    raise StructureError(f"no measurement case matches profile {prof}")


def measure(group: CodeGroup, report: StructureReport | None = None) -> MeasureResult:
    """Kernel dimension and rank of the Gray image, with the matched case tag.

    The pair is computed by the independent oracles of the code module; the
    matched case's predicted value (or range, for tag 4c) is then asserted, so
    a witness-selection bug here surfaces as a loud mismatch error.  A report
    from an earlier standardize call may be passed to avoid recomputing it.
    """
    if report is None:
        report = standardize(group)
    rk = rank_kernel_report(group)
    tag, exp_k, (r_lo, r_hi) = _match_case(group, report)
    if rk.k != exp_k or not r_lo <= rk.r <= r_hi:
        raise StructureError(
            f"case mismatch: tag {tag} predicts k={exp_k}, r in [{r_lo},{r_hi}], "
            f"measured k={rk.k}, r={rk.r}")
    return MeasureResult(k=rk.k, r=rk.r, case=tag)


### Parameter table and duplication checks ###################################


def verify_table3(report: StructureReport, space: AmbientSpace) -> CheckResult:
    """Check ambient component counts and the existence window for the shape."""
    prof = report.profile
    m, sigma, tau = prof.m, prof.sigma, prof.tau
    shape = report.shape
    if space.n != 2 ** m:
        return CheckResult(False, f"binary length {space.n} != 2^{m}")

    def pow2(e: int) -> int:
        return 2 ** e if e >= 0 else 0

    if shape == "1":
        expect = (pow2(sigma - 1), (2 ** tau - 1) * pow2(sigma - 2), 0)
        exists = sigma == m - tau + 1 and 0 <= tau <= m // 2
    elif shape == "1*":
        expect = (0, pow2(sigma + tau - 2), 0)
        exists = sigma == m - tau + 1 and 1 <= tau <= (m + 1) // 2
    elif shape == "2":
        expect = (0, 0, pow2(sigma + tau - 2))
        exists = sigma == m - tau and 1 <= tau <= m // 2
    elif shape == "3":
        expect = (0, pow2(sigma - 1), (2 ** tau - 1) * pow2(sigma - 2))
        exists = sigma == m - tau and 1 <= tau <= (m - 1) // 2
    elif shape == "4":
        expect = (pow2(sigma), 0, pow2(sigma - 2))
        exists = sigma == m - 1 and tau == 1 and m % 2 == 0
    elif shape == "4*":
        expect = (0, pow2(sigma), pow2(sigma - 1))
        exists = sigma == m - 2 and tau == 2 and m % 2 == 0
    else:
        expect = (0, 0, pow2(sigma + 1))
        exists = sigma == m - 3 and tau == 2 and sigma >= 2
    actual = (space.k1, space.k2, space.k3)
    if actual != expect:
        return CheckResult(False,
                           f"shape {shape} expects (k1,k2,k3)={expect}, ambient has {actual}")
    if not exists:
        return CheckResult(False,
                           f"shape {shape} existence condition fails at m={m}, sigma={sigma}, tau={tau}")
    return CheckResult(True)


def _binary_columns(code_words: Sequence) -> list[int]:
    """Column patterns of a list of binary words, packed as integers."""
    cols = []
    for j in range(code_words[0].n):
        pattern = 0
        for i, w in enumerate(code_words):
            pattern |= w.bit(j) << i
        cols.append(pattern)
    return cols


def verify_duplication(report: StructureReport) -> CheckResult:
    """Check that the abelian part is a doubled (upsilon=1) or quadrupled
    (upsilon=2) image of a shorter Hadamard code of the abelian alphabets."""
    prof = report.profile
    if prof.upsilon == 0:
        return CheckResult(True, "no duplication expected at upsilon=0")
    a_grp = report.abelian_max
    space = a_grp.space
    if prof.upsilon == 1:
        words = [gray(c) for c in a_grp.elements]
        cols = _binary_columns(words)
        unpaired: dict[int, int] = {}
        keep: list[int] = []
        for j, pattern in enumerate(cols):
            if pattern in unpaired:
                del unpaired[pattern]
            else:
                unpaired[pattern] = j
                keep.append(j)
        if unpaired:
            leftover = sorted(unpaired.values())
            return CheckResult(False, f"columns {leftover} have no duplicate partner")
        halved = [sum(w.bit(j) << (len(keep) - 1 - i) for i, j in enumerate(keep))
                  for w in words]
        half_code = BinaryCode(len(keep), [BinaryWord(len(keep), bits) for bits in halved])
        verdict = is_hadamard(half_code)
        if not verdict:
            return CheckResult(False, f"halved image not Hadamard: {verdict.diagnosis}")
        return CheckResult(True)
    # upsilon == 2: quaternion columns pair up and collapse to a Z4 code.
    if space.k1 or space.k2:
        return CheckResult(False, "quadruplication expects a pure Q8 ambient")
    col_values = [tuple(c.q8[j] for c in a_grp.elements) for j in range(space.k3)]
    unpaired_q: dict[tuple, int] = {}
    keep_q: list[int] = []
    for j, pattern in enumerate(col_values):
        if pattern in unpaired_q:
            del unpaired_q[pattern]
        else:
            unpaired_q[pattern] = j
            keep_q.append(j)
    if unpaired_q:
        return CheckResult(False,
                           f"Q8 columns {sorted(unpaired_q.values())} have no duplicate partner")
    if any(any(c.q8[j] > 3 for j in keep_q) for c in a_grp.elements):
        return CheckResult(False, "abelian part has entries outside the a-cycle")
    z4_space = AmbientSpace(0, len(keep_q), 0)
    z4_words = [gray(z4_space.element(z4=tuple(c.q8[j] for j in keep_q)))
                for c in a_grp.elements]
    quarter = BinaryCode(2 * len(keep_q), z4_words)
    verdict = is_hadamard(quarter)
    if not verdict:
        return CheckResult(False, f"quartered image not Hadamard: {verdict.diagnosis}")
    return CheckResult(True)


### Rendering ################################################################


def render_report(report: StructureReport, measured: MeasureResult | None = None) -> str:
    """Stable key=value lines for golden-file comparison."""
    prof = report.profile
    lines = [
        f"shape={report.shape}",
        f"m={prof.m}",
        f"sigma={prof.sigma}",
        f"tau={prof.tau}",
        f"tau_bar={prof.tau_bar}",
        f"upsilon={prof.upsilon}",
        f"delta={prof.delta}",
        f"rho={prof.rho}",
    ]
    if measured is not None:
        lines += [f"k={measured.k}", f"r={measured.r}", f"case={measured.case}"]
    return "\n".join(lines) + "\n"
