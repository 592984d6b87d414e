"""Constructions of Hadamard codes over the Z2/Z4/Q8 alphabets.

The pipeline is: build a short abelian Hadamard base code (binary, quaternary,
or mixed), lift it componentwise into a larger alphabet to form the abelian
part A, then append one or two outside generators whose component pattern (the
"dial") steers the rank and kernel dimension of the result.  A planner turns a
target (m, k, r) into such a recipe and verifies the outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod

from .algebra import AmbientSpace, GroupElement, order, render_element, square
from .code import BinaryCode, CodeGroup, ParseError, closure, is_hadamard
from .structure import StructureReport, measure, standardize

__all__ = [
    "ConstructionError",
    "NotAllowableError",
    "BaseHadamardSpec",
    "ConstructionPlan",
    "base_hadamard",
    "chi1",
    "chi2",
    "chi3",
    "lift_to_A",
    "build_s_generators",
    "allowable_pairs",
    "shape_parameter_range",
    "all_allowable_pairs",
    "construct_for",
    "build_from_plan",
    "plan_text",
    "parse_plan",
]

CONSTRUCTIBLE_SHAPES = ("1", "1*", "2", "3", "5")


class ConstructionError(ValueError):
    """A construction request cannot be satisfied."""


class NotAllowableError(ConstructionError):
    """The requested (k, r) pair is not achievable at this length."""

    def __init__(self, message: str, nearest: tuple[tuple[int, int], ...] = ()):
        super().__init__(message)
        self.nearest = nearest


### Base Hadamard codes ######################################################


@dataclass(frozen=True)
class BaseHadamardSpec:
    """Shape of an abelian base code of type 2^gamma 4^delta.

    contains_u_square selects the purely quaternary family (some generator
    squares to the all-twos element); otherwise the code mixes a binary block
    with the quaternary one (or is purely binary when delta = 0).
    """

    gamma: int
    delta: int
    contains_u_square: bool

    def __post_init__(self) -> None:
        if self.gamma < 0 or self.delta < 0 or self.gamma + self.delta < 1:
            raise ConstructionError(f"invalid base type 2^{self.gamma} 4^{self.delta}")
        if self.contains_u_square and self.delta < 1:
            raise ConstructionError("a u-square needs an order-four generator")
        if not self.contains_u_square and self.gamma < 1:
            raise ConstructionError(
                "a base without u-squares needs at least one binary direction")

    @property
    def m(self) -> int:
        return self.gamma + 2 * self.delta - 1


def _mixed_radix(index: int, radices: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for base in radices:
        out.append(index % base)
        index //= base
    return tuple(out)


def base_hadamard(spec: BaseHadamardSpec) -> CodeGroup:
    """Abelian Hadamard code of type 2^gamma 4^delta, columns enumerating all
    value tuples in mixed-radix order (least significant coordinate first).

    The Gray image is checked against the Hadamard oracle before returning.
    """
    gamma, delta = spec.gamma, spec.delta
    if spec.contains_u_square:
        k2 = 4 ** (delta - 1) * 2 ** gamma
        radices = (4,) * (delta - 1) + (2,) * gamma
        cols = [_mixed_radix(i, radices) for i in range(k2)]
        space = AmbientSpace(0, k2, 0)
        gens = [space.element(z4=(1,) * k2)]
        for i in range(delta - 1):
            gens.append(space.element(z4=tuple(col[i] for col in cols)))
        for j in range(gamma):
            gens.append(space.element(z4=tuple(2 * col[delta - 1 + j] for col in cols)))
    elif delta == 0:
        k1 = 2 ** (gamma - 1)
        space = AmbientSpace(k1, 0, 0)
        tcols = [_mixed_radix(i, (2,) * (gamma - 1)) for i in range(k1)]
        gens = [space.element(z2=(1,) * k1)]
        for j in range(gamma - 1):
            gens.append(space.element(z2=tuple(col[j] for col in tcols)))
    else:
        k1 = 2 ** (gamma - 1 + delta)
        tcols = [_mixed_radix(i, (2,) * (gamma - 1 + delta)) for i in range(k1)]
        radices = (4,) * delta + (2,) * (gamma - 1)
        qcols = []
        for i in range(4 ** delta * 2 ** (gamma - 1)):
            col = _mixed_radix(i, radices)
            v, w = col[:delta], col[delta:]
            if not any(x % 2 for x in v):
                continue
            neg = tuple((-x) % 4 for x in v) + w
            neg_index = sum(c * prod(radices[:j]) for j, c in enumerate(neg))
            if neg_index < i:
                continue
            qcols.append(col)
        k2 = len(qcols)
        space = AmbientSpace(k1, k2, 0)
        gens = []
        for i in range(delta):
            gens.append(space.element(
                z2=tuple(col[gamma - 1 + i] for col in tcols),
                z4=tuple(col[i] for col in qcols)))
        gens.append(space.element(z2=(1,) * k1, z4=(2,) * k2))
        for j in range(gamma - 1):
            gens.append(space.element(
                z2=tuple(col[j] for col in tcols),
                z4=tuple(2 * col[delta + j] for col in qcols)))
    group = closure(gens, space)
    if len(group) != 2 ** (gamma + 2 * delta):
        raise ConstructionError(
            f"base of type 2^{gamma} 4^{delta} closed into {len(group)} elements")
    verdict = is_hadamard(BinaryCode.from_group(group))
    if not verdict:
        raise ConstructionError(f"base code is not Hadamard: {verdict.diagnosis}")
    return group


### Lifting homomorphisms ####################################################


def chi1(x: int) -> int:
    """Binary value into the order-two part of Z4."""
    return (2 * x) % 4


def chi2(x: int) -> int:
    """Quaternary value into the a-cycle of Q8 (as a Q8 index)."""
    return x % 4


def chi3(x: int) -> tuple[int, int]:
    """Duplicate a coordinate."""
    return (x, x)


def _lift_element(c: GroupElement, shape: str, target: AmbientSpace,
                  half: tuple[int, ...] = ()) -> GroupElement:
    if shape == "2":
        return target.element(q8=tuple(chi2(x) for x in c.z4))
    if shape == "3":
        return target.element(z4=tuple(chi1(x) for x in c.z2),
                              q8=tuple(chi2(x) for x in c.z4))
    if shape == "4":
        z2 = tuple(v for x in c.z2 for v in chi3(x))
        return target.element(z2=z2, q8=tuple(chi2(x) for x in c.z4))
    if shape == "4*":
        z4 = tuple(v for j in half for v in chi3(c.z4[j]))
        q8 = tuple(chi2(c.z4[j]) for j in range(len(c.z4)) if j not in half)
        return target.element(z4=z4, q8=q8)
    if shape == "5":
        return target.element(q8=tuple(v for x in c.z4 for v in chi3(chi2(x))))
    raise ConstructionError(f"no lift defined for shape {shape}")


def lift_to_A(base: CodeGroup, shape: str) -> CodeGroup:
    """Componentwise image of an abelian base code, per shape."""
    space = base.space
    u = space.all_ones()
    has_u_square = any(order(c) == 4 and square(c) == u for c in base.elements)
    if shape in ("2", "4*", "5"):
        if space.k1 or not has_u_square:
            raise ConstructionError(f"shape {shape} lifts a quaternary base with a u-square")
    elif shape in ("3", "4"):
        if not space.k1 or has_u_square:
            raise ConstructionError(f"shape {shape} lifts a mixed base without u-squares")
    else:
        raise ConstructionError(f"shape {shape} has no lift")

    half: tuple[int, ...] = ()
    if shape == "2":
        target = AmbientSpace(0, 0, space.k2)
    elif shape == "3":
        target = AmbientSpace(0, space.k1, space.k2)
    elif shape == "4":
        target = AmbientSpace(2 * space.k1, 0, space.k2)
    elif shape == "4*":
        v2 = base.generators[1]
        half = tuple(j for j in range(space.k2) if v2.z4[j] % 2)
        if len(half) * 2 != space.k2:
            raise ConstructionError("second order-four row is not odd on half the columns")
        target = AmbientSpace(0, 2 * len(half), space.k2 - len(half))
    else:
        target = AmbientSpace(0, 0, 2 * space.k2)
    mapped = [_lift_element(c, shape, target, half) for c in base.elements]
    if len(set(mapped)) != len(base):
        raise ConstructionError("lift failed to stay injective")
    gens = tuple(_lift_element(g, shape, target, half) for g in base.generators)
    return CodeGroup(target, gens, sorted(mapped, key=render_element))


### Allowable (k, r) pairs ###################################################


def _existence_ok(m: int, shape: str, sigma: int, tau: int) -> bool:
    if shape == "1":
        return sigma == m - tau + 1 and 0 <= tau <= m // 2
    if shape == "1*":
        return sigma == m - tau + 1 and 1 <= tau <= (m + 1) // 2
    if shape == "2":
        return sigma == m - tau and 1 <= tau <= m // 2
    if shape == "3":
        return sigma == m - tau and 1 <= tau <= (m - 1) // 2
    if shape == "4":
        return sigma == m - 1 and tau == 1 and m % 2 == 0
    if shape == "4*":
        return sigma == m - 2 and tau == 2 and m % 2 == 0
    if shape == "5":
        return sigma == m - 3 and tau == 2 and sigma >= 2
    raise ConstructionError(f"unknown shape {shape}")


def allowable_pairs(m: int, shape: str, sigma: int, tau: int) -> set[tuple[int, int]]:
    """All (kernel dimension, rank) pairs achievable at these parameters."""
    if not _existence_ok(m, shape, sigma, tau):
        raise ConstructionError(
            f"no shape-{shape} code exists with m={m}, sigma={sigma}, tau={tau}")
    linear = (m + 1, m + 1)
    if shape == "1":
        if tau <= 1:
            return {linear}
        return {(sigma, sigma + tau + comb(tau, 2))}
    if shape == "1*":
        if tau <= 2:
            return {linear}
        return {(sigma + 1, sigma + tau + comb(tau - 1, 2))}
    if shape in ("2", "4", "4*"):
        if tau == 1:
            pairs = {linear}
            if m > 3:
                pairs.add((sigma, sigma + 3))
            return pairs
        if tau == 2:
            return {(sigma + 3, sigma + 3), (sigma + 1, sigma + 4), (sigma, sigma + 5)}
        base = sigma + tau + 1
        pairs = {(sigma + 2, base + comb(tau - 1, 2))}
        if sigma > tau:
            pairs.add((sigma + 1, base + comb(tau, 2)))
        pairs.update((sigma, r) for r in
                     range(base + comb(tau - 1, 2), base + comb(tau, 2) + 2))
        return pairs
    if shape == "3":
        if tau == 1:
            pairs = {linear}
            if m > 3:
                pairs.add((sigma, sigma + 3))
            return pairs
        base = sigma + tau + 1
        pairs = {(sigma + 1, base + comb(tau, 2))}
        pairs.update((sigma, r) for r in
                     range(base + comb(tau, 2) + 1, base + comb(tau + 1, 2) + 1))
        return pairs
    # shape 5
    return {(sigma + 4, sigma + 4), (sigma + 2, sigma + 5), (sigma, sigma + 6)}


def shape_parameter_range(m: int, shape: str):
    """(sigma, tau) combinations passing the existence window at length 2^m."""
    if shape == "1":
        taus = range(0, m // 2 + 1)
        return [(m - tau + 1, tau) for tau in taus]
    if shape == "1*":
        taus = range(1, (m + 1) // 2 + 1)
        return [(m - tau + 1, tau) for tau in taus]
    if shape == "2":
        return [(m - tau, tau) for tau in range(1, m // 2 + 1)]
    if shape == "3":
        return [(m - tau, tau) for tau in range(1, (m - 1) // 2 + 1)]
    if shape == "4":
        return [(m - 1, 1)] if m % 2 == 0 else []
    if shape == "4*":
        return [(m - 2, 2)] if m % 2 == 0 else []
    if shape == "5":
        return [(m - 3, 2)] if m >= 5 else []
    raise ConstructionError(f"unknown shape {shape}")


def all_allowable_pairs(m: int) -> dict[tuple[int, int], tuple[str, int, int]]:
    """Every allowable pair at length 2^m, mapped to the first
    (shape, sigma, tau) offering it in preference order."""
    table: dict[tuple[int, int], tuple[str, int, int]] = {}
    for shape in CONSTRUCTIBLE_SHAPES:
        for sigma, tau in shape_parameter_range(m, shape):
            for pair in sorted(allowable_pairs(m, shape, sigma, tau)):
                table.setdefault(pair, (shape, sigma, tau))
    return table


### Plans ####################################################################


@dataclass(frozen=True)
class ConstructionPlan:
    """Deterministic recipe for one code: parameters plus the dial (the Q8
    component indices of the outside generators that receive ab-type values)."""

    m: int
    shape: str
    sigma: int
    tau: int
    target_k: int
    target_r: int
    dial: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        pairs = allowable_pairs(self.m, self.shape, self.sigma, self.tau)
        if (self.target_k, self.target_r) not in pairs:
            raise ConstructionError(
                f"({self.target_k},{self.target_r}) is not allowable for "
                f"shape {self.shape} at m={self.m}, sigma={self.sigma}, tau={self.tau}")


def plan_text(plan: ConstructionPlan) -> str:
    return (f"m={plan.m}\nshape={plan.shape}\nsigma={plan.sigma}\ntau={plan.tau}\n"
            f"k={plan.target_k}\nr={plan.target_r}\n"
            f"dial={','.join(str(i) for i in plan.dial)}\n")


def parse_plan(text: str) -> ConstructionPlan:
    fields: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"plan line {lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        fields[key.strip()] = value.strip()
    try:
        dial = tuple(int(t) for t in fields.get("dial", "").split(",") if t)
        return ConstructionPlan(
            m=int(fields["m"]), shape=fields["shape"], sigma=int(fields["sigma"]),
            tau=int(fields["tau"]), target_k=int(fields["k"]),
            target_r=int(fields["r"]), dial=dial)
    except KeyError as missing:
        raise ParseError(f"plan file lacks key {missing}") from None
    except ValueError as bad:
        raise ParseError(f"malformed plan value: {bad}") from None


### Outside generators #######################################################

_B, _AB, _ONE, _A2 = 4, 5, 0, 2  # Q8 value indices used by the recipes


def _r_generators(a_group: CodeGroup, tau: int) -> tuple[GroupElement, ...]:
    rs = a_group.generators[:tau]
    if any(order(c) != 4 for c in rs):
        raise ConstructionError("lifted generators are not ordered order-four first")
    return rs


def _order4_components(c: GroupElement) -> frozenset[int]:
    return frozenset(j for j, x in enumerate(c.q8) if x in (1, 3))


def build_s_generators(a_group: CodeGroup, plan: ConstructionPlan) -> list[GroupElement]:
    """Outside generators filling the plan's dial.

    The dial lists the Q8 components that take ab-type values; every other Q8
    component of an outside generator takes the b value, except the alternating
    (1, a2) blocks of the two shape-5 generators.
    """
    space = a_group.space
    shape = plan.shape
    if shape in ("1", "1*"):
        return []
    k3 = space.k3
    bad = [j for j in plan.dial if not 0 <= j < k3]
    if bad:
        raise ConstructionError(f"dial components {bad} outside the Q8 block")
    dial = frozenset(plan.dial)
    if shape in ("2", "3"):
        q8 = tuple(_AB if j in dial else _B for j in range(k3))
        return [space.element(z4=(1,) * space.k2, q8=q8)]
    if shape != "5":
        raise ConstructionError(f"no outside-generator recipe for shape {shape}")
    r2 = _r_generators(a_group, plan.tau)[1]
    mset = _order4_components(r2)
    comp = frozenset(range(k3)) - mset
    for block in (mset, comp):
        if any(j ^ 1 not in block for j in block):
            raise ConstructionError("shape-5 blocks are not aligned to duplicated pairs")
    if len(dial & mset) > 1 or len(dial & comp) > 1:
        raise ConstructionError("shape-5 dial flips at most one component per block")

    def blocked(free: frozenset[int]) -> GroupElement:
        values = []
        for j in range(k3):
            if j in free:
                values.append(_AB if j in dial else _B)
            else:
                values.append(_ONE if j % 2 == 0 else _A2)
        return space.element(q8=tuple(values))

    return [blocked(comp), blocked(mset)]


### Planner ##################################################################


def _base_spec_for(shape: str, sigma: int, tau: int) -> BaseHadamardSpec:
    if shape == "1":
        return BaseHadamardSpec(sigma - tau, tau, False)
    if shape == "1*":
        return BaseHadamardSpec(sigma - tau, tau, True)
    if shape == "2":
        return BaseHadamardSpec(sigma - tau, tau, True)
    if shape == "3":
        return BaseHadamardSpec(sigma - tau, tau, False)
    if shape == "5":
        return BaseHadamardSpec(sigma - 2, 2, True)
    raise ConstructionError(f"shape {shape} is classified, not constructed")


def _component_classes(rs: tuple[GroupElement, ...], k3: int,
                       skip_first: bool) -> dict[frozenset[int], list[int]]:
    """Group Q8 components by which outside-the-first (or all) r generators
    have an order-four entry there.  Keys use 1-based generator numbers."""
    start = 2 if skip_first else 1
    supports = {i: _order4_components(c)
                for i, c in enumerate(rs, 1) if i >= start}
    classes: dict[frozenset[int], list[int]] = {}
    for j in range(k3):
        sig = frozenset(i for i, sup in supports.items() if j in sup)
        classes.setdefault(sig, []).append(j)
    return classes


def _plan_dial(shape: str, sigma: int, tau: int, target_k: int, target_r: int,
               a_group: CodeGroup) -> tuple[int, ...]:
    """Derive the ab-component set realizing (target_k, target_r)."""
    space = a_group.space
    k3 = space.k3
    linear_k = sigma + tau + 1
    if shape in ("1", "1*"):
        return ()
    rs = _r_generators(a_group, tau)
    if shape == "5":
        r2 = rs[1]
        mset = sorted(_order4_components(r2))
        comp = sorted(set(range(k3)) - set(mset))
        if target_k == sigma + 4:
            return ()
        if target_k == sigma + 2:
            return (comp[0],)
        return (comp[0], mset[0])
    if tau == 1:
        if target_k == linear_k:
            return ()
        return tuple(range(1, k3))
    if shape == "2" and tau == 2:
        o2 = _order4_components(rs[1])
        outside = [j for j in range(k3) if j not in o2]
        if target_k == sigma + 3:
            return ()
        if target_k == sigma + 1:
            keep = set(o2) | {outside[0]}
            return tuple(j for j in range(k3) if j not in keep)
        keep = {min(o2), outside[0]}
        return tuple(j for j in range(k3) if j not in keep)
    # Rank dial: one ab per surviving component class.
    classes = _component_classes(rs, k3, skip_first=(shape == "2"))
    if shape == "2":
        if any(not members for members in classes.values()) or len(classes) != 2 ** (tau - 1):
            raise ConstructionError("component classes do not split as expected")
        top = sigma + tau + 1 + comb(tau - 1, 2) + tau
        if target_k == sigma + 2:
            return ()
        if target_k == sigma + 1:
            torsion_sorted = [c for c in a_group.elements if order(c) <= 2]
            sq_span = {square(c) for c in a_group.elements}
            x = next((c for c in torsion_sorted if c not in sq_span), None)
            if x is None:
                raise ConstructionError(
                    "every torsion element is a square; this rank needs sigma > tau")
            return tuple(j for j, val in enumerate(x.q8) if val == _A2)
        level = top - target_r
        if not 0 <= level <= tau:
            raise ConstructionError(f"rank {target_r} outside the dial range")
        if level == tau:
            return tuple(classes[frozenset()])
        banned = set(range(2, 2 + level))
        return tuple(sorted(min(members) for sig, members in classes.items()
                            if not sig & banned))
    # shape 3
    classes.pop(frozenset(), None)
    if len(classes) != 2 ** tau - 1:
        raise ConstructionError("component classes do not split as expected")
    if target_k == sigma + 1:
        return ()
    top = sigma + tau + 1 + comb(tau + 1, 2)
    level = top - target_r
    if not 0 <= level <= tau - 1:
        raise ConstructionError(f"rank {target_r} outside the dial range")
    banned = set(range(1, 1 + level))
    return tuple(sorted(min(members) for sig, members in classes.items()
                        if not sig & banned))


def build_from_plan(plan: ConstructionPlan) -> tuple[CodeGroup, StructureReport]:
    """Run base -> lift -> outside generators and verify the outcome."""
    base = base_hadamard(_base_spec_for(plan.shape, plan.sigma, plan.tau))
    if plan.shape in ("1", "1*"):
        group: CodeGroup = base
    else:
        a_group = lift_to_A(base, plan.shape)
        s_gens = build_s_generators(a_group, plan)
        group = closure(tuple(a_group.generators) + tuple(s_gens), a_group.space)
    verdict = is_hadamard(BinaryCode.from_group(group))
    if not verdict:
        raise ConstructionError(f"construction is not Hadamard: {verdict.diagnosis}")
    report = standardize(group)
    if report.shape != plan.shape:
        raise ConstructionError(
            f"plan wanted shape {plan.shape}, construction classifies as {report.shape}")
    measured = measure(group, report)
    if (measured.k, measured.r) != (plan.target_k, plan.target_r):
        raise ConstructionError(
            f"plan ({plan.target_k},{plan.target_r}) built ({measured.k},{measured.r})")
    return group, report


def make_plan(m: int, shape: str, sigma: int, tau: int,
              target_k: int, target_r: int) -> ConstructionPlan:
    """Plan with the dial filled in (builds the abelian part to locate it)."""
    if shape in ("1", "1*"):
        dial: tuple[int, ...] = ()
    else:
        a_group = lift_to_A(base_hadamard(_base_spec_for(shape, sigma, tau)), shape)
        dial = _plan_dial(shape, sigma, tau, target_k, target_r, a_group)
    return ConstructionPlan(m=m, shape=shape, sigma=sigma, tau=tau,
                            target_k=target_k, target_r=target_r, dial=dial)


def construct_for(m: int, target_k: int, target_r: int) -> tuple[CodeGroup, StructureReport]:
    """Emit a Hadamard code of length 2^m with the requested kernel dimension
    and rank, choosing the first shape admitting the pair in preference order."""
    for shape in CONSTRUCTIBLE_SHAPES:
        for sigma, tau in shape_parameter_range(m, shape):
            if (target_k, target_r) in allowable_pairs(m, shape, sigma, tau):
                plan = make_plan(m, shape, sigma, tau, target_k, target_r)
                return build_from_plan(plan)
    candidates = sorted(all_allowable_pairs(m))
    nearest = tuple(sorted(candidates,
                           key=lambda p: (abs(p[0] - target_k) + abs(p[1] - target_r), p))[:5])
    raise NotAllowableError(
        f"(k,r)=({target_k},{target_r}) is not allowable at length 2^{m}; "
        f"nearest pairs: {', '.join(str(p) for p in nearest)}", nearest)
