"""Reference Hadamard code families with known rank and kernel pairs.

Two hand-specified families are bundled as golden fixtures:

* Family A: six codes of length 128, subgroups of Q8^32.  They share one
  abelian part (three order-four rows plus a torsion row); the outside
  generator varies and sweeps every achievable (kernel dimension, rank)
  pair for those parameters.
* Family B: three codes of length 32, subgroups of Z4^4 Q8^6, likewise
  sweeping all pairs for their parameters.

The tuples below are spelled out value by value on purpose: they are input
data for the classifier and measurement tests, not derived objects.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AmbientSpace, GroupElement
from .code import CodeGroup, closure

__all__ = [
    "ReferenceCode",
    "ReferenceFamily",
    "REFERENCE_FAMILY_A",
    "REFERENCE_FAMILY_B",
    "REFERENCE_FAMILIES",
    "build_reference_code",
]


@dataclass(frozen=True)
class ReferenceCode:
    """One generator set with its expected measurement outcome."""

    name: str
    space: AmbientSpace
    generators: tuple[GroupElement, ...]
    expected_k: int
    expected_r: int
    expected_case: str


@dataclass(frozen=True)
class ReferenceFamily:
    """A group of reference codes sharing length and structural parameters."""

    name: str
    m: int
    shape: str
    sigma: int
    tau: int
    codes: tuple[ReferenceCode, ...]


def build_reference_code(ref: ReferenceCode) -> CodeGroup:
    """Close the stored generators into the full subgroup."""
    return closure(ref.generators, ref.space)


### Family A: length 128 inside Q8^32 ########################################

_SPACE_A = AmbientSpace(0, 0, 32)

_R1_HALF = ("a",) * 16
_R2_HALF = ("a", "a", "a3", "a3", "a", "a", "a3", "a3",
            "1", "1", "a2", "a2", "1", "1", "a2", "a2")
_R3_HALF = ("a", "a3", "a", "a3", "1", "a2", "1", "a2",
            "a", "a3", "a", "a3", "1", "a2", "1", "a2")
_X1_ROW = ("1",) * 16 + ("a2",) * 16

_Y1 = ("b",) * 16
_Y2 = ("ab",) * 16
_Y3 = ("b", "b", "b", "ab") * 4
_Y4 = ("b",) * 11 + ("ab", "b", "b", "b", "ab")
_Y5 = ("b",) * 15 + ("ab",)
_Y6 = ("b",) * 12 + ("ab",) * 4

_ABELIAN_ROWS_A = (
    _R1_HALF + _R1_HALF,
    _R2_HALF + _R2_HALF,
    _R3_HALF + _R3_HALF,
    _X1_ROW,
)

_FAMILY_A_OUTSIDE = (
    ("len128-k6-r9", _Y1 + _Y1, 6, 9, "4a"),
    ("len128-k5-r11", _Y2 + _Y1, 5, 11, "4b"),
    ("len128-k4-r12", _Y3 + _Y3, 4, 12, "4c"),
    ("len128-k4-r11", _Y4 + _Y4, 4, 11, "4c"),
    ("len128-k4-r10", _Y5 + _Y5, 4, 10, "4c"),
    ("len128-k4-r9", _Y6 + _Y6, 4, 9, "4c"),
)

REFERENCE_FAMILY_A = ReferenceFamily(
    name="A",
    m=7,
    shape="2",
    sigma=4,
    tau=3,
    codes=tuple(
        ReferenceCode(
            name=name,
            space=_SPACE_A,
            generators=tuple(
                _SPACE_A.element(q8=row) for row in _ABELIAN_ROWS_A + (s_row,)
            ),
            expected_k=k,
            expected_r=r,
            expected_case=case,
        )
        for name, s_row, k, r, case in _FAMILY_A_OUTSIDE
    ),
)


### Family B: length 32 inside Z4^4 Q8^6 #####################################

_SPACE_B = AmbientSpace(0, 4, 6)

_B_R1 = ((0, 2, 0, 2), ("1", "a2", "a", "a", "a", "a"))
_B_R2 = ((0, 0, 2, 2), ("a", "a", "1", "a2", "a", "a3"))

_FAMILY_B_OUTSIDE = (
    ("len32-k4-r7", ("b", "b", "b", "b", "b", "b"), 4, 7, "4a"),
    ("len32-k3-r9", ("b", "ab", "b", "ab", "b", "ab"), 3, 9, "4c"),
    ("len32-k3-r8", ("b", "ab", "b", "b", "b", "b"), 3, 8, "4c"),
)

REFERENCE_FAMILY_B = ReferenceFamily(
    name="B",
    m=5,
    shape="3",
    sigma=3,
    tau=2,
    codes=tuple(
        ReferenceCode(
            name=name,
            space=_SPACE_B,
            generators=(
                _SPACE_B.element(z4=_B_R1[0], q8=_B_R1[1]),
                _SPACE_B.element(z4=_B_R2[0], q8=_B_R2[1]),
                _SPACE_B.element(z4=(1, 1, 1, 1), q8=s_row),
            ),
            expected_k=k,
            expected_r=r,
            expected_case=case,
        )
        for name, s_row, k, r, case in _FAMILY_B_OUTSIDE
    ),
)

REFERENCE_FAMILIES = (REFERENCE_FAMILY_A, REFERENCE_FAMILY_B)
