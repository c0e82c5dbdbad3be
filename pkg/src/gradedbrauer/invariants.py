"""Brauer-Wall classification of graded Azumaya algebras at a point.

Over the real point the graded Brauer group is cyclic of order 8, over
the complex point of order 2.  A class is pinned down by a triple of
invariants, each computed from the algebra itself:

* ``parity``  — degree of the generator of the graded center (Z/2);
* ``q2``      — the class of the graded center as a graded quadratic
  algebra.  Over the real point this is Z/4, encoded from the
  generator's (parity, normalized square) as::

      0 <-> (even, +1)     2 <-> (even, -1)
      1 <-> (odd,  +1)     3 <-> (odd,  -1)

  and over the complex point it is just the parity (Z/2);
* ``ungraded`` — which of the two division-algebra types anchors the
  underlying ungraded Azumaya algebra (the whole algebra for an even
  class, its degree-0 part for an odd class), detected by the sign of
  the regular trace form: positive signature means the matrix type
  (class 0), negative means the quaternion type (class 1).  Over the
  complex point this invariant is identically 0.

The Z/8 (resp. Z/2) value of a class is *not* read off a transcribed
table: :func:`_calibration` computes, once per field and at runtime,
the invariant triples of the powers of the rank-one Clifford generator
``C<1>`` — which represents 1 by normalization — and inverts that map.
The test suite pins the same correspondence against an independently
hand-derived table.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import (GradedAlgebra, NotAzumayaError, graded_tensor,
                      ground_algebra, hat_center, trace_signature)
from .clifford import DiagonalForm, clifford
from .scalars import Field, field_from_label

_Q2_FROM_DESCRIPTOR = {(0, 1): 0, (1, 1): 1, (0, -1): 2, (1, -1): 3}


def quadratic_descriptor(a: GradedAlgebra) -> tuple[int, int]:
    """``(parity, square sign)`` of the graded-center generator.

    The square sign is ``+1`` or ``-1`` over the real point and always
    ``+1`` over the complex point, matching the normal form produced by
    :func:`gradedbrauer.algebra.hat_center`.
    """
    h = hat_center(a)
    par = h.parity[1]
    square = h.basis_product(1, 1).get(0)
    sign = 1 if square == h.field.one() else -1
    return par, sign


def q2_class(a: GradedAlgebra) -> int:
    """Class of the graded center: Z/4 over R, Z/2 over C."""
    par, sign = quadratic_descriptor(a)
    if a.field.is_real:
        return _Q2_FROM_DESCRIPTOR[(par, sign)]
    return par


def parity_class(a: GradedAlgebra) -> int:
    """The Z/2 invariant: parity of the graded-center generator."""
    return quadratic_descriptor(a)[0]


def q2_add(x: int, y: int, field: Field) -> int:
    """Composition in the graded quadratic group: Z/4 over R, Z/2 over C.

    This is what the product of graded quadratic algebras does to the
    encoded classes: generator parities add, squares multiply, and a
    further sign appears when both generators are odd.
    """
    n = 4 if field.is_real else 2
    return (x + y) % n


def ungraded_class(a: GradedAlgebra, class_parity: int | None = None) -> int:
    """The division-type invariant (0 = matrix type, 1 = quaternion type).

    Examines the regular trace form of the designated ungraded algebra:
    the input itself when its class is even, its degree-0 part when
    odd.  A zero signature means the input is not in the Azumaya range
    of this detector.
    """
    if not a.field.is_real:
        return 0
    if class_parity is None:
        class_parity = parity_class(a)
    designated = a if class_parity == 0 else a.even_part()
    sig = trace_signature(designated)
    if sig > 0:
        return 0
    if sig < 0:
        return 1
    raise NotAzumayaError(
        "regular trace form has zero signature; no division-type anchor"
    )


def invariant_triple(a: GradedAlgebra) -> tuple[int, int, int]:
    """``(parity, q2, ungraded)`` — a complete invariant of the class."""
    par, sign = quadratic_descriptor(a)
    if a.field.is_real:
        q2 = _Q2_FROM_DESCRIPTOR[(par, sign)]
    else:
        q2 = par
    return par, q2, ungraded_class(a, class_parity=par)


@lru_cache(maxsize=None)
def _calibration(field_label: str) -> dict[tuple[int, int, int], int]:
    """Map invariant triples to group elements, by computing the powers
    of the generator ``C<1>`` (the rank-one Clifford algebra, class 1)."""
    field = field_from_label(field_label)
    count = 8 if field.is_real else 2
    generator = clifford(DiagonalForm((1,), field))
    power = ground_algebra(field)
    table: dict[tuple[int, int, int], int] = {}
    for k in range(count):
        if k:
            power = graded_tensor(power, generator)
        table[invariant_triple(power)] = k
    if len(table) != count:  # pragma: no cover - internal consistency
        raise RuntimeError("calibration triples collided; invariants are broken")
    return table


def group_order(field: Field) -> int:
    """Order of the graded Brauer group of the point: 8 over R, 2 over C."""
    return 8 if field.is_real else 2


def bw_class(a: GradedAlgebra) -> int:
    """The class of ``a`` in Z/8 (real point) or Z/2 (complex point).

    Normalized so that the rank-one Clifford algebra ``C<1>`` maps to 1.
    Raises :class:`~gradedbrauer.algebra.NotAzumayaError` when the
    computed invariants match no class — which for genuinely graded
    Azumaya input cannot happen.
    """
    triple = invariant_triple(a)
    table = _calibration(a.field.label)
    try:
        return table[triple]
    except KeyError:
        raise NotAzumayaError(
            f"invariant triple {triple} matches no Brauer-Wall class"
        ) from None


def witt_to_bw(form: DiagonalForm) -> int:
    """Clifford-algebra map from the Witt ring to the graded Brauer group.

    Over the real point this lands in Z/8 and equals the signature
    mod 8; over the complex point it is the rank mod 2.
    """
    return bw_class(clifford(form))
