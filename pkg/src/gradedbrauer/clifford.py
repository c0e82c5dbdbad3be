"""Clifford algebras of nondegenerate diagonal quadratic forms.

The Clifford algebra of ``<a_1, ..., a_n>`` has generators
``e_1, ..., e_n`` with ``e_i^2 = a_i`` and ``e_i e_j = -e_j e_i`` for
``i != j``, graded by word length mod 2.  The basis is indexed by
subsets of the generators, encoded as bitmasks so the subset product
and its reordering sign are a few integer operations:

>>> from gradedbrauer.scalars import REAL
>>> alg = clifford(DiagonalForm((1, 1), REAL))
>>> alg.dim, alg.parity
(4, (0, 1, 1, 0))
>>> alg.basis_product(1, 2)  # e_1 e_2 is basis element 3 = 0b11
{3: Fraction(1, 1)}
>>> alg.basis_product(2, 1)  # e_2 e_1 = -e_1 e_2
{3: Fraction(-1, 1)}
>>> alg.basis_product(1, 1)  # e_1^2 = 1
{0: Fraction(1, 1)}
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import AlgebraError, GradedAlgebra, Scalar
from .scalars import Field, REAL


@dataclass(frozen=True)
class DiagonalForm:
    """A nondegenerate diagonal quadratic form ``<entries>`` over ``field``.

    >>> from gradedbrauer.scalars import REAL
    >>> f = DiagonalForm((1, -1, 2), REAL)
    >>> f.rank
    3
    >>> f.signature()
    1
    >>> (f + DiagonalForm((-1,), REAL)).entries
    (Fraction(1, 1), Fraction(-1, 1), Fraction(2, 1), Fraction(-1, 1))
    """

    entries: tuple[Scalar, ...]
    field: Field = REAL

    def __post_init__(self) -> None:
        coerced = tuple(self.field.coerce(v) for v in self.entries)
        if not all(coerced):
            raise ValueError("diagonal form must be nondegenerate (no zero entries)")
        object.__setattr__(self, "entries", coerced)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def signature(self) -> int:
        """Positives minus negatives; real point only."""
        return sum(self.field.sign(v) for v in self.entries)

    def __add__(self, other: "DiagonalForm") -> "DiagonalForm":
        if not isinstance(other, DiagonalForm):
            return NotImplemented
        if self.field.label != other.field.label:
            raise ValueError("cannot sum forms over different fields")
        return DiagonalForm(self.entries + other.entries, self.field)

    def to_json(self) -> dict:
        return {
            "field": self.field.label,
            "entries": [self.field.render(v) for v in self.entries],
        }


def hyperbolic(n: int, field: Field = REAL) -> DiagonalForm:
    """The sum of ``n`` hyperbolic planes, ``<1, -1>^n``.

    >>> hyperbolic(2).entries
    (Fraction(1, 1), Fraction(-1, 1), Fraction(1, 1), Fraction(-1, 1))
    """
    if n < 0:
        raise ValueError("need a nonnegative number of planes")
    return DiagonalForm((1, -1) * n, field)


def signature_form(p: int, q: int, field: Field = REAL) -> DiagonalForm:
    """The form ``<1>^p + <-1>^q``."""
    if p < 0 or q < 0:
        raise ValueError("signature multiplicities must be nonnegative")
    return DiagonalForm((1,) * p + (-1,) * q, field)


def _subset_sign(left: int, right: int) -> int:
    """Transpositions mod 2 when sorting the word ``e_left . e_right``.

    Counts pairs ``s in left, t in right`` with ``s > t``: each such
    pair is one anticommutation when interleaving the two ascending
    words into a single ascending word.
    """
    sign = 0
    t = right
    while t:
        low = t & -t
        # generators of `left` strictly above this bit of `right`
        sign ^= ((left >> low.bit_length()).bit_count()) & 1
        t ^= low
    return -1 if sign else 1


def clifford(form: DiagonalForm) -> GradedAlgebra:
    """The Clifford algebra of ``form`` as a graded algebra.

    Basis index ``S`` (a bitmask) stands for the ascending product of
    the generators in ``S``; parity is ``popcount(S) mod 2``; index 0
    is the unit.  ``e_S e_T = sign * (prod of a_i for i in S & T) *
    e_{S xor T}``.

    >>> from gradedbrauer.scalars import REAL
    >>> quat = clifford(DiagonalForm((-1, -1), REAL))
    >>> quat.basis_product(3, 3)  # (e_1 e_2)^2 = -e_1^2 e_2^2 = -1
    {0: Fraction(-1, 1)}
    """
    n = form.rank
    if n > 16:
        raise AlgebraError("refusing a Clifford algebra of rank above 16")
    dim = 1 << n
    field = form.field
    one = field.one()
    parity = [s.bit_count() & 1 for s in range(dim)]
    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for s in range(dim):
        for t in range(dim):
            coeff = one if _subset_sign(s, t) > 0 else -one
            common = s & t
            while common:
                low = common & -common
                coeff = coeff * form.entries[low.bit_length() - 1]
                common ^= low
            table[(s, t)] = {s ^ t: coeff}
    unit = [one if s == 0 else field.zero() for s in range(dim)]
    return GradedAlgebra(field, parity, table, unit)


def tensor_index_pairing(rank_left: int, rank_right: int) -> list[int]:
    """Basis bijection for ``clifford(f + g) ~ clifford(f) (x) clifford(g)``.

    Position ``S`` (a subset of the joint generators) maps to the index
    of ``e_{S_low} (x) e_{S_high}`` in the tensor-product basis, where
    ``S_low`` is the part of ``S`` in the first ``rank_left`` generators.
    The sign in both products agrees because the joint basis word is
    already sorted with the left block first, so the map is an honest
    isomorphism of graded algebras, not just a vector-space relabeling.
    """
    dim_right = 1 << rank_right
    low_mask = (1 << rank_left) - 1
    out = []
    for s in range(1 << (rank_left + rank_right)):
        out.append((s & low_mask) * dim_right + (s >> rank_left))
    return out


def relabel(a: GradedAlgebra, perm: Sequence[int]) -> GradedAlgebra:
    """Transport ``a`` along a basis permutation (index ``i`` becomes
    ``perm[i]``), preserving products and grading."""
    if sorted(perm) != list(range(a.dim)):
        raise AlgebraError("relabeling must be a permutation of the basis")
    parity = [0] * a.dim
    for i, p in enumerate(a.parity):
        parity[perm[i]] = p
    unit = [a.field.zero()] * a.dim
    for i, u in enumerate(a.unit):
        unit[perm[i]] = u
    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for (i, j), cell in a.table.items():
        table[(perm[i], perm[j])] = {perm[k]: v for k, v in cell.items()}
    return GradedAlgebra(a.field, parity, table, unit)
