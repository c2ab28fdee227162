"""Decision procedures for Mathieu subspaces and their radicals.

A subspace M is a Mathieu subspace (in one of the four sidedness variants)
when for every element a all of whose powers lie in M, the one- or two-sided
translates of large powers of a eventually stay in M.  Over a finite field
everything here is decided exactly:

* ``decide_mathieu`` scans the idempotents of M and checks that each one's
  sided ideal stays inside M.  For finite-dimensional algebras this
  criterion is equivalent to the definition, and a failing idempotent is a
  replayable refutation since its powers are constant.
* ``oracle_mathieu`` is the deliberately naive definition-level check, kept
  free of the theory above so the two can be compared on everything small.
* ``radical_member`` decides membership in the radical through a finite
  power window derived from the minimal polynomial: with minpoly t^k h,
  h(0) != 0 and e = deg h >= 1, the tail powers satisfy a linear recurrence
  with invertible constant term, so membership of the e consecutive powers
  a^s, ..., a^(s+e-1) (s = max(k, 1)) propagates to the whole tail in both
  directions.  Nilpotent elements always qualify.  ``radical_enumerate``
  recomputes every verdict a second way from the hash-detected power cycle
  and refuses to return on any disagreement.

Over the rationals the scans are impossible and only the element-level
operations are offered: the window-based ``radical_member``, the
one-dimensional ``line_is_mathieu`` rule, and ``verify_witness`` for
replaying a claimed refutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _scan
from .algebra import (
    Algebra,
    Coords,
    Element,
    elem_power,
    is_quasi_idempotent,
    minimal_polynomial,
    power_cycle,
)
from .errors import (
    AlgebraMismatch,
    ConsistencyError,
    InfiniteField,
    InfiniteFieldNoDecision,
    NotCommutative,
    NotInRadical,
    NotMathieu,
    OnlyTrivial,
    TooLarge,
    ZeroElement,
)
from .subspace import (
    ALL_VARIANTS,
    Sidedness,
    Subspace,
    enumerate_subspaces,
    theta_ideal,
)

MAX_SCAN_DEFAULT = 10**7


@dataclass(frozen=True)
class Witness:
    """A replayable refutation: an idempotent of V whose translate escapes V.

    ``product`` is b*e (left), e*c (right), or b*e*c (two-sided); since
    e^m = e for every m, the recorded product violates the defining tail
    condition for all exponents at once.
    """

    e: Coords
    b: Optional[Coords]
    c: Optional[Coords]
    product: Coords


@dataclass(frozen=True)
class MathieuVerdict:
    is_mathieu: bool
    theta: str
    method: str
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class RadicalCertificate:
    """Certifies a in sqrt(M) by exhibiting N with the ideal of a^N inside M."""

    exponent: int
    ideal: Subspace


# -- radicals -----------------------------------------------------------------


def radical_member(v: Subspace, a: Element) -> bool:
    """Whether all sufficiently large powers of ``a`` lie in ``v``.

    Total over every supported field; see the module docstring for the
    finite decision window.
    """
    if a.algebra != v.ambient:
        raise AlgebraMismatch("element and subspace live in different algebras")
    data = minimal_polynomial(a)
    e = data.h.degree
    if e == 0:
        return True
    s = max(data.k, 1)
    x = elem_power(a, s)
    for _ in range(e):
        if not v.member(x):
            return False
        x = x * a
    return True


def _cycle_radical_member(v: Subspace, a: Element) -> bool:
    """Cycle-based reference definition: tail powers a^mu .. a^(mu+lam-1) in v."""
    info = power_cycle(a)
    x = elem_power(a, info.preperiod)
    for _ in range(info.period):
        if not v.member(x):
            return False
        x = x * a
    return True


def radical_enumerate(
    v: Subspace, max_scan: int = MAX_SCAN_DEFAULT
) -> list[Element]:
    """The exact radical of ``v`` as a list of elements, by full enumeration.

    Every element's verdict is computed twice: through the minimal-polynomial
    window and through the hash-detected power cycle.  Any disagreement
    raises :class:`ConsistencyError` (it would mean a bug, not a property of
    the input).  Elements come back in lexicographic coordinate order.
    """
    a = v.ambient
    if not a.field.is_finite:
        raise InfiniteField("radical enumeration needs a finite field")
    p = a.field.order
    constraints = v.constraints()
    out: list[Element] = []
    for chunk in _scan.power_chunks(a, max_scan):
        in_v = _scan.membership_bitmap(chunk.rows, constraints, p)
        win_ok = _scan.slice_all_true(in_v, chunk.win_idx, chunk.win_off)
        window_verdict = (chunk.hdeg == 0) | win_ok
        cyc_ok = _scan.slice_all_true(in_v, chunk.cyc_idx, chunk.cyc_off)
        if not np.array_equal(window_verdict, cyc_ok):
            b = int(np.nonzero(window_verdict != cyc_ok)[0][0])
            coords = tuple(int(c) for c in chunk.rows[chunk.offset[b]])
            raise ConsistencyError(
                f"window criterion and power cycle disagree on {coords} "
                f"in {a.label}"
            )
        for b in np.nonzero(cyc_ok)[0]:
            coords = tuple(int(c) for c in chunk.rows[chunk.offset[b]])
            out.append(Element(a, coords))
    return out


def certify_radical_membership(
    m: Subspace, variant: Sidedness, a: Element
) -> RadicalCertificate:
    """Least N >= 0 with the sided ideal of a^N contained in m.

    Existence (for m a Mathieu subspace and a in its radical) is bounded by
    n*k, where n = max(k_a, 1) makes every power of a^n lie in m and k is
    the zero-root multiplicity for a^n; the search from 0 upward returns the
    minimum, which is a strengthening over the mere existence bound.
    Exhausting the bound proves m was not a Mathieu subspace.
    """
    variant = Sidedness.parse(variant)
    if not radical_member(m, a):
        raise NotInRadical(f"{a!r} is not in the radical")
    n = max(minimal_polynomial(a).k, 1)
    k2 = minimal_polynomial(elem_power(a, n)).k
    bound = n * max(k2, 0)
    for exponent in range(bound + 1):
        ideal = theta_ideal(elem_power(a, exponent), variant)
        if m.contains(ideal):
            return RadicalCertificate(exponent, ideal)
    raise NotMathieu(
        f"no exponent up to {bound} works; {m!r} is not a "
        f"{variant.value} Mathieu subspace"
    )


# -- idempotent-criterion decision ------------------------------------------------


def _idempotents_of(v: Subspace, max_scan: int) -> list[Coords]:
    """All idempotent vectors of v, sorted by coordinates (cached)."""
    if v._idempotents is None:
        found = _scan.idempotent_coords(v.ambient, v.basis, max_scan)
        v._idempotents = sorted(found)
    return v._idempotents


def _first_violation(
    v: Subspace, e_coords: Coords, variant: Sidedness
) -> Optional[Witness]:
    a = v.ambient
    d = a.dim
    if variant in (Sidedness.LEFT, Sidedness.PRE_TWO_SIDED):
        for i in range(d):
            prod = a._mul_coords(a._basis_coords(i), e_coords)
            if not v.member_coords(prod):
                return Witness(e_coords, a._basis_coords(i), None, prod)
    if variant in (Sidedness.RIGHT, Sidedness.PRE_TWO_SIDED):
        for i in range(d):
            prod = a._mul_coords(e_coords, a._basis_coords(i))
            if not v.member_coords(prod):
                return Witness(e_coords, None, a._basis_coords(i), prod)
    if variant is Sidedness.TWO_SIDED:
        for i in range(d):
            left = a._mul_coords(a._basis_coords(i), e_coords)
            for j in range(d):
                prod = a._mul_coords(left, a._basis_coords(j))
                if not v.member_coords(prod):
                    return Witness(
                        e_coords, a._basis_coords(i), a._basis_coords(j), prod
                    )
    return None


def decide_mathieu(
    v: Subspace, variant: Sidedness, max_scan: int = MAX_SCAN_DEFAULT
) -> MathieuVerdict:
    """Exact decision by the idempotent criterion (finite fields).

    Enumerates the q^dim(v) vectors of v, collects the idempotents, and
    requires each one's sided ideal to stay inside v.  On failure the
    witness is the first violation in lexicographic order of
    (idempotent coordinates, left basis index, right basis index).
    """
    variant = Sidedness.parse(variant)
    if not v.ambient.field.is_finite:
        raise InfiniteFieldNoDecision(
            "no full decision over the rationals; use line_is_mathieu, "
            "radical_member or verify_witness"
        )
    for e_coords in _idempotents_of(v, max_scan):
        witness = _first_violation(v, e_coords, variant)
        if witness is not None:
            return MathieuVerdict(False, variant.value, "idempotent_criterion", witness)
    return MathieuVerdict(True, variant.value, "idempotent_criterion")


def decide_all_variants(
    v: Subspace, max_scan: int = MAX_SCAN_DEFAULT
) -> dict[Sidedness, MathieuVerdict]:
    """One idempotent scan, all four verdicts."""
    return {variant: decide_mathieu(v, variant, max_scan) for variant in ALL_VARIANTS}


def verify_witness(v: Subspace, variant: Sidedness, witness: Witness) -> bool:
    """Replay a refutation: e in v, e idempotent, recorded product outside v.

    Works over every supported field; this is the decision path available
    over the rationals when a refuting idempotent is claimed.
    """
    variant = Sidedness.parse(variant)
    a = v.ambient
    e = tuple(a.field.coerce(c) for c in witness.e)
    if not v.member_coords(e):
        return False
    if a._mul_coords(e, e) != e:
        return False
    if variant is Sidedness.LEFT:
        if witness.b is None or witness.c is not None:
            return False
        prod = a._mul_coords(tuple(witness.b), e)
    elif variant is Sidedness.RIGHT:
        if witness.c is None or witness.b is not None:
            return False
        prod = a._mul_coords(e, tuple(witness.c))
    elif variant is Sidedness.PRE_TWO_SIDED:
        if (witness.b is None) == (witness.c is None):
            return False
        if witness.b is not None:
            prod = a._mul_coords(tuple(witness.b), e)
        else:
            prod = a._mul_coords(e, tuple(witness.c))
    else:
        if witness.b is None or witness.c is None:
            return False
        prod = a._mul_coords(a._mul_coords(tuple(witness.b), e), tuple(witness.c))
    return prod == tuple(witness.product) and not v.member_coords(prod)


# -- definition-level oracle ---------------------------------------------------------


def oracle_mathieu(
    v: Subspace, variant: Sidedness, max_scan: int = MAX_SCAN_DEFAULT
) -> bool:
    """Brute-force check straight from the definition, no theory shortcuts.

    For every element a with all powers inside v (tested over one full
    cycle of the power sequence), every required basis translate of every
    tail power must lie in v; eventual periodicity makes the tail check
    finite and exact.
    """
    variant = Sidedness.parse(variant)
    a = v.ambient
    if not a.field.is_finite:
        raise InfiniteField("the brute-force oracle needs a finite field")
    if a.size > max_scan:
        raise TooLarge(a.size, max_scan, what=f"oracle scan of {a.label}")
    basis = [a._basis_coords(i) for i in range(a.dim)]
    for x in a.elements():
        if not v.member_coords(x.coords):
            continue
        info = power_cycle(x)
        powers = [x.coords]
        cur = x.coords
        for _ in range(info.preperiod + info.period - 2):
            cur = a._mul_coords(cur, x.coords)
            powers.append(cur)
        if not all(v.member_coords(pw) for pw in powers):
            continue
        tail = powers[info.preperiod - 1 :]
        if variant in (Sidedness.LEFT, Sidedness.PRE_TWO_SIDED):
            for b in basis:
                if not all(v.member_coords(a._mul_coords(b, t)) for t in tail):
                    return False
        if variant in (Sidedness.RIGHT, Sidedness.PRE_TWO_SIDED):
            for c in basis:
                if not all(v.member_coords(a._mul_coords(t, c)) for t in tail):
                    return False
        if variant is Sidedness.TWO_SIDED:
            for b in basis:
                bt = [a._mul_coords(b, t) for t in tail]
                for c in basis:
                    if not all(v.member_coords(a._mul_coords(t, c)) for t in bt):
                        return False
    return True


# -- special decision paths -------------------------------------------------------------


def is_mathieu_commutative(
    v: Subspace, max_scan: int = MAX_SCAN_DEFAULT
) -> bool:
    """Commutative criterion: v is Mathieu iff its radical is an ideal.

    Decided by enumerating the radical as a set and checking closure under
    addition, scalars, and products with the basis.
    """
    a = v.ambient
    if not a.is_commutative:
        raise NotCommutative(f"{a.label} is not commutative")
    members = radical_enumerate(v, max_scan)
    rad = {x.coords for x in members}
    if len(rad) ** 2 > max_scan:
        raise TooLarge(len(rad) ** 2, max_scan, what="radical closure check")
    f = a.field
    for x in rad:
        for s in f.elements():
            if tuple(f.mul(s, c) for c in x) not in rad:
                return False
        for i in range(a.dim):
            if a._mul_coords(a._basis_coords(i), x) not in rad:
                return False
        for y in rad:
            if tuple(f.add(cx, cy) for cx, cy in zip(x, y)) not in rad:
                return False
    return True


def line_is_mathieu(a: Element, variant: Sidedness) -> bool:
    """One-dimensional rule, total over every supported field.

    The line through ``a`` is a Mathieu subspace exactly when it is itself
    the sided ideal of ``a``, or ``a`` is not a quasi-idempotent.
    """
    variant = Sidedness.parse(variant)
    if a.is_zero:
        raise ZeroElement("the zero element spans no line")
    if theta_ideal(a, variant).dim == 1:
        return True
    return not is_quasi_idempotent(a)


def find_nontrivial_mathieu(
    a: Algebra, max_scan: int = MAX_SCAN_DEFAULT
) -> Subspace:
    """First nontrivial two-sided Mathieu subspace in canonical order.

    Guaranteed to exist whenever dim >= 2 over a field; raises
    :class:`OnlyTrivial` exactly in dimension 1 (the base field itself).
    Lines are searched first through the one-dimensional rule, then higher
    dimensions through the full decision.
    """
    if not a.field.is_finite:
        raise InfiniteField("the search scans subspaces of a finite algebra")
    if a.dim == 1:
        raise OnlyTrivial(f"{a.label} has only trivial Mathieu subspaces")
    for line in enumerate_subspaces(a, 1):
        if line_is_mathieu(Element(a, line.basis[0]), Sidedness.TWO_SIDED):
            return line
    for r in range(2, a.dim):
        for v in enumerate_subspaces(a, r):
            if decide_mathieu(v, Sidedness.TWO_SIDED, max_scan).is_mathieu:
                return v
    raise ConsistencyError(
        f"{a.label} has dimension >= 2 but no nontrivial Mathieu subspace was found"
    )


# -- algebra-level classification ----------------------------------------------------------


def _nontrivial_idempotents(a: Algebra, max_scan: int) -> list[Coords]:
    full_basis = tuple(a._basis_coords(i) for i in range(a.dim))
    idems = _scan.idempotent_coords(a, full_basis, max_scan)
    zero = tuple(a.field.zero for _ in range(a.dim))
    return [e for e in idems if e != zero and e != a.unit]


def _is_two_copies_of_base_field(a: Algebra, nontrivial: list[Coords]) -> bool:
    """Exactly two nontrivial idempotents e and 1-e, orthogonal and spanning."""
    if a.dim != 2 or len(nontrivial) != 2:
        return False
    f = a.field
    e, g = nontrivial
    one_minus_e = tuple(f.sub(u, c) for u, c in zip(a.unit, e))
    if g != one_minus_e:
        return False
    zero = tuple(f.zero for _ in range(a.dim))
    if a._mul_coords(e, g) != zero or a._mul_coords(g, e) != zero:
        return False
    return Subspace.span(a, [e, g]).is_full


def is_quasi_stable(a: Algebra, max_scan: int = MAX_SCAN_DEFAULT) -> bool:
    """Whether every subspace avoiding the unit is a Mathieu subspace.

    Holds exactly when the algebra has no nontrivial idempotent at all
    (finite-dimensional local case) or is two copies of the base field.
    Decided by a full idempotent scan.
    """
    if not a.field.is_finite:
        raise InfiniteFieldNoDecision("idempotent scan needs a finite field")
    nontrivial = _nontrivial_idempotents(a, max_scan)
    if not nontrivial:
        return True
    return _is_two_copies_of_base_field(a, nontrivial)


def is_stable(a: Algebra, max_scan: int = MAX_SCAN_DEFAULT) -> bool:
    """Whether every subspace avoiding the unit is a sided ideal.

    Only the base field itself and, over F_2, the direct sum of two copies
    of F_2 qualify.
    """
    if not a.field.is_finite:
        raise InfiniteFieldNoDecision("stability decision needs a finite field")
    if a.dim == 1:
        return True
    if a.field.characteristic == 2 and a.dim == 2:
        return _is_two_copies_of_base_field(a, _nontrivial_idempotents(a, max_scan))
    return False
