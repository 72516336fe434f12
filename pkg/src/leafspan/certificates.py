"""Per-run bound certificates, computed in exact rational arithmetic.

The two-phase certificate chains a lower bound on the produced leaf count
against two independent upper bounds on the optimum; together they imply the
3/2 ratio without knowing the optimum.  The weighted-packing variant has its
own lower bound and an upper bound parametric in the packing solver's
claimed approximation factor.
"""

from __future__ import annotations

from fractions import Fraction


def two_phase_lower_bound(N1: int, k1: int, N2: int, k2: int) -> Fraction:
    """Guaranteed leaf count after the 3-phase, matching phase, and attach."""
    return Fraction(N1 - k1, 6) + Fraction(N2 - k2, 2) + 1


def upper_bound_from_two_branching(N2: int, k2: int) -> Fraction:
    """opt <= N2 - k2 + 1, valid for any maximal spanning 2-branching."""
    return Fraction(N2 - k2 + 1)


def two_phase_upper_bound(N1: int, k1: int, N2: int, k2: int) -> Fraction:
    """opt <= (N1-k1)/2 + (N2-k2)/2 + 1, the sharper two-phase bound."""
    return Fraction(N1 - k1, 2) + Fraction(N2 - k2, 2) + 1


def two_phase_bounds(
    N1: int, k1: int, N2: int, k2: int
) -> tuple[Fraction, Fraction, Fraction]:
    """(lower bound on leaves, weaker upper bound U2, sharper upper bound U3)."""
    return (
        two_phase_lower_bound(N1, k1, N2, k2),
        upper_bound_from_two_branching(N2, k2),
        two_phase_upper_bound(N1, k1, N2, k2),
    )


def two_phase_certificate_ok(leaves: int, N1: int, k1: int, N2: int, k2: int) -> bool:
    """Machine-checkable inequality chain implying the 3/2 ratio.

    Requires leaves >= the lower bound and
    leaves >= (U3-1)/3 + (U2-1)/3 + 1, both exactly.
    """
    lb, u2, u3 = two_phase_bounds(N1, k1, N2, k2)
    chain = (u3 - 1) / 3 + (u2 - 1) / 3 + 1
    return leaves >= lb and leaves >= chain


def baseline_lower_bound(N: int, k: int) -> Fraction:
    """Leaf guarantee of the plain 2-expansion baseline: (N-k)/2 + 1."""
    return Fraction(N - k, 2) + 1


def packing_lower_bound(
    N1: int, k1: int, N2: int, k2: int, N3: int, k3: int
) -> Fraction:
    """Leaf guarantee of the weighted-packing pipeline."""
    return (
        Fraction(N1 - k1, 12) + Fraction(N2 - k2, 6) + Fraction(N3 - k3, 2) + 1
    )


def packing_upper_bound(
    N1: int, k1: int, N2: int, k2: int, N3: int, k3: int, alpha: Fraction
) -> Fraction:
    """opt bound parametric in the packing solver's approximation factor."""
    return (
        Fraction(3 - 2 * alpha, 3) * (N1 - k1)
        + (alpha / 6) * (N2 - k2)
        + (alpha / 2) * (N3 - k3)
        + 1
    )
