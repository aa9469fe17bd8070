"""The partition-counting functions, each realized two independent ways.

Every function has a closed product form, built from Pochhammer symbols
by :func:`gf_series`, and a brute-force combinatorial count,
:func:`count_by_enumeration`, that generates the defining objects one by
one.  The two paths share no code beyond integer arithmetic, so each one
is an oracle for the other; the oracle suite in :mod:`podium.manifest`
compares them coefficient by coefficient.

Enumeration is exponential in spirit, so each function carries a default
cap and a hard ceiling past which it refuses to run.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional

from .series import Series, constant, pochhammer, q_power


class CapExceededError(ValueError):
    """Enumeration was asked to run past its safety cap."""


class FunctionId(enum.Enum):
    """The sixteen counting functions; values are the CLI-facing names."""

    P = "p"            # unrestricted partitions
    POD = "pod"        # odd parts distinct
    PED = "ped"        # even parts distinct
    QDIST = "qdist"    # all parts distinct
    QODD = "qodd"      # distinct odd parts only
    PEO = "peo"        # (-1)^{#parts} over all partitions
    QEO = "qeo"        # (-1)^{#odd parts} over distinct-part partitions
    OPBAR = "opbar"    # overpartitions
    OPODD = "opodd"    # overpartitions into odd parts
    AFUN = "afun"      # (-1)^{#parts} over 2-colored-even partitions
    CUBIC = "cubic"    # even parts in two colors
    P3 = "p3"          # all parts in three colors
    P2MOD4 = "p2mod4"  # parts congruent to 2 mod 4
    QODD3 = "qodd3"    # distinct odd parts in three colors
    EO = "eo"          # every even part below every odd part
    EOBAR = "eobar"    # EO, odd multiplicity only at the largest even part

    @classmethod
    def from_name(cls, name: str) -> "FunctionId":
        for fid in cls:
            if fid.value == name:
                return fid
        known = ", ".join(f.value for f in cls)
        raise ValueError(f"unknown function {name!r}; known: {known}")


# Caps keep the exhaustive counts to seconds; the hard ceilings block
# accidental exponential blowups even when a caller overrides the cap.
DEFAULT_CAPS = {
    FunctionId.P: 35,
    FunctionId.POD: 35,
    FunctionId.PED: 35,
    FunctionId.QDIST: 35,
    FunctionId.QODD: 35,
    FunctionId.PEO: 35,
    FunctionId.QEO: 35,
    FunctionId.P2MOD4: 35,
    FunctionId.EO: 35,
    FunctionId.EOBAR: 35,
    FunctionId.OPBAR: 22,
    FunctionId.OPODD: 22,
    FunctionId.AFUN: 22,
    FunctionId.CUBIC: 22,
    FunctionId.QODD3: 22,
    FunctionId.P3: 18,
}

HARD_CAPS = {
    fid: (60 if cap == 35 else 30 if cap == 22 else 24)
    for fid, cap in DEFAULT_CAPS.items()
}


# ----------------------------------------------------------------------
# product-form generating series
# ----------------------------------------------------------------------

def _gf_p(n):
    return pochhammer(1, 1, 1, n).inverse()


def _gf_pod(n):
    # (q^2;q^2) / ((q;q)(q^4;q^4)); the other classical quotients for this
    # function are verified as identities rather than used as alternates
    return pochhammer(1, 2, 2, n) * (pochhammer(1, 1, 1, n) * pochhammer(1, 4, 4, n)).inverse()


def _gf_ped(n):
    return pochhammer(1, 4, 4, n) * pochhammer(1, 1, 1, n).inverse()


def _gf_qdist(n):
    return pochhammer(-1, 1, 1, n)


def _gf_qodd(n):
    return pochhammer(-1, 1, 2, n)


def _gf_peo(n):
    return pochhammer(-1, 1, 1, n).inverse()


def _gf_qeo(n):
    return pochhammer(-1, 1, 2, n).inverse()


def _gf_opbar(n):
    return pochhammer(1, 2, 2, n) * pochhammer(1, 1, 1, n).power(-2)


def _gf_opodd(n):
    num = pochhammer(1, 2, 2, n).power(3)
    den = pochhammer(1, 1, 1, n).power(2) * pochhammer(1, 4, 4, n)
    return num * den.inverse()


def _gf_afun(n):
    return pochhammer(1, 1, 1, n) * pochhammer(1, 4, 4, n).inverse()


def _gf_cubic(n):
    return (pochhammer(1, 1, 1, n) * pochhammer(1, 2, 2, n)).inverse()


def _gf_p3(n):
    return pochhammer(1, 1, 1, n).power(-3)


def _gf_p2mod4(n):
    return pochhammer(1, 2, 4, n).inverse()


def _gf_qodd3(n):
    return pochhammer(-1, 1, 2, n).power(3)


def _gf_eo(n):
    # (1-q) enters as a plain two-term polynomial, nothing special-cased
    return ((constant(1, n) - q_power(1, n)) * pochhammer(1, 2, 2, n)).inverse()


def _gf_eobar(n):
    return pochhammer(1, 4, 4, n).power(3) * pochhammer(1, 2, 2, n).power(-2)


_GF_BUILDERS = {
    FunctionId.P: _gf_p,
    FunctionId.POD: _gf_pod,
    FunctionId.PED: _gf_ped,
    FunctionId.QDIST: _gf_qdist,
    FunctionId.QODD: _gf_qodd,
    FunctionId.PEO: _gf_peo,
    FunctionId.QEO: _gf_qeo,
    FunctionId.OPBAR: _gf_opbar,
    FunctionId.OPODD: _gf_opodd,
    FunctionId.AFUN: _gf_afun,
    FunctionId.CUBIC: _gf_cubic,
    FunctionId.P3: _gf_p3,
    FunctionId.P2MOD4: _gf_p2mod4,
    FunctionId.QODD3: _gf_qodd3,
    FunctionId.EO: _gf_eo,
    FunctionId.EOBAR: _gf_eobar,
}


@lru_cache(maxsize=64)
def _gf_cached(fid: FunctionId, order: int) -> Series:
    return _GF_BUILDERS[fid](order)


def gf_series(fid: FunctionId, order: int) -> Series:
    """Generating series of `fid` truncated at `order`, via its product form."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return _gf_cached(fid, order)


def table(fid: FunctionId, nmax: int) -> list:
    """Values f(0..nmax) as a plain list, computed from the product form."""
    return list(gf_series(fid, nmax).coeffs)


# ----------------------------------------------------------------------
# enumeration oracles
# ----------------------------------------------------------------------
#
# The generator below walks "slots": (size, max multiplicity) pairs in
# descending size order.  A c-colored part value appears as c slots of
# the same size, so color-multiplicity splits are enumerated explicitly.

Slots = list
Parts = tuple  # tuple of (size, multiplicity), multiplicity >= 1


def _iter_partitions(n: int, slots: Slots) -> Iterator[Parts]:
    acc = []

    def rec(i, remaining):
        if remaining == 0:
            yield tuple(acc)
            return
        if i == len(slots):
            return
        size, cap = slots[i]
        top = remaining // size
        if cap is not None and cap < top:
            top = cap
        for mult in range(top, 0, -1):
            acc.append((size, mult))
            yield from rec(i + 1, remaining - size * mult)
            acc.pop()
        yield from rec(i + 1, remaining)

    yield from rec(0, n)


def _slots_plain(n, allow=None, cap=None, colors=1):
    out = []
    for v in range(n, 0, -1):
        if allow is not None and not allow(v):
            continue
        out.extend([(v, cap)] * colors)
    return out


def _slots_pod(n):
    return [(v, 1 if v % 2 else None) for v in range(n, 0, -1)]


def _slots_ped(n):
    return [(v, None if v % 2 else 1) for v in range(n, 0, -1)]


def _slots_two_colored_even(n):
    out = []
    for v in range(n, 0, -1):
        out.extend([(v, None)] * (2 if v % 2 == 0 else 1))
    return out


def _weight_one(parts):
    return 1


def _weight_alt_parts(parts):
    return -1 if sum(m for _, m in parts) % 2 else 1


def _weight_alt_odd_parts(parts):
    return -1 if sum(m for s, m in parts if s % 2) % 2 else 1


def _keep_eo(parts):
    evens = [s for s, _ in parts if s % 2 == 0]
    odds = [s for s, _ in parts if s % 2 == 1]
    return not evens or not odds or max(evens) < min(odds)


def _keep_eobar(parts):
    # Only the largest even part may (and, when present, must) appear an
    # odd number of times; with no even part every multiplicity is even.
    if not _keep_eo(parts):
        return False
    odd_mult = {s for s, m in parts if m % 2 == 1}
    evens = [s for s, _ in parts if s % 2 == 0]
    if evens:
        return odd_mult == {max(evens)}
    return not odd_mult


@dataclass(frozen=True)
class _Rule:
    slots: Callable[[int], Slots]
    weight: Callable[[Parts], int] = _weight_one
    keep: Optional[Callable[[Parts], bool]] = None
    overlined: bool = False


_RULES = {
    FunctionId.P: _Rule(_slots_plain),
    FunctionId.POD: _Rule(_slots_pod),
    FunctionId.PED: _Rule(_slots_ped),
    FunctionId.QDIST: _Rule(lambda n: _slots_plain(n, cap=1)),
    FunctionId.QODD: _Rule(lambda n: _slots_plain(n, allow=lambda v: v % 2 == 1, cap=1)),
    FunctionId.PEO: _Rule(_slots_plain, weight=_weight_alt_parts),
    FunctionId.QEO: _Rule(lambda n: _slots_plain(n, cap=1), weight=_weight_alt_odd_parts),
    FunctionId.OPBAR: _Rule(_slots_plain, overlined=True),
    FunctionId.OPODD: _Rule(
        lambda n: _slots_plain(n, allow=lambda v: v % 2 == 1), overlined=True
    ),
    FunctionId.AFUN: _Rule(_slots_two_colored_even, weight=_weight_alt_parts),
    FunctionId.CUBIC: _Rule(_slots_two_colored_even),
    FunctionId.P3: _Rule(lambda n: _slots_plain(n, colors=3)),
    FunctionId.P2MOD4: _Rule(lambda n: _slots_plain(n, allow=lambda v: v % 4 == 2)),
    FunctionId.QODD3: _Rule(
        lambda n: _slots_plain(n, allow=lambda v: v % 2 == 1, cap=1, colors=3)
    ),
    FunctionId.EO: _Rule(_slots_plain, keep=_keep_eo),
    FunctionId.EOBAR: _Rule(_slots_plain, keep=_keep_eobar),
}


def count_by_enumeration(fid: FunctionId, n: int, cap: Optional[int] = None) -> int:
    """Exact signed count of the objects behind `fid` at n, by generation.

    `cap` overrides the per-function default bound but may not pass the
    hard ceiling; both violations refuse loudly rather than grind.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    limit = DEFAULT_CAPS[fid] if cap is None else cap
    if limit > HARD_CAPS[fid]:
        raise CapExceededError(
            f"cap {limit} for {fid.value} is past the hard ceiling {HARD_CAPS[fid]}"
        )
    if n > limit:
        raise CapExceededError(
            f"{fid.value} enumeration at n={n} is past its cap {limit}"
        )
    rule = _RULES[fid]
    total = 0
    for parts in _iter_partitions(n, rule.slots(n)):
        if rule.keep is not None and not rule.keep(parts):
            continue
        w = rule.weight(parts)
        if rule.overlined:
            # each distinct part value may or may not be overlined
            for _ in itertools.product((False, True), repeat=len(parts)):
                total += w
        else:
            total += w
    return total
