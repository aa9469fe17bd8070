"""The bundled identity manifest and the suite runners.

Identities live as data: a line-oriented text file of records, each
holding two expressions in the identity language, a truncation order, an
optional modulus, and its literature anchor.  :func:`run_suite` checks
every record coefficient by coefficient; :func:`run_oracle_suite` checks
each partition function's product form against its enumeration oracle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Dict, Iterable, Optional, Sequence, Tuple

from . import dsl
from .partitions import (
    DEFAULT_CAPS,
    CapExceededError,
    FunctionId,
    count_by_enumeration,
    gf_series,
)


class ManifestError(ValueError):
    """A manifest file could not be parsed or validated."""

    def __init__(self, message: str, source: str, line: int):
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}")


@dataclass(frozen=True)
class IdentityRecord:
    """One named identity: two expressions plus checking parameters."""

    id: str
    lhs: str
    rhs: str
    order: int
    modulus: Optional[int] = None
    description: str = ""
    ref: str = ""
    quote: str = ""

    @property
    def anchor(self) -> str:
        return f"{self.ref}: {self.quote}" if self.ref else self.quote


_KNOWN_KEYS = ("id", "desc", "ref", "quote", "lhs", "rhs", "order", "mod")
_REQUIRED_KEYS = ("id", "lhs", "rhs", "order")


def parse_manifest(text: str, source: str = "<manifest>") -> Tuple[IdentityRecord, ...]:
    """Parse manifest text into records, validating every expression."""
    if not text.isascii():
        raise ManifestError("manifest must be 7-bit printable", source, 0)

    records = []
    seen_ids = set()
    fields: Optional[Dict[str, str]] = None
    start_line = 0

    def flush(end_line: int):
        nonlocal fields
        if fields is None:
            return
        for key in _REQUIRED_KEYS:
            if key not in fields:
                raise ManifestError(f"record is missing {key}=", source, start_line)
        rec_id = fields["id"]
        if rec_id in seen_ids:
            raise ManifestError(f"duplicate record id {rec_id!r}", source, start_line)
        seen_ids.add(rec_id)
        try:
            order = int(fields["order"])
        except ValueError:
            raise ManifestError("order= must be an integer", source, start_line) from None
        if order < 0:
            raise ManifestError("order= must be >= 0", source, start_line)
        modulus = None
        if "mod" in fields:
            try:
                modulus = int(fields["mod"])
            except ValueError:
                raise ManifestError("mod= must be an integer", source, start_line) from None
            if modulus < 2:
                raise ManifestError("mod= must be >= 2", source, start_line)
        for side in ("lhs", "rhs"):
            try:
                dsl.parse(fields[side])
            except dsl.ParseError as exc:
                raise ManifestError(
                    f"record {rec_id!r} {side} does not parse: {exc}", source, start_line
                ) from exc
        records.append(
            IdentityRecord(
                id=rec_id,
                lhs=fields["lhs"],
                rhs=fields["rhs"],
                order=order,
                modulus=modulus,
                description=fields.get("desc", ""),
                ref=fields.get("ref", ""),
                quote=fields.get("quote", ""),
            )
        )
        fields = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "[identity]":
            flush(line_no)
            fields = {}
            start_line = line_no
            continue
        if "=" not in line:
            raise ManifestError(f"expected key=value, got {line!r}", source, line_no)
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _KNOWN_KEYS:
            raise ManifestError(f"unknown key {key!r}", source, line_no)
        if fields is None:
            raise ManifestError("key=value outside any [identity] record", source, line_no)
        if key in fields:
            raise ManifestError(f"duplicate key {key!r}", source, line_no)
        fields[key] = value.strip()
    flush(len(text.splitlines()) + 1)
    return tuple(records)


def load_manifest(path: str) -> Tuple[IdentityRecord, ...]:
    """Read and parse a manifest file."""
    with open(path, "r", encoding="ascii") as handle:
        return parse_manifest(handle.read(), source=path)


@lru_cache(maxsize=1)
def bundled_manifest() -> Tuple[IdentityRecord, ...]:
    """The identity manifest shipped with the package."""
    text = resources.files("podium").joinpath("data/identities.txt").read_text("ascii")
    return parse_manifest(text, source="bundled identities.txt")


# ----------------------------------------------------------------------
# suite running
# ----------------------------------------------------------------------

class Status:
    PASS = "pass"
    MISMATCH = "mismatch"
    ERROR = "error"


@dataclass(frozen=True)
class SuiteEntry:
    """Outcome of one checked identity or one oracle comparison."""

    name: str
    status: str
    order: int
    seconds: float
    detail: str = ""
    anchor: str = ""

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        out = f"{verdict}  {self.name}  order={self.order}"
        if self.detail:
            out += f"  {self.detail}"
        if self.anchor:
            out += f"  [{self.anchor}]"
        return out


@dataclass(frozen=True)
class SuiteReport:
    """Entries in manifest order plus summary counters.

    The body (:meth:`lines`) is deterministic for fixed inputs; wall
    times are kept out of it.
    """

    entries: Tuple[SuiteEntry, ...]

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def passed(self) -> int:
        return sum(1 for e in self.entries if e.passed)

    @property
    def all_pass(self) -> bool:
        return self.passed == self.total

    @property
    def seconds(self) -> float:
        return sum(e.seconds for e in self.entries)

    def lines(self, with_anchor: bool = True) -> list:
        body = []
        for entry in self.entries:
            if with_anchor:
                body.append(entry.line())
            else:
                stripped = SuiteEntry(
                    entry.name, entry.status, entry.order, 0.0, entry.detail
                )
                body.append(stripped.line())
        body.append(f"passed {self.passed}/{self.total}")
        return body


def run_suite(
    records: Optional[Sequence[IdentityRecord]] = None,
    order: Optional[int] = None,
) -> SuiteReport:
    """Check every record; evaluation errors are captured, never raised.

    With an order override each record runs at the larger of its own
    default and the override.  Entries keep manifest order.
    """
    if records is None:
        records = bundled_manifest()
    entries = []
    for rec in records:
        effective = rec.order if order is None else max(rec.order, order)
        started = time.perf_counter()
        try:
            lhs = dsl.parse(rec.lhs)
            rhs = dsl.parse(rec.rhs)
            mismatch = dsl.check(lhs, rhs, effective, rec.modulus)
        except ValueError as exc:
            entries.append(
                SuiteEntry(
                    rec.id,
                    Status.ERROR,
                    effective,
                    time.perf_counter() - started,
                    detail=str(exc),
                    anchor=rec.anchor,
                )
            )
            continue
        elapsed = time.perf_counter() - started
        if mismatch is None:
            entries.append(
                SuiteEntry(rec.id, Status.PASS, effective, elapsed, anchor=rec.anchor)
            )
        else:
            entries.append(
                SuiteEntry(
                    rec.id,
                    Status.MISMATCH,
                    effective,
                    elapsed,
                    detail=str(mismatch),
                    anchor=rec.anchor,
                )
            )
    return SuiteReport(tuple(entries))


def run_oracle_suite(
    caps: Optional[Dict[FunctionId, int]] = None,
    functions: Optional[Iterable[FunctionId]] = None,
) -> SuiteReport:
    """Compare enumeration against series coefficients for each function.

    Checks f(n) for every n up to the function's cap (or its override in
    `caps`).  Cap refusals surface as error entries, not exceptions.
    """
    caps = caps or {}
    entries = []
    for fid in functions if functions is not None else list(FunctionId):
        cap = caps.get(fid, DEFAULT_CAPS[fid])
        started = time.perf_counter()
        status = Status.PASS
        detail = ""
        try:
            series = gf_series(fid, cap)
            for n in range(cap + 1):
                counted = count_by_enumeration(fid, n, cap=cap)
                if counted != series[n]:
                    status = Status.MISMATCH
                    detail = f"n={n}: enumeration {counted} != series {series[n]}"
                    break
        except CapExceededError as exc:
            status = Status.ERROR
            detail = str(exc)
        entries.append(
            SuiteEntry(
                fid.value,
                status,
                cap,
                time.perf_counter() - started,
                detail=detail,
            )
        )
    return SuiteReport(tuple(entries))
