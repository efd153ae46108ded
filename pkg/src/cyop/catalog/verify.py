"""Recompute catalog rows and compare with the tabulated instanton numbers."""

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..classify import classify_order4
from ..errors import CyopError
from ..exact.rational import format_rational
from ..frobenius import holomorphic_solution, instanton_report
from ..operator.cy import satisfies_cy
from ..transforms.registry import build_named
from ..transforms.series_ops import hadamard
from .entries import load_catalog

SOURCE_CHECK_ORDER = 10


def source_series(source, order):
    """The series a source string describes, or None for 'Original' and friends.

    ``X*y`` is the Hadamard product of the two named solutions, ``tilde:k`` the
    tilde operator's solution, ``(I*beta)*`` its quadratic transform, ``DoD``
    the solution of D.
    """
    if source.startswith("tilde:"):
        return holomorphic_solution(build_named(source).op, order)
    if source == "(I*beta)*":
        return holomorphic_solution(build_named("star:I*beta").op, order)
    if source == "DoD":
        return holomorphic_solution(build_named("D").op, order)
    if "*" in source:
        left, right = source.split("*", 1)
        if right in ("a", "b", "c", "d", "f", "g"):
            right = "bzb:" + right
        s = holomorphic_solution(build_named(left).op, order)
        t = holomorphic_solution(build_named(right).op, order)
        return hadamard(s, t)
    return None


def source_check(entry, order=SOURCE_CHECK_ORDER):
    """True/False if the entry's operator annihilates its source series; None without a source."""
    s = source_series(entry.source, order)
    if s is None:
        return None
    return entry.operator().apply(s).is_zero()


@dataclass(frozen=True)
class VerificationOutcome:
    id: str
    computed_n: tuple
    match: str  # exact | mismatch | flagged
    classification: frozenset = frozenset()
    notes: tuple = ()
    expected_n: tuple = ()
    seconds: float = 0.0
    status: str = "proper"
    source_ok: bool = None


def verify_entry(entry, order=12, check_source=True):
    """Build, check Q = 0, compute n_1..n_3, classify and compare.

    Errors inside the pipeline are reported as a flagged outcome.
    """
    if order < 8:
        raise ValueError("order must be at least 8")
    t0 = time.perf_counter()
    notes = []
    computed, labels, src = (), frozenset(), None
    if entry.params is None:
        return VerificationOutcome(entry.id, (), "flagged", frozenset(), ("no parameters",),
                                   entry.expected_n, 0.0, entry.status)
    try:
        op = entry.operator()
        if not satisfies_cy(op):
            notes.append("Q does not vanish")
        labels = classify_order4(entry.params)
        computed = tuple(instanton_report(op, order, 3).n)
        if check_source:
            src = source_check(entry)
            if src is False:
                notes.append(f"source {entry.source} not annihilated")
    except (CyopError, ArithmeticError, ValueError) as exc:
        notes.append(f"pipeline error: {exc}")
        match = "flagged"
    else:
        if computed == tuple(entry.expected_n) and not notes:
            match = "exact"
        elif entry.conflict and not notes:
            match = "flagged"
        else:
            match = "mismatch"
    if entry.conflict:
        notes.append(entry.conflict)
    if entry.printed:
        fixed = ",".join(f"{k}:{v}" for k, v in entry.printed.items())
        notes.append(f"corrected from printed {fixed}")
    if entry.status == "reducible":
        notes.append("reducible: " + (entry.note or "composition of lower-order operators"))
    elif entry.note and entry.note not in notes:
        notes.append(entry.note)
    return VerificationOutcome(entry.id, computed, match, labels, tuple(notes), entry.expected_n,
                               time.perf_counter() - t0, entry.status, src)


def _verify_one(args):
    entry, order, check_source = args
    return verify_entry(entry, order, check_source)


def verify_all(entries=None, order=12, jobs=1, check_source=True):
    entries = load_catalog() if entries is None else entries
    work = [(e, order, check_source) for e in entries]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_one, work))
    return [_verify_one(w) for w in work]


def fingerprint_lookup(n1_abs, n3_abs, entries=None):
    """Ids whose (|n1|, |n3|) equals the given pair."""
    entries = load_catalog() if entries is None else entries
    key = (abs(n1_abs), abs(n3_abs))
    return [e.id for e in entries if e.expected_n and e.fingerprint == key]


def _ns(values):
    return ",".join(format_rational(v) for v in values)


HEADER = ("id", "status", "expected", "computed", "match", "components", "seconds", "notes")


def _rows(outcomes, timing):
    for o in outcomes:
        labels = "+".join(sorted(str(lab) for lab in o.classification))
        secs = f"{o.seconds:.3f}" if timing else ""
        yield (o.id, o.status, _ns(o.expected_n), _ns(o.computed_n), o.match, labels, secs,
               " | ".join(o.notes))


def export_report(outcomes, fmt="text", timing=True):
    """Aligned text table or ';'-separated CSV of verification outcomes."""
    header = HEADER if timing else tuple(h for h in HEADER if h != "seconds")
    rows = []
    for r in _rows(outcomes, timing):
        rows.append(r if timing else r[:6] + r[7:])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, delimiter=";", lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    widths = [len(h) for h in header]
    for r in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(header, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


@dataclass
class Summary:
    exact: list = field(default_factory=list)
    flagged: list = field(default_factory=list)
    mismatch: list = field(default_factory=list)


def summarize(outcomes, statuses=("proper",)):
    s = Summary()
    for o in outcomes:
        if o.status in statuses:
            getattr(s, o.match).append(o.id)
    return s
