"""Catalog records: parsing, invariants and loading."""

import os
import shlex
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from ..errors import CatalogParseError, InvariantViolation
from ..exact.rational import parse_rational
from ..operator.params import DegreeTwoParams

STATUSES = ("proper", "duplicate", "sym3", "reducible")
KNOWN_KEYS = {"id", "aesz", "source", "sing", "a", "b", "c", "d", "e", "f", "exps", "n",
              "status", "printed", "note", "conflict", "riemann", "monodromy"}
PARAM_KEYS = ("a", "b", "c", "d", "e", "f")


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    aesz: str = ""
    source: str = ""
    num_singular: int = None
    params: DegreeTwoParams = None
    expected_n: tuple = ()
    status: str = "proper"
    printed: dict = field(default_factory=dict)
    note: str = ""
    conflict: str = ""
    riemann: str = ""
    monodromy_text: str = ""

    @property
    def has_operator(self):
        return self.params is not None

    def operator(self):
        return self.params.operator()

    @property
    def fingerprint(self):
        return abs(self.expected_n[0]), abs(self.expected_n[2])


def parse_factored(text):
    """Integers as printed in the tables: ``-(2)^11``, ``(2)^3(3)^6``, ``(3^6)``, ``(2)^4(3)`` or plain."""
    t = text.replace(" ", "")
    sign = 1
    if t.startswith("-"):
        sign, t = -1, t[1:]
    elif t.startswith("+"):
        t = t[1:]
    if not t.startswith("("):
        return sign * parse_rational(t)
    value = Fraction(1)
    i = 0
    while i < len(t):
        if t[i] != "(":
            raise ValueError(f"expected '(' in {text!r}")
        j = t.index(")", i)
        inner = t[i + 1:j]
        if "^" in inner:
            base, exp = inner.split("^")
        else:
            base, exp = inner, "1"
        i = j + 1
        if i < len(t) and t[i] == "^":
            k = i + 1
            while k < len(t) and t[k].isdigit():
                k += 1
            if k == i + 1:
                raise ValueError(f"missing exponent in {text!r}")
            exp = str(int(exp) * int(t[i + 1:k]))
            i = k
        value *= parse_rational(base) ** int(exp)
    return sign * value


def _rationals(text):
    return tuple(parse_rational(v) for v in text.split(","))


def parse_record(line, line_no=None):
    """One catalog line to a :class:`CatalogEntry` (invariants checked)."""
    try:
        tokens = shlex.split(line)
    except ValueError as exc:
        raise CatalogParseError(f"bad quoting: {exc}", None, line_no) from None
    fields = {}
    for tok in tokens:
        if "=" not in tok:
            raise CatalogParseError(f"field without '=': {tok!r}", fields.get("id"), line_no)
        key, value = tok.split("=", 1)
        if key not in KNOWN_KEYS:
            raise CatalogParseError(f"unknown field {key!r}", fields.get("id"), line_no)
        if key in fields:
            raise CatalogParseError(f"repeated field {key!r}", fields.get("id"), line_no)
        fields[key] = value
    row = fields.get("id")
    if not row:
        raise CatalogParseError("record without id", None, line_no)
    try:
        status = fields.get("status", "proper")
        if status not in STATUSES:
            raise ValueError(f"unknown status {status!r}")
        n = _rationals(fields["n"]) if "n" in fields else ()
        if n and len(n) != 3:
            raise ValueError("n needs three values")
        exps = _rationals(fields["exps"]) if "exps" in fields else None
        if exps is not None and len(exps) != 4:
            raise ValueError("exps needs four values")
        present = [k for k in PARAM_KEYS if k in fields]
        if present and len(present) != 6:
            raise ValueError(f"incomplete parameters: have {','.join(present)}")
        params = None
        if present:
            vals = {k: parse_rational(fields[k]) for k in "abcde"}
            vals["f"] = parse_factored(fields["f"])
            params = DegreeTwoParams(**vals, exponents=exps, sign_convention="minus")
        sing = int(fields["sing"]) if "sing" in fields else None
        printed = {}
        if "printed" in fields:
            for item in fields["printed"].split(","):
                k, v = item.split(":", 1)
                printed[k] = v
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        raise CatalogParseError(str(exc), row, line_no) from None
    entry = CatalogEntry(row, fields.get("aesz", ""), fields.get("source", ""), sing, params, n,
                         status, printed, fields.get("note", ""), fields.get("conflict", ""),
                         fields.get("riemann", ""),
                         fields.get("monodromy", ""))
    check_invariants(entry)
    return entry


def check_invariants(entry):
    p = entry.params
    if p is None:
        return
    if p.b != 2 * (p.c - p.d):
        raise InvariantViolation("b != 2(c - d)", entry.id, {"b": p.b, "c": p.c, "d": p.d})
    if p.f != 0 and p.sigma_delta() is None:
        raise InvariantViolation("exponents admit no pairing", entry.id, {"exps": p.exponents})
    if entry.num_singular not in (None, 3, 4):
        raise InvariantViolation("number of singular points must be 3 or 4", entry.id,
                                 {"sing": entry.num_singular})


def parse_catalog(text):
    entries, seen = [], set()
    for no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        entry = parse_record(line, no)
        if entry.id in seen:
            raise CatalogParseError("duplicate id", entry.id, no)
        seen.add(entry.id)
        entries.append(entry)
    return entries


def default_catalog_path():
    env = os.environ.get("CYOP_CATALOG")
    if env:
        return env
    return str(resources.files("cyop.catalog").joinpath("data", "catalog.txt"))


def load_catalog(path=None):
    """Load and check a catalog file; the packaged one by default."""
    path = default_catalog_path() if path is None else path
    with open(path, encoding="utf-8") as fh:
        return parse_catalog(fh.read())


def get_entry(entry_id, entries=None):
    entries = load_catalog() if entries is None else entries
    for e in entries:
        if e.id == entry_id:
            return e
    raise KeyError(f"no catalog entry {entry_id!r}")
