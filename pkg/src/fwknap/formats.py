"""File formats: DIMACS CNF in and out, and the text instance format.

Instance files carry every coefficient as a decimal string (reduction
coefficients overflow any machine word by design) plus a sha256 checksum
of the payload, so a corrupted digit fails loudly on read.
"""

from __future__ import annotations

import hashlib
import re
from typing import Optional

from .core import Clause, CnfFormula, KnapsackInstance, Literal

INSTANCE_MAGIC = "fwknap-instance"
INSTANCE_VERSION = 1

_DECIMAL = re.compile(r"^(0|[1-9][0-9]*)$")


class FormatError(ValueError):
    """Malformed DIMACS or instance file."""


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF with at most three distinct literals per clause."""
    k: Optional[int] = None
    m: Optional[int] = None
    clauses: list[Clause] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if k is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"line {lineno}: malformed header {line!r}")
            try:
                k, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer header fields") from None
            if k < 0 or m < 0:
                raise FormatError(f"line {lineno}: negative header fields")
            continue
        if k is None:
            raise FormatError(f"line {lineno}: clause before 'p cnf' header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise FormatError(f"line {lineno}: bad token {token!r}") from None
            if lit == 0:
                clauses.append(_close_clause(pending, k, lineno))
                pending = []
            else:
                if abs(lit) > k:
                    raise FormatError(
                        f"line {lineno}: variable {abs(lit)} exceeds k={k}"
                    )
                pending.append(lit)
    if k is None:
        raise FormatError("missing 'p cnf' header")
    if pending:
        raise FormatError("unterminated clause at end of input")
    if len(clauses) != m:
        raise FormatError(f"header declares {m} clauses, found {len(clauses)}")
    return CnfFormula(k, clauses)


def _close_clause(pending: list[int], k: int, lineno: int) -> Clause:
    if not pending:
        raise FormatError(f"line {lineno}: empty clause")
    literals = [Literal(abs(v), v > 0) for v in pending]
    try:
        clause = Clause(literals)
    except ValueError as exc:
        raise FormatError(f"line {lineno}: {exc}") from None
    return clause


def write_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.k} {f.m}"]
    for clause in f.clauses:
        lines.append(
            " ".join(str(l.index if l.positive else -l.index) for l in clause) + " 0"
        )
    return "\n".join(lines) + "\n"


def _payload(inst: KnapsackInstance, meta: dict) -> list[str]:
    lines = [f"{INSTANCE_MAGIC} {INSTANCE_VERSION}", f"n {inst.n}"]
    for key in ("k", "m", "beta"):
        if meta.get(key) is not None:
            lines.append(f"{key} {meta[key]}")
    lines.append(f"capacity {inst.capacity}")
    lines.append(f"bound {inst.bound}")
    lines.append("weights " + " ".join(str(w) for w in inst.weights))
    lines.append("values " + " ".join(str(v) for v in inst.values))
    return lines


def write_instance(inst: KnapsackInstance, meta: Optional[dict] = None) -> str:
    lines = _payload(inst, meta or {})
    digest = hashlib.sha256("\n".join(lines).encode()).hexdigest()
    lines.append(f"checksum {digest}")
    return "\n".join(lines) + "\n"


def _decimal(token: str, what: str) -> int:
    if not _DECIMAL.match(token):
        raise FormatError(f"malformed decimal in {what}: {token!r}")
    return int(token)


def read_instance(text: str) -> tuple[KnapsackInstance, dict]:
    """Inverse of write_instance; checks the checksum and all lengths."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith(INSTANCE_MAGIC):
        raise FormatError("not an instance file")
    version = lines[0].split()[1:]
    if version != [str(INSTANCE_VERSION)]:
        raise FormatError(f"unsupported instance version {version}")
    if not lines[-1].startswith("checksum "):
        raise FormatError("missing checksum line")
    claimed = lines[-1].split()[1]
    digest = hashlib.sha256("\n".join(lines[:-1]).encode()).hexdigest()
    if claimed != digest:
        raise FormatError("checksum mismatch: file corrupted or edited")

    fields: dict[str, str] = {}
    for line in lines[1:-1]:
        key, _, rest = line.partition(" ")
        if key in fields:
            raise FormatError(f"duplicate field {key!r}")
        fields[key] = rest
    for required in ("n", "capacity", "bound", "weights", "values"):
        if required not in fields:
            raise FormatError(f"missing field {required!r}")

    n = _decimal(fields["n"], "n")
    weights = tuple(_decimal(t, "weights") for t in fields["weights"].split())
    values = tuple(_decimal(t, "values") for t in fields["values"].split())
    if len(weights) != n:
        raise FormatError(f"weights length {len(weights)} != n={n}")
    if len(values) != n:
        raise FormatError(f"values length {len(values)} != n={n}")
    inst = KnapsackInstance(
        weights, _decimal(fields["capacity"], "capacity"),
        values, _decimal(fields["bound"], "bound"),
    )
    meta = {
        key: _decimal(fields[key], key) if key in fields else None
        for key in ("k", "m", "beta")
    }
    return inst, meta
