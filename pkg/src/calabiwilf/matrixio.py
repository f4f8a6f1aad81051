"""Matrix serialization: structured JSON records and a plain text grid.

Structured: one JSON object per line, ``{"q": .., "n": .., "k": .., "rows": [[..], ..]}``.
Text: a header line ``# q=7 n=10 k=5 pivots=6 7 8 9 10`` (1-based pivots)
followed by one row per line, entries space-separated. Blocks are separated
by a blank line.
"""

from __future__ import annotations

import json

from .echelon import EchelonMatrix, pivots_of
from .errors import InvalidMatrix


def to_record(M: EchelonMatrix) -> dict:
    return {"q": M.q, "n": M.n, "k": M.k, "rows": M.rows()}


def from_record(rec: dict) -> EchelonMatrix:
    try:
        q, n, k, rows = int(rec["q"]), int(rec["n"]), int(rec["k"]), rec["rows"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidMatrix(f"bad matrix record: {exc}") from exc
    if len(rows) != k:
        raise InvalidMatrix(f"record says k={k} but has {len(rows)} rows")
    return EchelonMatrix(rows, q, n)


def to_json(M: EchelonMatrix) -> str:
    return json.dumps(to_record(M))


def parse_json_lines(text: str) -> list[EchelonMatrix]:
    return [from_record(json.loads(line)) for line in text.splitlines() if line.strip()]


def to_text(M: EchelonMatrix) -> str:
    piv = " ".join(str(p) for p in pivots_of(M))
    lines = [f"# q={M.q} n={M.n} k={M.k} pivots={piv}".rstrip()]
    lines += [" ".join(str(v) for v in row) for row in M.rows()]
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> list[EchelonMatrix]:
    out = []
    for block in text.strip().split("\n\n"):
        lines = [ln.strip() for ln in block.strip().splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("#"):
            raise InvalidMatrix("text block must start with a '# q=.. n=.. k=..' header")
        fields = {}
        for tok in lines[0][1:].split():
            if "=" in tok:
                key, _, val = tok.partition("=")
                fields[key] = val
        try:
            q, n, k = int(fields["q"]), int(fields["n"]), int(fields["k"])
        except (KeyError, ValueError) as exc:
            raise InvalidMatrix(f"bad header {lines[0]!r}") from exc
        rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
        if len(rows) != k:
            raise InvalidMatrix(f"header says k={k} but block has {len(rows)} rows")
        out.append(EchelonMatrix(rows, q, n))
    return out
