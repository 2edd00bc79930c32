"""Reading and writing sparse binary matrices in the alist interchange format.

Layout: a header line "n m" (columns then rows), the maximum column and
row degrees, per-column and per-row degree lists, then one line of 1-based
row positions per column and one line of 1-based column positions per row,
each padded with zeros up to the maximum degree.  The reader accepts both
padded and unpadded position lines.
"""

from __future__ import annotations

from .model import BinaryParityCheck


def dumps_alist(H: BinaryParityCheck) -> str:
    cols: list[list[int]] = [[] for _ in range(H.col_count)]
    rows: list[list[int]] = [[] for _ in range(H.row_count)]
    for r, c in sorted(H.support):
        rows[r].append(c + 1)
        cols[c].append(r + 1)
    max_col = max((len(c) for c in cols), default=0)
    max_row = max((len(r) for r in rows), default=0)

    def padded(entries: list[int], width: int) -> str:
        return " ".join(str(v) for v in entries + [0] * (width - len(entries)))

    lines = [
        f"{H.col_count} {H.row_count}",
        f"{max_col} {max_row}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(r)) for r in rows),
    ]
    lines.extend(padded(sorted(c), max_col) for c in cols)
    lines.extend(padded(sorted(r), max_row) for r in rows)
    return "\n".join(lines) + "\n"


def write_alist(path, H: BinaryParityCheck) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_alist(H))


def loads_alist(text: str) -> BinaryParityCheck:
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if len(lines) < 4:
        raise ValueError("alist data too short for a header")

    def ints(row: list[str]) -> list[int]:
        try:
            return [int(tok) for tok in row]
        except ValueError as exc:
            raise ValueError(f"non-integer alist token in {row!r}") from exc

    (n, m), _ = ints(lines[0]), ints(lines[1])  # maximum degrees are redundant
    if n < 1 or m < 1:
        raise ValueError("alist header must declare positive dimensions")
    col_deg = ints(lines[2])
    row_deg = ints(lines[3])
    if len(col_deg) != n or len(row_deg) != m:
        raise ValueError("degree lists do not match the declared dimensions")
    if len(lines) < 4 + n + m:
        raise ValueError("alist data truncated")

    support = set()
    for c in range(n):
        live = [v for v in ints(lines[4 + c]) if v != 0]
        if len(live) != col_deg[c]:
            raise ValueError(f"column {c} lists {len(live)} rows, declared {col_deg[c]}")
        for r in live:
            if not 1 <= r <= m:
                raise ValueError(f"row index {r} outside 1..{m}")
            support.add((r - 1, c))
    for r in range(m):
        live = [v for v in ints(lines[4 + n + r]) if v != 0]
        if len(live) != row_deg[r]:
            raise ValueError(f"row {r} lists {len(live)} columns, declared {row_deg[r]}")
        for c in live:
            if not 1 <= c <= n:
                raise ValueError(f"column index {c} outside 1..{n}")
            if (r, c - 1) not in support:
                raise ValueError(f"row list names ({r}, {c - 1}) missing from column lists")
    if sum(col_deg) != len(support):
        raise ValueError("declared degrees do not match the position lists")
    return BinaryParityCheck(m, n, frozenset(support))


def read_alist(path) -> BinaryParityCheck:
    with open(path) as fh:
        return loads_alist(fh.read())
