"""The line-oriented code file format.

A file holds one code:

    # anything after a hash is a comment
    q 2
    n 7
    k 4
    d 3          <- optional
    G
    1 0 0 0 1 1 0
    ...          <- k rows of n space-separated residues

The matrix is the generator in the file's own column order; it may be any
full-rank matrix, not necessarily systematic.  ``format_code_file`` writes
the byte-stable canonical form: headers in the order above, single spaces,
no comments.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import LinearCode


class ParseError(ValueError):
    """A malformed code file; carries the 1-based offending line."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class CodeFileData:
    """Parsed contents: parameters plus the generator in file coordinates."""

    q: int
    n: int
    k: int
    d: int | None
    rows: tuple[tuple[int, ...], ...]

    def to_code(self) -> LinearCode:
        return LinearCode.from_generator(self.q, self.rows, self.d)


def parse_code_file(text: str) -> CodeFileData:
    header: dict[str, int] = {}
    rows: list[tuple[int, ...]] = []
    in_matrix = False
    matrix_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not in_matrix:
            parts = line.split()
            if parts[0] == "G":
                if len(parts) != 1:
                    raise ParseError(lineno, "the G marker takes no arguments")
                for key in ("q", "n", "k"):
                    if key not in header:
                        raise ParseError(lineno, f"missing header '{key}' before G")
                in_matrix = True
                matrix_line = lineno
                continue
            if parts[0] not in ("q", "n", "k", "d"):
                raise ParseError(lineno, f"unknown header '{parts[0]}'")
            if len(parts) != 2:
                raise ParseError(lineno, f"header '{parts[0]}' needs exactly one integer")
            if parts[0] in header:
                raise ParseError(lineno, f"duplicate header '{parts[0]}'")
            try:
                header[parts[0]] = int(parts[1])
            except ValueError:
                raise ParseError(lineno, f"header '{parts[0]}' is not an integer") from None
        else:
            if len(rows) == header["k"]:
                raise ParseError(lineno, f"more than k = {header['k']} matrix rows")
            try:
                row = tuple(int(tok) for tok in line.split())
            except ValueError:
                raise ParseError(lineno, "matrix rows must be space-separated integers") from None
            if len(row) != header["n"]:
                raise ParseError(lineno, f"row has {len(row)} entries, expected n = {header['n']}")
            for e in row:
                if not 0 <= e < header["q"]:
                    raise ParseError(lineno, f"entry {e} outside GF({header['q']})")
            rows.append(row)
    if not in_matrix:
        raise ParseError(len(text.splitlines()) or 1, "no G section found")
    if len(rows) != header["k"]:
        raise ParseError(matrix_line, f"expected k = {header['k']} matrix rows, found {len(rows)}")
    if not 1 <= header["k"] < header["n"]:
        raise ParseError(matrix_line, f"need 1 <= k < n, got k={header['k']}, n={header['n']}")
    d = header.get("d")
    if d is not None and d < 1:
        raise ParseError(matrix_line, "d must be positive")
    return CodeFileData(header["q"], header["n"], header["k"], d, tuple(rows))


def format_code_file(data: CodeFileData, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"q {data.q}", f"n {data.n}", f"k {data.k}"]
    if data.d is not None:
        lines.append(f"d {data.d}")
    lines.append("G")
    lines += [" ".join(str(e) for e in row) for row in data.rows]
    return "\n".join(lines) + "\n"


def code_to_file_data(code: LinearCode) -> CodeFileData:
    """Express a code as file data in its original column order."""
    rows = tuple(code.perm.unapply(row) for row in code.gen.rows)
    return CodeFileData(code.field.q, code.n, code.k, code.d, rows)


def load_code_file(path: str) -> CodeFileData:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code_file(fh.read())
