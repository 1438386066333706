"""Reading and writing Burmeister ``.cxt`` files.

Grammar (one item per line)::

    B
    <context name, may be blank; the line may be omitted>
    <number of objects>
    <number of attributes>
    <blank>
    <object names>
    <attribute names>
    <one row of '.'/'X' per object>

Only blank lines may follow the rows. Both ``\\n`` and ``\\r\\n`` endings
are accepted; :func:`write_cxt` always emits ``\\n`` and a blank name line.
"""

from __future__ import annotations

from .context import FormalContext


class CxtError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _count(lines: list[str], idx: int, what: str) -> int:
    if idx >= len(lines):
        raise CxtError(idx + 1, f"missing {what}")
    text = lines[idx].strip()
    if not (text.isascii() and text.isdigit()):
        raise CxtError(idx + 1, f"expected {what}, got {lines[idx]!r}")
    return int(text)


def parse_cxt(text: str) -> FormalContext:
    lines = [ln[:-1] if ln.endswith("\r") else ln for ln in text.split("\n")]
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0].strip() != "B":
        raise CxtError(1, "missing 'B' header")

    # without a name line the blank separator sits where the attribute count would be
    idx = 1 if len(lines) > 3 and not lines[3].strip() else 2
    n_obj = _count(lines, idx, "object count")
    n_att = _count(lines, idx + 1, "attribute count")
    idx += 2
    if idx >= len(lines) or lines[idx].strip():
        raise CxtError(idx + 1, "expected blank line after the counts")
    idx += 1

    def take(count: int, what: str) -> list[str]:
        nonlocal idx
        if idx + count > len(lines):
            raise CxtError(len(lines) + 1, f"file ends before all {count} {what} are read")
        got = lines[idx : idx + count]
        idx += count
        return got

    objects = take(n_obj, "object names")
    attributes = take(n_att, "attribute names")
    for names, kind, start in ((objects, "object", idx - n_att - n_obj), (attributes, "attribute", idx - n_att)):
        seen = {}
        for k, name in enumerate(names):
            if name in seen:
                raise CxtError(start + k + 1, f"duplicate {kind} name {name!r}")
            seen[name] = k

    first_row = idx
    rows = []
    for g, line in enumerate(take(n_obj, "incidence rows")):
        lineno = first_row + g + 1
        if len(line) != n_att:
            raise CxtError(lineno, f"row has length {len(line)}, expected {n_att}")
        r = 0
        for m, ch in enumerate(line):
            if ch == "X":
                r |= 1 << m
            elif ch != ".":
                raise CxtError(lineno, f"illegal character {ch!r} in column {m + 1}")
        rows.append(r)

    for k in range(idx, len(lines)):
        if lines[k].strip():
            raise CxtError(k + 1, "unexpected content after the incidence rows")

    return FormalContext(objects, attributes, rows)


def write_cxt(K: FormalContext) -> str:
    out = ["B", "", str(K.n_objects), str(K.n_attributes), ""]
    out.extend(K.objects)
    out.extend(K.attributes)
    m = K.n_attributes
    for g in range(K.n_objects):
        r = K.row(g)
        out.append("".join("X" if r >> a & 1 else "." for a in range(m)))
    return "\n".join(out) + "\n"


def read_cxt(path) -> FormalContext:
    with open(path, encoding="utf-8") as fh:
        return parse_cxt(fh.read())
