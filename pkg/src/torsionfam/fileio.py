"""Text file formats for complexes, presentations, knots, and ledgers.

All formats are line oriented: ``#`` starts a comment, blank lines are
skipped, every file opens with a type header carrying a format version
and closes with a literal ``end`` line (which catches truncation).
Matrix rows are whitespace-separated tokens in the canonical scalar
syntax (which itself contains no spaces); standalone scalar fields may
contain spaces, as the scalar grammar tolerates them.

The exact grammars are documented in docs/formats.md; serialization
and parsing round-trip bit for bit.
"""

from __future__ import annotations

from typing import Optional

from .complexes import BasedChainComplex
from .eta import ArgPairing, EtaProfile, JumpRecord
from .groupring import RepFamily, Word, parse_word
from .knots import KnotPresentation, SeifertMatrix
from .linalg import Matrix
from .ratfunc import RatFunc, format_ratfunc, parse_ratfunc
from .scalars import format_rational, parse_rational

__all__ = [
    "ParseError",
    "load_complex",
    "dump_complex",
    "load_presentation",
    "dump_presentation",
    "load_knot",
    "dump_knot",
    "load_ledger",
    "dump_ledger",
]

_ZERO = RatFunc.zero()


class ParseError(ValueError):
    """Parse failure with file, line, and offending token context."""

    def __init__(self, path: str, lineno: int, message: str, token: Optional[str] = None):
        self.path = path
        self.lineno = lineno
        self.token = token
        suffix = f" (token {token!r})" if token is not None else ""
        super().__init__(f"{path}:{lineno}: {message}{suffix}")


class _Reader:
    """Comment- and blank-skipping line cursor over a text document."""

    def __init__(self, text: str, path: str):
        self.path = path
        self.lines = text.splitlines()
        self.pos = 0

    def next_line(self) -> tuple[int, str]:
        while self.pos < len(self.lines):
            self.pos += 1
            raw = self.lines[self.pos - 1]
            stripped = raw.split("#", 1)[0].strip()
            if stripped:
                return self.pos, stripped
        raise ParseError(self.path, len(self.lines) + 1, "unexpected end of file")

    def peek_line(self) -> Optional[tuple[int, str]]:
        saved = self.pos
        try:
            out = self.next_line()
        except ParseError:
            self.pos = saved
            return None
        self.pos = saved
        return out

    def error(self, lineno: int, message: str, token: Optional[str] = None):
        raise ParseError(self.path, lineno, message, token)


def _expect_header(reader: _Reader, header: str) -> None:
    lineno, line = reader.next_line()
    if line != header:
        reader.error(lineno, f"expected header {header!r}", line.split()[0])


def _expect_end(reader: _Reader) -> None:
    lineno, line = reader.next_line()
    if line != "end":
        reader.error(lineno, "expected 'end'", line.split()[0])


def _read_int(reader: _Reader, lineno: int, tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        reader.error(lineno, "expected an integer", tok)


def _read_matrix(reader: _Reader, nrows: int, ncols: int) -> Matrix:
    rows = []
    for _ in range(nrows if ncols > 0 else 0):
        lineno, line = reader.next_line()
        toks = line.split()
        if len(toks) != ncols:
            reader.error(lineno, f"expected {ncols} entries, found {len(toks)}")
        row = []
        for tok in toks:
            try:
                row.append(parse_ratfunc(tok))
            except (ValueError, ZeroDivisionError):
                reader.error(lineno, "bad rational-function token", tok)
        rows.append(row)
    if ncols == 0 or nrows == 0:
        return Matrix.zeros(nrows, ncols, _ZERO)
    return Matrix(rows, ncols)


def _dump_matrix(mat: Matrix) -> list[str]:
    if mat.ncols == 0 or mat.nrows == 0:
        return []
    return [" ".join(format_ratfunc(e) for e in row) for row in mat.rows]


# -- complex files ---------------------------------------------------------


def load_complex(
    text: str, path: str = "<complex>"
) -> tuple[BasedChainComplex, Optional[list[Matrix]]]:
    """Parse a complex file; returns the complex and an optional pairing."""
    reader = _Reader(text, path)
    _expect_header(reader, "complex v1")
    lineno, line = reader.next_line()
    toks = line.split()
    if toks[0] != "ranks" or len(toks) < 2:
        reader.error(lineno, "expected 'ranks r0 r1 ...'", toks[0])
    ranks = [_read_int(reader, lineno, tok) for tok in toks[1:]]
    m = len(ranks) - 1
    boundaries = []
    for k in range(1, m + 1):
        lineno, line = reader.next_line()
        toks = line.split()
        if toks[:1] != ["boundary"] or len(toks) != 2:
            reader.error(lineno, f"expected 'boundary {k}'", toks[0])
        if _read_int(reader, lineno, toks[1]) != k:
            reader.error(lineno, f"boundaries must appear in order; expected {k}", toks[1])
        boundaries.append(_read_matrix(reader, ranks[k - 1], ranks[k]))
    pairing: Optional[list[Matrix]] = None
    nxt = reader.peek_line()
    if nxt is not None and nxt[1] == "duality":
        reader.next_line()
        pairing = []
        for i in range(m + 1):
            lineno, line = reader.next_line()
            toks = line.split()
            if toks[:1] != ["pairing"] or len(toks) != 2:
                reader.error(lineno, f"expected 'pairing {i}'", toks[0])
            if _read_int(reader, lineno, toks[1]) != i:
                reader.error(lineno, f"pairings must appear in order; expected {i}", toks[1])
            pairing.append(_read_matrix(reader, ranks[m - i], ranks[i]))
    _expect_end(reader)
    try:
        cplx = BasedChainComplex(ranks, boundaries)
    except ValueError as exc:
        raise ParseError(path, reader.pos, str(exc)) from exc
    return cplx, pairing


def dump_complex(
    cplx: BasedChainComplex, pairing: Optional[list[Matrix]] = None
) -> str:
    lines = ["complex v1", "ranks " + " ".join(str(r) for r in cplx.ranks)]
    for k in range(1, cplx.top_degree + 1):
        lines.append(f"boundary {k}")
        lines.extend(_dump_matrix(cplx.boundary(k)))
    if pairing is not None:
        lines.append("duality")
        for i, mat in enumerate(pairing):
            lines.append(f"pairing {i}")
            lines.extend(_dump_matrix(mat))
    lines.append("end")
    return "\n".join(lines) + "\n"


# -- presentation files ----------------------------------------------------


def load_presentation(
    text: str, path: str = "<presentation>"
) -> tuple[list[str], list[Word], RepFamily]:
    """Parse generator names, relators, and a representation family."""
    reader = _Reader(text, path)
    _expect_header(reader, "presentation v1")
    lineno, line = reader.next_line()
    toks = line.split()
    if toks[:1] != ["generators"] or len(toks) < 2:
        reader.error(lineno, "expected 'generators name ...'", toks[0])
    names = toks[1:]
    if len(set(names)) != len(names):
        reader.error(lineno, "duplicate generator names")
    relators = []
    while True:
        nxt = reader.peek_line()
        if nxt is None or not nxt[1].startswith("relator"):
            break
        lineno, line = reader.next_line()
        body = line[len("relator"):].strip()
        try:
            relators.append(parse_word(body, names))
        except ValueError as exc:
            raise ParseError(path, lineno, str(exc)) from exc
    lineno, line = reader.next_line()
    toks = line.split()
    if toks[:2] != ["rep", "rank"] or len(toks) < 3:
        reader.error(lineno, "expected 'rep rank d [unitary] [su]'", toks[0])
    rank = _read_int(reader, lineno, toks[2])
    flags = set(toks[3:])
    bad = flags - {"unitary", "su"}
    if bad:
        reader.error(lineno, "unknown representation flag", sorted(bad)[0])
    images = {}
    for _ in names:
        lineno, line = reader.next_line()
        toks = line.split()
        if toks[:1] != ["image"] or len(toks) != 2:
            reader.error(lineno, "expected 'image <generator>'", toks[0])
        if toks[1] not in names:
            reader.error(lineno, "unknown generator in image", toks[1])
        if toks[1] in images:
            reader.error(lineno, "duplicate image", toks[1])
        images[toks[1]] = _read_matrix(reader, rank, rank)
    _expect_end(reader)
    try:
        rho = RepFamily(
            rank=rank,
            images=tuple(images[name] for name in names),
            unitary="unitary" in flags,
            special="su" in flags,
        )
    except ValueError as exc:
        raise ParseError(path, reader.pos, str(exc)) from exc
    return names, relators, rho


def dump_presentation(names: list[str], relators: list[Word], rho: RepFamily) -> str:
    lines = ["presentation v1", "generators " + " ".join(names)]
    for rel in relators:
        lines.append("relator " + _word_with_names(rel, names))
    flags = ""
    if rho.unitary:
        flags += " unitary"
    if rho.special:
        flags += " su"
    lines.append(f"rep rank {rho.rank}{flags}")
    for g, name in enumerate(names):
        lines.append(f"image {name}")
        lines.extend(_dump_matrix(rho.image(g)))
    lines.append("end")
    return "\n".join(lines) + "\n"


def _word_with_names(w: Word, names: list[str]) -> str:
    parts = []
    for g, e in w.letters:
        parts.append(names[g] if e == 1 else f"{names[g]}^-1")
    return " ".join(parts)


# -- knot files -------------------------------------------------------------


def load_knot(
    text: str, path: str = "<knot>"
) -> tuple[KnotPresentation, Optional[SeifertMatrix], list[str]]:
    reader = _Reader(text, path)
    _expect_header(reader, "knot v1")
    lineno, line = reader.next_line()
    toks = line.split()
    if toks[:1] != ["generators"] or len(toks) < 2:
        reader.error(lineno, "expected 'generators name ...'", toks[0])
    names = toks[1:]
    relators = []
    seifert = None
    while True:
        lineno, line = reader.next_line()
        if line == "end":
            break
        if line.startswith("relator"):
            body = line[len("relator"):].strip()
            try:
                relators.append(parse_word(body, names))
            except ValueError as exc:
                raise ParseError(path, lineno, str(exc)) from exc
        elif line.startswith("seifert"):
            toks = line.split()
            if toks[:2] != ["seifert", "rank"] or len(toks) != 3:
                reader.error(lineno, "expected 'seifert rank n'", toks[0])
            n = _read_int(reader, lineno, toks[2])
            rows = []
            for _ in range(n):
                lineno, line = reader.next_line()
                toks = line.split()
                if len(toks) != n:
                    reader.error(lineno, f"expected {n} integers", line.split()[0])
                rows.append(tuple(_read_int(reader, lineno, tok) for tok in toks))
            seifert = SeifertMatrix(tuple(rows))
        else:
            reader.error(lineno, "expected 'relator', 'seifert' or 'end'", line.split()[0])
    try:
        pres = KnotPresentation(strands=len(names), wirtinger_relators=tuple(relators))
    except ValueError as exc:
        raise ParseError(path, reader.pos, str(exc)) from exc
    return pres, seifert, names


def dump_knot(
    pres: KnotPresentation, seifert: Optional[SeifertMatrix], names: Optional[list[str]] = None
) -> str:
    if names is None:
        names = [f"x{g}" for g in range(pres.strands)]
    lines = ["knot v1", "generators " + " ".join(names)]
    for rel in pres.wirtinger_relators:
        lines.append("relator " + _word_with_names(rel, names))
    if seifert is not None and seifert.size:
        lines.append(f"seifert rank {seifert.size}")
        for row in seifert.entries:
            lines.append(" ".join(str(e) for e in row))
    lines.append("end")
    return "\n".join(lines) + "\n"


# -- eta ledger files --------------------------------------------------------


def load_ledger(
    text: str, path: str = "<ledger>"
) -> tuple[EtaProfile, Optional[list[int]]]:
    reader = _Reader(text, path)
    _expect_header(reader, "eta-ledger v1")
    lineno, line = reader.next_line()
    toks = line.split()
    if toks[:1] != ["dimclass"] or len(toks) != 2:
        reader.error(lineno, "expected 'dimclass 1|3'", toks[0])
    dimclass = _read_int(reader, lineno, toks[1])
    lineno, line = reader.next_line()
    toks = line.split()
    if toks[:1] != ["base"] or len(toks) != 2:
        reader.error(lineno, "expected 'base <rational>'", toks[0])
    try:
        base = parse_rational(toks[1])
    except ValueError:
        reader.error(lineno, "bad rational", toks[1])
    jumps: list[JumpRecord] = []
    signs: Optional[list[int]] = None
    argpairs: dict[int, ArgPairing] = {}
    while True:
        lineno, line = reader.next_line()
        if line == "end":
            break
        toks = line.split()
        if toks[0] == "jump":
            fields = _keyed_fields(reader, lineno, toks[1:])
            if "t0" not in fields or "sigma_odd" not in fields:
                reader.error(lineno, "jump needs t0 and sigma_odd")
            try:
                t0 = parse_rational(fields["t0"][0])
            except ValueError:
                reader.error(lineno, "bad rational", fields["t0"][0])
            jumps.append(
                JumpRecord(
                    t0=t0,
                    sigma_odd=_read_int(reader, lineno, fields["sigma_odd"][0]),
                    sigma_even=_read_int(reader, lineno, fields["sigma_even"][0])
                    if "sigma_even" in fields
                    else 0,
                    nu=_read_int(reader, lineno, fields["nu"][0])
                    if "nu" in fields
                    else None,
                )
            )
        elif toks[0] == "signs":
            signs = []
            for tok in toks[1:]:
                if tok == "+":
                    signs.append(1)
                elif tok == "-":
                    signs.append(-1)
                else:
                    reader.error(lineno, "signs are '+' or '-'", tok)
        elif toks[0] == "argpair":
            fields = _keyed_fields(reader, lineno, toks[1:])
            if "interval" not in fields or "args" not in fields or "lcoeffs" not in fields:
                reader.error(lineno, "argpair needs interval, args and lcoeffs")
            idx = _read_int(reader, lineno, fields["interval"][0])
            try:
                args = tuple(parse_rational(tok) for tok in fields["args"])
            except ValueError:
                reader.error(lineno, "bad rational in args")
            ls = tuple(_read_int(reader, lineno, tok) for tok in fields["lcoeffs"])
            if len(args) != len(ls):
                reader.error(lineno, "args and lcoeffs must have equal length")
            try:
                argpairs[idx] = ArgPairing(args, ls, betti_b1=len(args))
            except ValueError as exc:
                raise ParseError(path, lineno, str(exc)) from exc
        else:
            reader.error(lineno, "expected 'jump', 'signs', 'argpair' or 'end'", toks[0])
    slope_data = None
    if argpairs:
        want = set(range(len(jumps) + 1))
        if set(argpairs) != want:
            raise ParseError(
                path, reader.pos, "argpair blocks must cover every interval exactly once"
            )
        slope_data = tuple(argpairs[i] for i in sorted(argpairs))
    try:
        profile = EtaProfile(
            dimension_class=dimclass,
            base_value=base,
            jumps=tuple(jumps),
            slope_data=slope_data,
        )
    except ValueError as exc:
        raise ParseError(path, reader.pos, str(exc)) from exc
    if signs is not None and len(signs) != profile.intervals:
        raise ParseError(
            path, reader.pos,
            f"need {profile.intervals} signs, got {len(signs)}",
        )
    return profile, signs


def _keyed_fields(reader: _Reader, lineno: int, toks: list[str]) -> dict[str, list[str]]:
    """Split ``key v1 v2 key2 v ...`` tokens into lists per key."""
    keys = {"t0", "sigma_odd", "sigma_even", "nu", "interval", "args", "lcoeffs"}
    fields: dict[str, list[str]] = {}
    current: Optional[str] = None
    for tok in toks:
        if tok in keys:
            if tok in fields:
                reader.error(lineno, "duplicate field", tok)
            current = tok
            fields[current] = []
        elif current is None:
            reader.error(lineno, "value before any field name", tok)
        else:
            fields[current].append(tok)
    for key, vals in fields.items():
        if not vals:
            reader.error(lineno, f"field {key} has no value")
    return fields


def dump_ledger(profile: EtaProfile, signs: Optional[list[int]] = None) -> str:
    lines = [
        "eta-ledger v1",
        f"dimclass {profile.dimension_class}",
        f"base {format_rational(profile.base_value)}",
    ]
    for rec in profile.jumps:
        line = f"jump t0 {format_rational(rec.t0)} sigma_odd {rec.sigma_odd}"
        if rec.sigma_even:
            line += f" sigma_even {rec.sigma_even}"
        if rec.nu is not None:
            line += f" nu {rec.nu}"
        lines.append(line)
    if signs is not None:
        lines.append("signs " + " ".join("+" if s == 1 else "-" for s in signs))
    if profile.slope_data is not None:
        for idx, pairing in enumerate(profile.slope_data):
            lines.append(
                f"argpair interval {idx} args "
                + " ".join(format_rational(a) for a in pairing.arg_coeffs)
                + " lcoeffs "
                + " ".join(str(c) for c in pairing.l_coeffs)
            )
    lines.append("end")
    return "\n".join(lines) + "\n"
