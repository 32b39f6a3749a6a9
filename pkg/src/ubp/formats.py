"""Text and JSON formats for set partitions, diagrams, vector partitions,
uniform tableaux, symmetric functions and matrices."""
import json
import re
from fractions import Fraction

from .combinatorics import (
    check_set_partition, display_vp, enumerate_Ik, is_partition, set_partition,
    trim, type_up, vector_partition, vp_size,
)
from .diagram import Diagram
from .repmod import UniformTableau

DIGITS = "123456789abcdefghijklmnopqrstuvwxyz"


class ParseError(ValueError):
    pass


def parse_elements(text: str) -> list:
    """'257' -> [2, 5, 7]; '9,10,11' or '9 10 11' -> [9, 10, 11].
    Without separators each character is one element (1-9, then a-z for
    10-35)."""
    text = text.strip()
    if not text:
        return []
    if re.search(r"[,\s]", text):
        out = []
        for tok in re.split(r"[,\s]+", text):
            if not tok:
                continue
            if not tok.isdigit() or int(tok) == 0:
                raise ParseError(f"bad element {tok!r}")
            out.append(int(tok))
        return out
    out = []
    for ch in text.lower():
        if ch not in DIGITS:
            raise ParseError(f"bad element {ch!r} in {text!r}")
        out.append(DIGITS.index(ch) + 1)
    return out


def format_elements(block, k: int) -> str:
    if k <= len(DIGITS):
        return "".join(DIGITS[x - 1] for x in block)
    return ",".join(map(str, block))


# -- set partitions -----------------------------------------------------------

def parse_setpartition(text: str, k: int | None = None) -> tuple:
    text = text.strip()
    if text in ("", "∅", "{}"):
        pi = ()
    else:
        try:
            pi = set_partition(parse_elements(part) for part in text.split("|"))
        except ValueError as exc:
            raise ParseError(f"set partition {text!r}: {exc}") from None
    if k is None:
        k = max((x for b in pi for x in b), default=0)
    try:
        check_set_partition(pi, k)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return pi


def format_setpartition(pi) -> str:
    if not pi:
        return "∅"
    k = sum(len(b) for b in pi)
    if k <= 9:
        return "|".join("".join(map(str, b)) for b in pi)
    return "|".join(",".join(map(str, b)) for b in pi)


# -- diagrams -----------------------------------------------------------------

_TOKEN = re.compile(r"^(\d+)('?)$")


def parse_diagram(text: str, k: int | None = None) -> Diagram:
    """'1,4,2',3' | 2,1' | ...' with primes marking the bottom row."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    blocks = []
    if body.strip():
        for raw in body.split("|"):
            top, bot = [], []
            toks = [t for t in re.split(r"[,\s]+", raw.strip()) if t]
            if not toks:
                raise ParseError(f"empty block in diagram {text!r}")
            for tok in toks:
                m = _TOKEN.match(tok)
                if not m or int(m.group(1)) == 0:
                    raise ParseError(f"bad token {tok!r} in block {raw.strip()!r}")
                (bot if m.group(2) else top).append(int(m.group(1)))
            if len(top) != len(bot):
                raise ParseError(f"block {raw.strip()!r} is not uniform: "
                                 f"{len(top)} top vs {len(bot)} bottom points")
            blocks.append((top, bot))
    if k is None:
        k = max((x for t, b in blocks for x in t + b), default=0)
    try:
        return Diagram.from_blocks(k, blocks)
    except ValueError as exc:
        raise ParseError(f"diagram {text!r}: {exc}") from None


def format_diagram(d: Diagram) -> str:
    return str(d)


def diagram_json(d: Diagram) -> dict:
    return {"k": d.k, "diagram": str(d),
            "blocks": [[list(t), list(b)] for t, b in d.blocks]}


# -- partitions and vector partitions ----------------------------------------

def parse_partition(text: str) -> tuple:
    """'[2,1]', '2,1', '2 1' or '' (empty)."""
    text = text.strip()
    if text.startswith("["):
        try:
            parts = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad partition {text!r}: {exc}") from None
    else:
        parts = [int(t) for t in re.split(r"[,\s]+", text) if t] if re.fullmatch(
            r"[\d,\s]*", text) else None
        if parts is None:
            raise ParseError(f"bad partition {text!r}")
    if not isinstance(parts, list) or not is_partition(parts):
        raise ParseError(f"{text!r} is not a nonincreasing list of positive integers")
    return tuple(parts)


def parse_vp(text: str, k: int | None = None) -> tuple:
    """JSON array of arrays: '[[2,1],[],[3,1,1]]'."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad vector partition {text!r}: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise ParseError(f"vector partition must be a JSON array of arrays: {text!r}")
    for c in data:
        if not is_partition(c):
            raise ParseError(f"component {c} of {text!r} is not a partition")
    comps = [tuple(c) for c in data]
    size = vp_size(comps)
    if k is None:
        k = size
    if size != k:
        raise ParseError(f"{text} has weight {size}, expected {k}")
    try:
        return vector_partition(comps, k)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def vp_to_json(vp) -> list:
    return [list(c) for c in trim(vp)]


def format_vp(vp) -> str:
    return json.dumps(vp_to_json(vp), separators=(",", ":"))


# -- uniform tableaux ---------------------------------------------------------

_CELL = re.compile(r"\{([^{}]*)\}")


def parse_tableau(text: str, k: int | None = None) -> UniformTableau:
    """Components separated by ';' (component i holds blocks of size i),
    rows separated by '/' listed from the top row down (French drawing: the
    longest row is last), cells written as brace-wrapped element lists."""
    comps = []
    for ci, comp in enumerate(text.split(";"), start=1):
        comp = comp.strip()
        if comp in ("", "∅", "-"):
            comps.append(())
            continue
        rows = []
        for row in comp.split("/"):
            row = row.strip()
            cells = _CELL.findall(row)
            leftover = _CELL.sub("", row).replace(",", "").strip()
            if leftover or not cells:
                raise ParseError(f"bad row {row!r} in component {ci}")
            blocks = []
            for cell in cells:
                elems = parse_elements(cell)
                if len(elems) != ci:
                    raise ParseError(f"cell {{{cell}}} in component {ci} must have {ci} elements")
                blocks.append(tuple(sorted(elems)))
            rows.append(tuple(blocks))
        rows.reverse()
        lengths = [len(r) for r in rows]
        if lengths != sorted(lengths, reverse=True):
            raise ParseError(f"component {ci} rows {lengths} (bottom first) are not a partition")
        comps.append(tuple(rows))
    all_blocks = [blk for t in comps for row in t for blk in row]
    if k is None:
        k = max((x for blk in all_blocks for x in blk), default=0)
    if len(comps) > k:
        if any(comps[k:]):
            raise ParseError(f"more than {k} components")
        comps = comps[:k]
    comps += [()] * (k - len(comps))
    try:
        gamma = set_partition(all_blocks)
        check_set_partition(gamma, k)
    except ValueError as exc:
        raise ParseError(f"tableau entries: {exc}") from None
    shape = tuple(tuple(len(r) for r in t) for t in comps)
    return UniformTableau(shape, tuple(comps))


def format_tableau(S: UniformTableau) -> str:
    k = S.k
    comps = list(S.tableaux)
    while comps and not comps[-1]:
        comps.pop()
    out = []
    for t in comps:
        if not t:
            out.append("∅")
            continue
        rows = ["{" + "},{".join(format_elements(blk, k) for blk in row) + "}"
                for row in reversed(t)]
        out.append("/".join(rows))
    return " ; ".join(out)


def module_vector_json(v) -> list:
    return [{"tableau": format_tableau(S), "coefficient": c}
            for S, c in sorted(v.items(), key=lambda kv: kv[0].tableaux)]


def format_module_vector(v) -> str:
    if not v:
        return "0"
    parts = []
    for S, c in sorted(v.items(), key=lambda kv: kv[0].tableaux):
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{abs(c)} "
        parts.append(f"{sign} {mag}({format_tableau(S)})")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


# -- symmetric functions and matrices ----------------------------------------

def multisym_json(f) -> list:
    return [{"vector_partition": vp_to_json(key), "numerator": c.numerator,
             "denominator": c.denominator} for key, c in sorted(f.items())]


def format_multisym(f, basis: str = "p") -> str:
    if not f:
        return "0"
    parts = []
    for key, c in sorted(f.items(), key=lambda kv: (vp_size(kv[0]), kv[0])):
        parts.append(f"{Fraction(c)} {basis}{format_vp(key)}")
    return "\n".join(parts)


def matrix_json(k: int, entries) -> dict:
    return {"k": k, "order": [vp_to_json(v) for v in enumerate_Ik(k)],
            "entries": [[int(x) if Fraction(x).denominator == 1 else str(x) for x in row]
                        for row in entries]}


def format_matrix(k: int, entries) -> str:
    """Aligned table with rules between blocks of equal type."""
    order = enumerate_Ik(k)
    labels = [display_vp(v) for v in order]
    cells = [[str(x) for x in row] for row in entries]
    lw = max((len(s) for s in labels), default=0)
    cw = max([len(s) for row in cells for s in row] + [1])
    breaks = {i for i in range(1, len(order)) if type_up(order[i]) != type_up(order[i - 1])}
    lines = []
    for i, (lab, row) in enumerate(zip(labels, cells)):
        if i in breaks:
            lines.append("-" * lw + "-+" + "".join(
                ("+" if j in breaks else "") + "-" * (cw + 1) for j in range(len(row))))
        body = "".join(("|" if j in breaks else "") + x.rjust(cw + 1) for j, x in enumerate(row))
        lines.append(f"{lab.ljust(lw)} |{body}")
    return "\n".join(lines)
