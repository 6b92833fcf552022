"""Text grammar and JSON serialization.

Grammar (whitespace-insensitive):

    poly    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*'? factor)*          -- implicit multiplication allowed
    factor  := atom ('^' nat)*
    atom    := number | 'i' | 'j' | 'k' | x<nat> | '(' poly ')'
    number  := nat | nat '/' nat | decimal

Multiplication is ring multiplication of the central polynomial ring:
variables commute with everything, so "x1*j" and "j*x1" are the same
polynomial, while coefficient literals multiply in written order ("i*j" is k,
"j*i" is -k).  Exact mode reads numbers as rationals (decimals exactly);
float mode reads them as floats.

Printing is canonical: terms in descending exponent-lexicographic order,
rationals as "p/q", never decimals, in exact mode.  parse(print(f)) == f.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ArityExceeded, ParseError
from .poly import CentralPoly
from .quaternion import Quaternion
from .scalarmode import scalar_from_json, scalar_to_json
from .spheres import EmbeddedSphere

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rational>\d+\s*/\s*\d+)
  | (?P<decimal>\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+)
  | (?P<integer>\d+)
  | (?P<var>x\d+)
  | (?P<unit>[ijk])
  | (?P<punct>[-+*^()\[\],])
    """,
    re.VERBOSE,
)

_ATOM_KINDS = {"rational", "decimal", "integer", "var", "unit", "lparen"}


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", (pos, pos + 1))
        kind = m.lastgroup
        value = m.group()
        if kind != "ws":
            if kind == "punct":
                kind = {
                    "+": "plus", "-": "minus", "*": "star", "^": "caret",
                    "(": "lparen", ")": "rparen", "[": "lbracket",
                    "]": "rbracket", ",": "comma",
                }[value]
            tokens.append((kind, value, m.start(), m.end()))
        pos = m.end()
    tokens.append(("end", "", len(text), len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, arity: int, exact: bool):
        self.text = text
        self.arity = arity
        self.exact = exact
        self.tokens = _tokenize(text)
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx]

    def take(self, kind=None):
        tok = self.tokens[self.idx]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end of input'!r}",
                             (tok[2], tok[3]))
        self.idx += 1
        return tok

    def _number(self, tok):
        kind, value = tok[0], tok[1]
        if kind == "rational":
            num, den = (part.strip() for part in value.split("/"))
            v = Fraction(int(num), int(den))
            return v if self.exact else float(v)
        if kind == "decimal":
            return Fraction(value) if self.exact else float(value)
        return Fraction(int(value)) if self.exact else float(value)

    def _const(self, q: Quaternion) -> CentralPoly:
        return CentralPoly.const(self.arity, q)

    def _unit(self, name: str) -> Quaternion:
        one = Fraction(1) if self.exact else 1.0
        comps = {"i": (0, one, 0, 0), "j": (0, 0, one, 0), "k": (0, 0, 0, one)}[name]
        if not self.exact:
            comps = tuple(float(c) for c in comps)
        return Quaternion(*comps)

    def atom(self) -> CentralPoly:
        tok = self.peek()
        kind = tok[0]
        if kind in ("rational", "decimal", "integer"):
            self.take()
            return self._const(Quaternion.from_scalar(self._number(tok)))
        if kind == "unit":
            self.take()
            return self._const(self._unit(tok[1]))
        if kind == "var":
            self.take()
            index = int(tok[1][1:])
            if not 1 <= index <= self.arity:
                raise ArityExceeded(
                    f"variable {tok[1]} outside x1..x{self.arity}"
                )
            return CentralPoly.variable(self.arity, index)
        if kind == "lparen":
            self.take()
            inner = self.poly()
            self.take("rparen")
            return inner
        raise ParseError(f"expected a value, found {tok[1] or 'end of input'!r}",
                         (tok[2], tok[3]))

    def factor(self) -> CentralPoly:
        out = self.atom()
        while self.peek()[0] == "caret":
            self.take()
            tok = self.take("integer")
            out = out ** int(tok[1])
        return out

    def term(self) -> CentralPoly:
        out = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "star":
                self.take()
                out = out * self.factor()
            elif kind in _ATOM_KINDS:
                out = out * self.factor()
            else:
                return out

    def poly(self) -> CentralPoly:
        sign = 1
        if self.peek()[0] in ("plus", "minus"):
            sign = -1 if self.take()[0] == "minus" else 1
        out = self.term()
        if sign < 0:
            out = -out
        while self.peek()[0] in ("plus", "minus"):
            negative = self.take()[0] == "minus"
            nxt = self.term()
            out = out - nxt if negative else out + nxt
        return out


def parse_poly(text: str, arity: int, exact: bool = True) -> CentralPoly:
    parser = _Parser(text, arity, exact)
    out = parser.poly()
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", (tok[2], tok[3]))
    return out


def parse_quaternion(text: str, exact: bool = True) -> Quaternion:
    f = parse_poly(text, 0, exact)
    return f.coefficient(())


def parse_point(text: str, exact: bool = True):
    """A bracketed, comma-separated tuple of quaternion expressions."""
    parser = _Parser(text, 0, exact)
    parser.take("lbracket")
    coords = []
    if parser.peek()[0] != "rbracket":
        while True:
            coords.append(parser.poly().coefficient(()))
            if parser.peek()[0] == "comma":
                parser.take()
                continue
            break
    parser.take("rbracket")
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", (tok[2], tok[3]))
    return tuple(coords)


# -- printing ----------------------------------------------------------------------


def _scalar_str(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(Fraction(v))


def _component_str(v, unit: str) -> str:
    if not unit:
        return _scalar_str(v)
    if v == 1:
        return unit
    if v == -1:
        return f"-{unit}"
    return f"{_scalar_str(v)}{unit}"


def print_quaternion(q: Quaternion) -> str:
    parts = []
    for v, unit in zip(q.components(), ("", "i", "j", "k")):
        if v == 0:
            continue
        parts.append(_component_str(v, unit))
    if not parts:
        return "0"
    out = parts[0]
    for piece in parts[1:]:
        out += piece if piece.startswith("-") else f"+{piece}"
    return out


def print_point(point) -> str:
    return "[" + ", ".join(print_quaternion(q) for q in point) + "]"


def _monomial_str(exps) -> str:
    parts = []
    for t, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"x{t}")
        elif e > 1:
            parts.append(f"x{t}^{e}")
    return "*".join(parts)


def _signed_pieces(exps, coef: Quaternion):
    """Render one stored term as a list of (negative, body) pieces."""
    mono = _monomial_str(exps)
    comps = [
        (v, unit)
        for v, unit in zip(coef.components(), ("", "i", "j", "k"))
        if v != 0
    ]
    if not mono:
        # constant terms split per component; parsing re-collects them
        return [(v < 0, _component_str(abs(v), unit)) for v, unit in comps]
    if len(comps) == 1:
        v, unit = comps[0]
        if not unit and abs(v) == 1:
            return [(v < 0, mono)]
        return [(v < 0, f"{_component_str(abs(v), unit)}*{mono}")]
    return [(False, f"({print_quaternion(coef)})*{mono}")]


def print_poly(f: CentralPoly) -> str:
    pieces = []
    for exps, coef in f.items():
        pieces.extend(_signed_pieces(exps, coef))
    if not pieces:
        return "0"
    negative, body = pieces[0]
    out = f"-{body}" if negative else body
    for negative, body in pieces[1:]:
        out += f" - {body}" if negative else f" + {body}"
    return out


# -- JSON shapes ----------------------------------------------------------------------


def quaternion_to_json(q: Quaternion):
    return [scalar_to_json(v) for v in q.components()]


def quaternion_from_json(data) -> Quaternion:
    if not isinstance(data, (list, tuple)) or len(data) != 4:
        raise ValueError(f"quaternion JSON must be a 4-array, got {data!r}")
    return Quaternion(*(scalar_from_json(v) for v in data))


def point_to_json(point):
    return [quaternion_to_json(q) for q in point]


def point_from_json(data):
    return tuple(quaternion_from_json(q) for q in data)


def poly_to_json(f: CentralPoly):
    return {
        "n": f.n,
        "terms": [
            {"exp": list(exps), "coef": quaternion_to_json(coef)}
            for exps, coef in f.items()
        ],
    }


def poly_from_json(data) -> CentralPoly:
    terms = {
        tuple(entry["exp"]): quaternion_from_json(entry["coef"])
        for entry in data["terms"]
    }
    return CentralPoly(int(data["n"]), terms)


def ideal_to_json(I):
    return {"gens": [poly_to_json(g) for g in I.gens]}


def ideal_from_json(data):
    from .ideals import LeftIdeal

    return LeftIdeal(tuple(poly_from_json(g) for g in data["gens"]))


def sphere_to_json(S: EmbeddedSphere):
    return {
        "prefix": point_to_json(S.prefix),
        "center": [scalar_to_json(v) for v in S.center],
        "radius": [scalar_to_json(v) for v in S.radius],
    }


def sphere_from_json(data) -> EmbeddedSphere:
    return EmbeddedSphere(
        point_from_json(data["prefix"]),
        [scalar_from_json(v) for v in data["center"]],
        [scalar_from_json(v) for v in data["radius"]],
    )


def _sign_word(signs) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def decomposition_to_json(dec):
    return {
        "cuts": list(dec.cuts),
        "blocks": [point_to_json(block) for block in dec.blocks],
        "directions": [
            None if d is None else [scalar_to_json(v) for v in d.components()]
            for d in dec.directions
        ],
    }


def certificate_to_json(cert):
    nodes = []
    for rec in cert.nodes:
        entry = {
            "level": rec.level,
            "signs": _sign_word(rec.signs),
            "point": point_to_json(rec.point),
            "sphere": None if rec.sphere is None else sphere_to_json(rec.sphere),
            "child_points": None
            if rec.child_points is None
            else [point_to_json(p) for p in rec.child_points],
            "child_evals": None
            if rec.child_evals is None
            else [quaternion_to_json(v) for v in rec.child_evals],
            "affine": None
            if rec.affine is None
            else [quaternion_to_json(v) for v in rec.affine],
            "direct_eval": quaternion_to_json(rec.direct_eval),
            "slice_ok": rec.slice_ok,
        }
        nodes.append(entry)
    return {
        "mode": cert.mode,
        "decomposition": decomposition_to_json(cert.decomposition),
        "conjugators": [
            [quaternion_to_json(ap), quaternion_to_json(am)]
            for ap, am in cert.conjugators
        ],
        "nodes": nodes,
        "verdict": cert.verdict,
        "detail": cert.detail,
    }


def report_to_json(report):
    membership = None
    if report.membership is not None:
        membership = {
            "root": report.membership.root_verdict.value,
            "nodes": [
                {
                    "level": e.level,
                    "signs": _sign_word(e.signs),
                    "verdict": e.verdict.value,
                    "in_vc": e.leaf_in_vc,
                }
                for e in report.membership.entries
            ],
        }
    return {
        "mode": report.mode,
        "commuting": report.commuting,
        "root_verdict": report.root_verdict.value,
        "membership": membership,
        "certificate": None
        if report.certificate is None
        else certificate_to_json(report.certificate),
        "direct_eval": None
        if report.direct_eval is None
        else quaternion_to_json(report.direct_eval),
        "root_in_vc": report.root_in_vc,
        "verdict": report.verdict,
        "detail": report.detail,
        "agrees": report.agrees,
    }
