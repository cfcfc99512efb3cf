"""The ``.qv`` text format for quivers with relations.

Example::

    # C(1,1)
    quiver C11 {
      vertices: u, v;
      arrows: a: u -> u, b: v -> v, c: v -> u, d: u -> v;
      field: F5;
      relations: a*d - d*b, c*a - b*c;
    }

A term is an optional coefficient followed by ``*``-separated factors, each
an arrow name or a trivial path ``e_<vertex>``.  Factors compose left to
right, so ``a*d`` is "first ``a``, then ``d``".  ``#`` starts a comment.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .fields import QQ, field_from_name
from .groebner import HomogeneousIdeal
from .pathalg import PathAlgebra
from .quiver import Quiver


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.message, self.line, self.column = message, line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class FieldConflictError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<arrow>->)|(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<sym>[{}:;,+\-*/])"
)


def tokenize(text):
    tokens = []
    line, start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - start + 1))
    return tokens


@dataclass
class QuiverSource:
    """A parsed ``.qv`` file: quiver, relations, field, plus token spans."""

    name: str
    quiver: Quiver
    field: object
    relations: tuple
    text: str = field(default="", compare=False, repr=False)
    tokens: list = field(default_factory=list, compare=False, repr=False)

    @property
    def algebra(self):
        return PathAlgebra(self.quiver, self.field)

    @property
    def ideal(self):
        return HomogeneousIdeal(self.algebra, self.relations)


def _relation_key(g):
    return [(p.sort_key(), c) for p, c in g.terms()]


def canonical_relations(relations):
    return tuple(sorted((g for g in relations if g), key=_relation_key, reverse=True))


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.column)

    def advance(self):
        t = self.tok
        self.i += 1
        return t

    def expect(self, text=None, kind=None):
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            got = repr(t.text) if t.kind != "eof" else "end of input"
            self.error(f"expected {want}, found {got}")
        return self.advance()

    def accept(self, text):
        if self.tok.text == text and self.tok.kind != "ident":
            return self.advance()
        return None

    def keyword(self, word):
        if self.tok.kind == "ident" and self.tok.text == word:
            return self.advance()
        return None

    def vertex_id(self):
        # vertices may be numbered, as in "1 -> 2"
        if self.tok.kind == "num":
            return self.advance()
        return self.expect(kind="ident")

    def idlist(self):
        ids = [self.vertex_id()]
        while self.accept(","):
            ids.append(self.vertex_id())
        return ids

    def parse_file(self, field_override=None):
        self.expect("quiver")
        name = self.expect(kind="ident").text
        self.expect("{")
        self.expect("vertices")
        self.expect(":")
        vtoks = self.idlist()
        self.expect(";")
        seen = set()
        for t in vtoks:
            if t.text in seen:
                self.error(f"duplicate vertex {t.text!r}", t)
            seen.add(t.text)
        vertices = [t.text for t in vtoks]

        self.expect("arrows")
        self.expect(":")
        arrows = []
        names = set()
        if self.tok.text != ";":
            while True:
                at = self.expect(kind="ident")
                if at.text in names:
                    self.error(f"duplicate arrow {at.text!r}", at)
                if at.text.startswith("e_"):
                    self.error(f"arrow name {at.text!r} clashes with trivial-path syntax e_<vertex>", at)
                self.expect(":")
                s = self.vertex_id()
                self.expect("->")
                t = self.vertex_id()
                for vt in (s, t):
                    if vt.text not in seen:
                        self.error(f"arrow {at.text}: unknown vertex {vt.text!r}", vt)
                names.add(at.text)
                arrows.append((at.text, s.text, t.text))
                if not self.accept(","):
                    break
        self.expect(";")
        quiver = Quiver(vertices, arrows)

        declared = None
        if self.keyword("field"):
            self.expect(":")
            ft = self.expect(kind="ident")
            try:
                declared = field_from_name(ft.text)
            except ValueError as e:
                self.error(str(e), ft)
            self.expect(";")
        if declared is not None and field_override is not None and declared != field_override:
            raise FieldConflictError(
                f"file declares field {declared.name} but {field_override.name} was requested"
            )
        F = declared or field_override or QQ
        alg = PathAlgebra(quiver, F)

        relations = []
        if self.keyword("relations"):
            self.expect(":")
            if self.tok.text != ";":
                relations.append(self.relation(alg))
                while self.accept(","):
                    relations.append(self.relation(alg))
            self.expect(";")
        self.expect("}")
        self.expect(kind="eof")
        return QuiverSource(name, quiver, F, canonical_relations(relations), tokens=self.tokens)

    def relation(self, alg):
        start = self.tok
        f = self.expression(alg)
        if not f.is_homogeneous():
            comps = f.components()
            (u1, v1, d1, g1), (u2, v2, d2, g2) = comps[0], comps[1]
            V = alg.quiver.vertices
            self.error(
                f"relation is not homogeneous: {g1!r} ({V[u1]}->{V[v1]}, length {d1}) "
                f"vs {g2!r} ({V[u2]}->{V[v2]}, length {d2})",
                start,
            )
        return f

    def expression(self, alg):
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        f = self.term(alg, sign)
        while self.tok.text in ("+", "-") and self.tok.kind == "sym":
            sign = 1 if self.advance().text == "+" else -1
            f = f + self.term(alg, sign)
        return f

    def term(self, alg, sign):
        F = alg.field
        coeff = Fraction(sign)
        if self.tok.kind == "num":
            num = self.advance()
            value = Fraction(int(num.text))
            if self.accept("/"):
                den = self.expect(kind="num")
                if int(den.text) == 0:
                    self.error("zero denominator", den)
                value /= int(den.text)
            coeff *= value
            if not self.accept("*"):
                self.error("a coefficient must be followed by '*' and a path")
        try:
            c = F(coeff)
        except ZeroDivisionError as e:
            self.error(str(e))
        factors = [self.factor(alg)]
        while self.accept("*"):
            factors.append(self.factor(alg))
        result = factors[0][1]
        for (ptok, prev), (tok, nxt) in zip(factors, factors[1:]):
            prod = result * nxt
            if not prod:
                self.error(
                    f"{ptok.text}*{tok.text} is not composable: {ptok.text} ends at "
                    f"{self._end(alg, prev)} but {tok.text} starts at {self._start(alg, nxt)}",
                    tok,
                )
            result = prod
        return result.scale(c)

    @staticmethod
    def _end(alg, f):
        (p, _), = f.terms()
        return alg.quiver.vertices[p.target]

    @staticmethod
    def _start(alg, f):
        (p, _), = f.terms()
        return alg.quiver.vertices[p.source]

    def factor(self, alg):
        t = self.expect(kind="ident")
        Q = alg.quiver
        if t.text in Q._aindex:
            return t, alg.arrow(t.text)
        if t.text.startswith("e_") and t.text[2:] in Q._vindex:
            return t, alg.idempotent(t.text[2:])
        self.error(f"unknown arrow or trivial path {t.text!r}", t)


def parse_quiver(text, field=None):
    """Parse a ``.qv`` document. ``field`` may supply or must agree with the declared field."""
    if isinstance(field, str):
        field = field_from_name(field)
    src = _Parser(text).parse_file(field)
    src.text = text
    return src


def parse_element(algebra, text):
    """Parse a single expression such as ``"a*d - 2*d*b"`` in ``algebra``."""
    p = _Parser(text)
    f = p.expression(algebra)
    p.expect(kind="eof")
    return f


def format_quiver(name, ideal, field=None):
    """Canonical ``.qv`` text for a presentation."""
    Q = ideal.quiver
    F = ideal.field if field is None else field
    lines = [f"quiver {name} {{"]
    lines.append(f"  vertices: {', '.join(Q.vertices)};")
    arrows = ", ".join(f"{a.name}: {a.source} -> {a.target}" for a in Q.arrows)
    lines.append(f"  arrows: {arrows};")
    lines.append(f"  field: {F.name};")
    rels = canonical_relations(ideal.generators)
    lines.append(f"  relations: {', '.join(repr(g) for g in rels)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_source(src):
    return format_quiver(src.name, src.ideal)
