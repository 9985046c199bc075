"""Statement notation: lexer, parser, evaluator, and canonical printer.

The surface syntax is ASCII: point names are uppercase letters with an
optional caret index (``A``, ``N^2``), variables lowercase (``x``,
``n^1``).  All binary operators share one precedence level and group to
the left, so ``A & B -> x`` reads ``[A & B] -> x``; square, round, and
curly brackets group explicitly and interchangeably.  Object terms:

    L(A,B;x)     the line with end points A, B; x references its points
    SL(A,B;x)    a seriating line with those end points
    RING(A,B;x)  a ring through the listed points; x references its points
    A/B/C(x)     B lies between A and C within the set x references
    S2!(x,...)   a family of lines; x references its rows
    A!(a;_b)     an area; a references its points, b its boundary

A mapping arrow may not point into a negation; ``P -> ~a`` is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from . import errors
from .core import Line, ModelUniverse, PointId, Ring, between


# --------------------------------------------------------------------------
# Point-name codec
# --------------------------------------------------------------------------

_NAME_RE = re.compile(r"^([A-Z])(\^([0-9]+))?$")


def name_to_point(name: str) -> PointId:
    m = _NAME_RE.match(name)
    if not m:
        raise errors.UnboundName(f"{name!r} is not a point name")
    letter = ord(m.group(1)) - 65
    index = int(m.group(3)) if m.group(3) else 0
    return letter + 26 * index


def point_to_name(pid: PointId) -> str:
    letter, index = pid % 26, pid // 26
    return chr(65 + letter) + ("" if index == 0 else f"^{index}")


# --------------------------------------------------------------------------
# AST
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PointName:
    name: str


@dataclass(frozen=True)
class VarName:
    name: str


@dataclass(frozen=True)
class Not:
    child: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # & | => <=> -> <-> = + -
    left: "Node"
    right: "Node"
    reciprocal: bool = False  # true for <->


@dataclass(frozen=True)
class LineTerm:
    e1: str
    e2: str
    args: tuple = ()  # mixture of VarName / PointName


@dataclass(frozen=True)
class SeriatingTerm:
    e1: str
    e2: str
    args: tuple = ()


@dataclass(frozen=True)
class RingTerm:
    points: tuple
    var: str


@dataclass(frozen=True)
class BetweenTerm:
    a: str
    b: str
    c: str
    var: str


@dataclass(frozen=True)
class FamilyTerm:
    var: str
    e_rows: Optional[tuple] = None  # (LineTerm, LineTerm)


@dataclass(frozen=True)
class AreaTerm:
    var: str
    boundary_var: Optional[str] = None


Node = Union[PointName, VarName, Not, BinOp, LineTerm, SeriatingTerm,
             RingTerm, BetweenTerm, FamilyTerm, AreaTerm]

_BOOLEAN_OPS = ("&", "|", "=>", "<=>")
_SET_OPS = ("+", "-")
_ARROWS = ("->", "<->")
ALL_OPS = _BOOLEAN_OPS + _SET_OPS + _ARROWS + ("=",)


# --------------------------------------------------------------------------
# Lexer
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # point var op open close keyword slash comma semi bang underscore
    text: str
    pos: int


_KEYWORDS = ("S2!(", "A!(", "RING(", "SL(", "L(")
_OPS_LONGEST = ("<=>", "<->", "=>", "->", "\\/", "&", "|", "=", "+", "-")


def tokenize(src: str) -> list[Token]:
    toks = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        hit = None
        for kw in _KEYWORDS:
            if src.startswith(kw, i):
                hit = kw
                break
        if hit:
            toks.append(Token("keyword", hit, i))
            i += len(hit)
            continue
        for op in _OPS_LONGEST:
            if src.startswith(op, i):
                text = "|" if op == "\\/" else op
                toks.append(Token("op", text, i))
                i += len(op)
                break
        else:
            if ch == "~":
                toks.append(Token("not", "~", i)); i += 1
            elif ch in "([{":
                toks.append(Token("open", ch, i)); i += 1
            elif ch in ")]}":
                toks.append(Token("close", ch, i)); i += 1
            elif ch == ",":
                toks.append(Token("comma", ch, i)); i += 1
            elif ch == ";":
                toks.append(Token("semi", ch, i)); i += 1
            elif ch == "/":
                toks.append(Token("slash", ch, i)); i += 1
            elif ch == "_":
                toks.append(Token("underscore", ch, i)); i += 1
            elif ch.isupper():
                m = re.match(r"[A-Z](\^[0-9]+)?", src[i:])
                toks.append(Token("point", m.group(0), i))
                i += m.end()
            elif ch.islower():
                m = re.match(r"[a-z](\^[0-9]+)?", src[i:])
                toks.append(Token("var", m.group(0), i))
                i += m.end()
            else:
                raise errors.LexError(f"unexpected character {ch!r}", i)
    return toks


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------

class _Parser:
    def __init__(self, toks: list[Token], src: str):
        self.toks = toks
        self.src = src
        self.i = 0

    def peek(self) -> Optional[Token]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self) -> Token:
        t = self.peek()
        if t is None:
            raise errors.ParseError("unexpected end of input", len(self.src))
        self.i += 1
        return t

    def expect(self, kind: str, text: str = None) -> Token:
        t = self.next()
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            raise errors.ParseError(f"expected {want!r}, got {t.text!r}", t.pos)
        return t

    def parse_formula(self) -> Node:
        node = self.parse_chain()
        t = self.peek()
        if t is not None:
            raise errors.ParseError(f"trailing input {t.text!r}", t.pos)
        return node

    def parse_chain(self) -> Node:
        node = self.parse_unary()
        while True:
            t = self.peek()
            if t is None or t.kind != "op":
                return node
            self.next()
            right = self.parse_unary()
            if t.text in _ARROWS and isinstance(right, Not):
                raise errors.NegatedMapTarget(
                    f"mapping arrow {t.text!r} may not point into a negation", t.pos)
            node = BinOp(t.text, node, right, reciprocal=(t.text == "<->"))

    def parse_unary(self) -> Node:
        t = self.peek()
        if t is None:
            raise errors.ParseError("unexpected end of input", len(self.src))
        if t.kind == "not":
            self.next()
            return Not(self.parse_unary())
        if t.kind == "open":
            self.next()
            node = self.parse_chain()
            self.expect("close")
            return node
        return self.parse_atom()

    def parse_atom(self) -> Node:
        t = self.next()
        if t.kind == "keyword":
            return self.parse_term(t)
        if t.kind == "point":
            nxt = self.peek()
            if nxt is not None and nxt.kind == "slash":
                return self.parse_between(t)
            return PointName(t.text)
        if t.kind == "var":
            return VarName(t.text)
        raise errors.ParseError(f"unexpected token {t.text!r}", t.pos)

    def parse_between(self, first: Token) -> Node:
        self.expect("slash")
        b = self.expect("point")
        self.expect("slash")
        c = self.expect("point")
        self.expect("open", "(")
        v = self.expect("var")
        self.expect("close", ")")
        return BetweenTerm(first.text, b.text, c.text, v.text)

    def parse_term(self, kw: Token) -> Node:
        if kw.text in ("L(", "SL("):
            e1 = self.expect("point")
            self.expect("comma")
            e2 = self.expect("point")
            args = []
            if self.peek() and self.peek().kind == "semi":
                self.next()
                while True:
                    t = self.next()
                    if t.kind == "var":
                        args.append(VarName(t.text))
                    elif t.kind == "point":
                        args.append(PointName(t.text))
                    else:
                        raise errors.ParseError(
                            f"expected a name in the argument list, got {t.text!r}", t.pos)
                    if self.peek() and self.peek().kind == "comma":
                        self.next()
                        continue
                    break
            self.expect("close", ")")
            cls = LineTerm if kw.text == "L(" else SeriatingTerm
            return cls(e1.text, e2.text, tuple(args))
        if kw.text == "RING(":
            pts = [self.expect("point").text]
            while self.peek() and self.peek().kind == "comma":
                self.next()
                pts.append(self.expect("point").text)
            self.expect("semi")
            v = self.expect("var")
            self.expect("close", ")")
            return RingTerm(tuple(pts), v.text)
        if kw.text == "S2!(":
            v = self.expect("var")
            e_rows = None
            if self.peek() and self.peek().kind == "comma":
                self.next()
                l1 = self.parse_term(self.expect("keyword", "L("))
                self.expect("comma")
                l2 = self.parse_term(self.expect("keyword", "L("))
                e_rows = (l1, l2)
            self.expect("close", ")")
            return FamilyTerm(v.text, e_rows)
        if kw.text == "A!(":
            v = self.expect("var")
            bvar = None
            if self.peek() and self.peek().kind == "semi":
                self.next()
                self.expect("underscore")
                bvar = self.expect("var").text
            self.expect("close", ")")
            return AreaTerm(v.text, bvar)
        raise errors.ParseError(f"unknown term keyword {kw.text!r}", kw.pos)


def parse(src: str) -> Node:
    return _Parser(tokenize(src), src).parse_formula()


# --------------------------------------------------------------------------
# Canonical printing
# --------------------------------------------------------------------------

def pretty(node: Node) -> str:
    """Canonical text; ``parse(pretty(f))`` reproduces ``f`` structurally.
    Nested operator groups are always emitted with square brackets."""
    if isinstance(node, BinOp):
        return f"{_wrap(node.left)} {node.op} {_wrap(node.right)}"
    return _wrap(node, top=True)


def _wrap(node: Node, top: bool = False) -> str:
    if isinstance(node, BinOp):
        return f"[{pretty(node)}]"
    if isinstance(node, Not):
        return "~" + _wrap(node.child)
    if isinstance(node, PointName):
        return node.name
    if isinstance(node, VarName):
        return node.name
    if isinstance(node, LineTerm):
        return "L(" + _term_body(node) + ")"
    if isinstance(node, SeriatingTerm):
        return "SL(" + _term_body(node) + ")"
    if isinstance(node, RingTerm):
        return "RING(" + ",".join(node.points) + ";" + node.var + ")"
    if isinstance(node, BetweenTerm):
        return f"{node.a}/{node.b}/{node.c}({node.var})"
    if isinstance(node, FamilyTerm):
        if node.e_rows:
            l1, l2 = node.e_rows
            return f"S2!({node.var},{_wrap(l1)},{_wrap(l2)})"
        return f"S2!({node.var})"
    if isinstance(node, AreaTerm):
        if node.boundary_var:
            return f"A!({node.var};_{node.boundary_var})"
        return f"A!({node.var})"
    raise TypeError(f"cannot print {type(node).__name__}")


def _term_body(node) -> str:
    body = f"{node.e1},{node.e2}"
    if node.args:
        body += ";" + ",".join(a.name for a in node.args)
    return body


# --------------------------------------------------------------------------
# Evaluation
# --------------------------------------------------------------------------

@dataclass
class Environment:
    """Bindings used during evaluation.

    ``var_bindings`` maps variables to referent sets (points as ids,
    lines as Line values).  Point names resolve through explicit
    bindings first and fall back to the standard name codec.  Terms with
    an unbound variable bind it to the matched object's referents, so a
    statement can introduce its own variables left to right.
    """

    name_bindings: dict = field(default_factory=dict)
    var_bindings: dict = field(default_factory=dict)

    def copy(self) -> "Environment":
        return Environment(dict(self.name_bindings), dict(self.var_bindings))

    def resolve_point(self, name: str) -> PointId:
        if name in self.name_bindings:
            return self.name_bindings[name]
        return name_to_point(name)

    def referents(self, var: str) -> frozenset:
        if var not in self.var_bindings:
            raise errors.UnboundName(f"variable {var!r} is unbound")
        refs = frozenset(self.var_bindings[var])
        dims = {0 if isinstance(r, int) else 1 for r in refs}
        if len(dims) > 1:
            raise errors.DimensionMix(f"variable {var!r} mixes dimensions")
        return refs

    def bind(self, var: str, refs) -> None:
        self.var_bindings[var] = frozenset(refs)


def evaluate(node: Node, u: ModelUniverse, env: Optional[Environment] = None) -> bool:
    """Two-valued truth of a statement against a fully specified universe."""
    work = env.copy() if env is not None else Environment()
    return _eval(node, u, work)


def _eval(node: Node, u: ModelUniverse, env: Environment) -> bool:
    if isinstance(node, Not):
        return not _eval(node.child, u, env)
    if isinstance(node, BinOp):
        return _eval_binop(node, u, env)
    if isinstance(node, PointName):
        return env.resolve_point(node.name) in u.points
    if isinstance(node, VarName):
        refs = env.referents(node.name)
        return bool(refs) and all(_object_exists(r, u) for r in refs)
    if isinstance(node, (LineTerm, SeriatingTerm, RingTerm, BetweenTerm,
                         FamilyTerm, AreaTerm)):
        return _eval_term(node, u, env)
    raise TypeError(f"cannot evaluate {type(node).__name__}")


def _object_exists(ref, u: ModelUniverse) -> bool:
    if isinstance(ref, Line):
        return ref in u.lines
    if isinstance(ref, Ring):
        return ref in u.rings
    if ref in u.points:
        return True
    if u.areas:
        from .dim2.areas import vertex_id
        for a in u.areas:
            if any(vertex_id(v) == ref for v in a.vertex_set):
                return True
    return False


def _eval_binop(node: BinOp, u: ModelUniverse, env: Environment) -> bool:
    op = node.op
    if op == "&":
        return _eval(node.left, u, env) and _eval(node.right, u, env)
    if op == "|":
        return _eval(node.left, u, env) or _eval(node.right, u, env)
    if op == "=>":
        return (not _eval(node.left, u, env)) or _eval(node.right, u, env)
    if op == "<=>":
        return _eval(node.left, u, env) == _eval(node.right, u, env)
    if op in ("->", "<->"):
        return _eval_mapsto(node.left, node.right, node.op == "<->", u, env)
    if op == "=":
        return _eval_identity(node.left, node.right, u, env)
    if op in ("+", "-"):
        # a bare set expression asserts the existence of its referents
        refs = _referents(node, u, env)
        return bool(refs) and all(_object_exists(r, u) for r in refs)
    raise errors.ParseError(f"unknown operator {op!r}", 0)


def _eval_mapsto(lhs: Node, rhs: Node, reciprocal: bool, u, env) -> bool:
    # the left operand distributes over & and | before referents are taken
    if isinstance(lhs, BinOp) and lhs.op == "&":
        return (_eval_mapsto(lhs.left, rhs, reciprocal, u, env) and
                _eval_mapsto(lhs.right, rhs, reciprocal, u, env))
    if isinstance(lhs, BinOp) and lhs.op == "|":
        return (_eval_mapsto(lhs.left, rhs, reciprocal, u, env) or
                _eval_mapsto(lhs.right, rhs, reciprocal, u, env))
    if isinstance(rhs, BinOp) and rhs.op == "&":
        return (_eval_mapsto(lhs, rhs.left, reciprocal, u, env) and
                _eval_mapsto(lhs, rhs.right, reciprocal, u, env))
    if isinstance(rhs, BinOp) and rhs.op == "|":
        # one whole target takes every referent; referents never split
        return (_eval_mapsto(lhs, rhs.left, reciprocal, u, env) or
                _eval_mapsto(lhs, rhs.right, reciprocal, u, env))
    l = _referents(lhs, u, env)
    r = _referents(rhs, u, env)
    return l == r if reciprocal else l <= r


def _eval_identity(lhs: Node, rhs: Node, u, env) -> bool:
    if isinstance(rhs, BinOp) and rhs.op == "|":
        return (_eval_identity(lhs, rhs.left, u, env) or
                _eval_identity(lhs, rhs.right, u, env))
    if isinstance(rhs, BinOp) and rhs.op == "&":
        return (_eval_identity(lhs, rhs.left, u, env) and
                _eval_identity(lhs, rhs.right, u, env))
    if isinstance(lhs, BinOp) and lhs.op in ("|", "&"):
        return _eval_identity(rhs, lhs, u, env)
    return _referents(lhs, u, env) == _referents(rhs, u, env)


def _referents(node: Node, u: ModelUniverse, env: Environment) -> frozenset:
    if isinstance(node, PointName):
        return frozenset((env.resolve_point(node.name),))
    if isinstance(node, VarName):
        return env.referents(node.name)
    if isinstance(node, BinOp) and node.op == "+":
        return _referents(node.left, u, env) | _referents(node.right, u, env)
    if isinstance(node, BinOp) and node.op == "-":
        l = _referents(node.left, u, env)
        r = _referents(node.right, u, env)
        if not r <= l:
            raise errors.BadDifference(
                "second operand does not reference a subset of the first")
        return l - r
    if isinstance(node, LineTerm):
        line = _match_line(node, u, env)
        return frozenset((line,)) if line is not None else frozenset()
    raise errors.DimensionMix(
        f"{type(node).__name__} is not an object-valued operand")


# ----------------------------------------------------------------- terms

def _match_line(t: LineTerm, u: ModelUniverse, env: Environment) -> Optional[Line]:
    e = frozenset((env.resolve_point(t.e1), env.resolve_point(t.e2)))
    var_args = [a for a in t.args if isinstance(a, VarName)]
    pt_args = [env.resolve_point(a.name) for a in t.args if isinstance(a, PointName)]
    bound = {a.name: env.referents(a.name) for a in var_args
             if a.name in env.var_bindings}
    candidates = sorted((l for l in u.lines if l.ends == e), key=lambda l: l.seq)
    for line in candidates:
        if any(p not in line.member_set for p in pt_args):
            continue
        if any(line.member_set != refs for refs in bound.values()):
            continue
        for a in var_args:
            if a.name not in env.var_bindings:
                env.bind(a.name, line.member_set)
        return line
    return None


def _cyclic_order_ok(ring: Ring, pts: list) -> bool:
    if len(pts) <= 2:
        return True
    n = len(ring.cyc)
    pos = [ring.index(p) for p in pts]
    fwd = [(q - pos[0]) % n for q in pos]
    bwd = [(pos[0] - q) % n for q in pos]
    return (all(fwd[i] < fwd[i + 1] for i in range(len(fwd) - 1)) or
            all(bwd[i] < bwd[i + 1] for i in range(len(bwd) - 1)))


def _eval_term(node: Node, u: ModelUniverse, env: Environment) -> bool:
    if isinstance(node, LineTerm):
        return _match_line(node, u, env) is not None

    if isinstance(node, SeriatingTerm):
        var_args = [a for a in node.args if isinstance(a, VarName)]
        if not var_args:
            raise errors.UnboundName("seriating term needs a variable argument")
        vname = var_args[0].name
        if vname not in env.var_bindings:
            raise errors.UnboundName(
                f"variable {vname!r} must be bound for a seriating term")
        refs = env.referents(vname)
        pt_args = [env.resolve_point(a.name) for a in node.args
                   if isinstance(a, PointName)]
        if any(p not in refs for p in pt_args):
            return False
        return _match_seriating(node, u, env, refs)

    if isinstance(node, RingTerm):
        pts = [env.resolve_point(p) for p in node.points]
        bound = (env.referents(node.var)
                 if node.var in env.var_bindings else None)
        for ring in sorted(u.rings, key=lambda r: r.cyc):
            if bound is not None and ring.member_set != bound:
                continue
            if any(p not in ring.member_set for p in pts):
                continue
            if not _cyclic_order_ok(ring, pts):
                continue
            if bound is None:
                env.bind(node.var, ring.member_set)
            return True
        return False

    if isinstance(node, BetweenTerm):
        a, b, c = (env.resolve_point(n) for n in (node.a, node.b, node.c))
        bound = (env.referents(node.var)
                 if node.var in env.var_bindings else None)
        ctxs = sorted(u.lines, key=lambda l: l.seq) + sorted(u.rings, key=lambda r: r.cyc)
        for ctx in ctxs:
            if bound is not None and ctx.member_set != bound:
                continue
            if not {a, b, c} <= ctx.member_set:
                continue
            if between(ctx, a, b, c):
                if bound is None:
                    env.bind(node.var, ctx.member_set)
                return True
        return False

    if isinstance(node, FamilyTerm):
        bound = (env.referents(node.var)
                 if node.var in env.var_bindings else None)
        for fam in sorted(u.families, key=lambda f: tuple(r.seq for r in f.rows)):
            rows = frozenset(fam.rows)
            if bound is not None and rows != bound:
                continue
            if node.e_rows is not None:
                l1 = _match_line(node.e_rows[0], u, env)
                l2 = _match_line(node.e_rows[1], u, env)
                if l1 is None or l2 is None or {l1, l2} != set(fam.e_rows):
                    continue
            if bound is None:
                env.bind(node.var, rows)
            return True
        return False

    if isinstance(node, AreaTerm):
        from .dim2.areas import vertex_id
        bound = (env.referents(node.var)
                 if node.var in env.var_bindings else None)
        for area in sorted(u.areas, key=lambda a: sorted(a.cells)):
            pts = frozenset(vertex_id(v) for v in area.vertex_set)
            if bound is not None and pts != bound:
                continue
            if node.boundary_var is not None:
                bnd = area.boundary.member_set
                if node.boundary_var in env.var_bindings:
                    if env.referents(node.boundary_var) != bnd:
                        continue
                else:
                    env.bind(node.boundary_var, bnd)
            if bound is None:
                env.bind(node.var, pts)
            return True
        return False

    raise TypeError(f"cannot evaluate term {type(node).__name__}")


def _match_seriating(node: SeriatingTerm, u, env, refs) -> bool:
    e1, e2 = env.resolve_point(node.e1), env.resolve_point(node.e2)
    pts = set(refs)
    if not {e1, e2} <= pts:
        return False
    from .dim2.families import is_seriating, subsumed
    for fam in sorted(u.families, key=lambda f: tuple(r.seq for r in f.rows)):
        if not pts <= subsumed(fam):
            continue
        rows = sorted((fam.row_of(p), p) for p in pts)
        ordered = [p for _, p in rows]
        if ordered[0] not in (e1, e2) or ordered[-1] not in (e1, e2):
            continue
        if is_seriating(ordered, fam):
            return True
    return False
