"""Parser for stable Green ring expressions.

Grammar (whitespace insensitive):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := INT | atom | INT atom
    atom   := 'D' INT | 'P' INT | 'S' INT | 'O' '^' SINT '(' expr ')'

D j is the hook simple, P t its projective cover (zero in the stable
ring), S i the hook Specht module (equal to the i-th syzygy of D 0),
and O^n(...) the n-th syzygy with any integer n.  Juxtaposition
"2 D1" multiplies; a bare integer is that multiple of the unit D0.
"""

import re
from dataclasses import dataclass

from .diagram import PrimeContext
from .errors import DomainError
from .stable_ring import StableElement, syzygy

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([DPSO])|(\^)|(\()|(\))|(\+)|(-)|(\*)|(.))")

_INT, _LETTER, _CARET, _LPAREN, _RPAREN, _PLUS, _MINUS, _STAR = range(8)


def _tokenize(text: str) -> list[tuple[int, str]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            break
        pos = m.end()
        groups = m.groups()
        for kind in range(8):
            if groups[kind] is not None:
                out.append((kind, groups[kind]))
                break
        else:
            raise DomainError(f"unexpected character {groups[8]!r} in expression")
    return out


@dataclass
class _Parser:
    ctx: PrimeContext
    tokens: list[tuple[int, str]]
    pos: int = 0
    allow_specht: bool = False

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self, kind: int, what: str) -> str:
        tok = self._peek()
        if tok is None or tok[0] != kind:
            found = tok[1] if tok else "end of input"
            raise DomainError(f"expected {what}, found {found!r}")
        self.pos += 1
        return tok[1]

    def _int(self, what: str) -> int:
        return int(self._take(_INT, what))

    def parse(self) -> StableElement:
        value = self._expr()
        tok = self._peek()
        if tok is not None:
            raise DomainError(f"trailing input starting at {tok[1]!r}")
        return value

    def _expr(self) -> StableElement:
        tok = self._peek()
        negate = tok is not None and tok[0] == _MINUS
        if negate:
            self.pos += 1
        value = self._term()
        if negate:
            value = -value
        while True:
            tok = self._peek()
            if tok is None or tok[0] not in (_PLUS, _MINUS):
                return value
            self.pos += 1
            rhs = self._term()
            value = value + rhs if tok[0] == _PLUS else value - rhs

    def _term(self) -> StableElement:
        value = self._factor()
        while True:
            tok = self._peek()
            if tok is None or tok[0] != _STAR:
                return value
            self.pos += 1
            value = value * self._factor()

    def _factor(self) -> StableElement:
        tok = self._peek()
        if tok is None:
            raise DomainError("expected a class or integer, found end of input")
        if tok[0] == _INT:
            self.pos += 1
            n = int(tok[1])
            nxt = self._peek()
            if nxt is not None and nxt[0] == _LETTER:
                return n * self._atom()
            return n * StableElement.basis(self.ctx, 0, 0)
        if tok[0] == _LETTER:
            return self._atom()
        if tok[0] == _LPAREN:
            self.pos += 1
            inner = self._expr()
            self._take(_RPAREN, "')' closing the group")
            return inner
        raise DomainError(f"expected a class or integer, found {tok[1]!r}")

    def _atom(self) -> StableElement:
        letter = self._take(_LETTER, "one of D, P, S, O")
        ctx = self.ctx
        if letter == "D":
            j = self._int("a simple index after D")
            ctx.check_simple_index(j)
            return StableElement.basis(ctx, 0, j)
        if letter == "P":
            t = self._int("a projective index after P")
            ctx.check_simple_index(t)
            return StableElement.zero(ctx)
        if letter == "S":
            if not self.allow_specht:
                raise DomainError(
                    "S atoms denote Specht modules, which are not basis classes; "
                    "pass allow_specht (--as-syzygy on the command line) to "
                    "accept them as syzygies of D0"
                )
            i = self._int("a Specht index after S")
            if not 0 <= i <= ctx.p - 1:
                raise DomainError(
                    f"Specht index {i} outside [0, {ctx.p - 1}] for p = {ctx.p}"
                )
            return StableElement.basis(ctx, i, 0)
        self._take(_CARET, "'^' after O")
        sign = 1
        tok = self._peek()
        if tok is not None and tok[0] == _MINUS:
            self.pos += 1
            sign = -1
        n = sign * self._int("an integer syzygy degree after O^")
        self._take(_LPAREN, "'(' after the syzygy degree")
        inner = self._expr()
        self._take(_RPAREN, "')' closing the syzygy")
        return syzygy(inner, n)


def parse_element(
    ctx: PrimeContext, text: str, allow_specht: bool = False
) -> StableElement:
    """Parse an expression into a stable ring element.

    Projective atoms evaluate to zero; Specht atoms are rejected unless
    allow_specht is set, in which case S i is read as the i-th syzygy
    of the trivial class.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise DomainError("empty expression")
    return _Parser(ctx, tokens, allow_specht=allow_specht).parse()
