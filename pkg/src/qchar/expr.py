"""Text surface for Laurent polynomials: parsing and rendering.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' exponent)?
    atom    := NUMBER | VARIABLE | '(' expr ')'
    exponent:= NUMBER | '-' NUMBER | '(' ('-' | '+')? NUMBER ')'

NUMBER is an integer or a fraction ``p/q``; VARIABLE is ``x1``, ``x2``, ...
Fractional and negative powers are only allowed on monomials.
"""

import json
import re
from fractions import Fraction

from qchar import laurent
from qchar.laurent import LaurentPoly


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>x\d+)|(?P<op>[-+*^()]))")


def tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            if not rest.strip():
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, nvars):
        self.text = text
        self.nvars = nvars
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        where = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"{message} (found {where})", self.text, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] == "end":
            self.error(f"expected {value!r}", tok)

    def parse(self):
        value = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[1] == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("-", "+"):
            self.take()
            value = self.unary()
            return -value if tok[1] == "-" else value
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] != "^":
            return base
        caret = self.take()
        exponent = self.exponent()
        return _raise(base, exponent, lambda msg: self.error(msg, caret))

    def exponent(self):
        tok = self.take()
        if tok[0] == "num":
            return Fraction(tok[1])
        if tok[1] == "-":
            num = self.take()
            if num[0] != "num":
                self.error("malformed exponent", num)
            return -Fraction(num[1])
        if tok[1] == "(":
            sign = 1
            if self.peek()[1] in ("-", "+"):
                sign = -1 if self.take()[1] == "-" else 1
            num = self.take()
            if num[0] != "num":
                self.error("malformed exponent", num)
            self.expect(")")
            return sign * Fraction(num[1])
        self.error("malformed exponent", tok)

    def atom(self):
        tok = self.take()
        if tok[0] == "num":
            return laurent.constant(Fraction(tok[1]), self.nvars)
        if tok[0] == "var":
            index = int(tok[1][1:])
            if not 1 <= index <= self.nvars:
                self.error(f"unknown variable {tok[1]} for {self.nvars} variables", tok)
            return laurent.variable(index - 1, self.nvars)
        if tok[1] == "(":
            value = self.expr()
            self.expect(")")
            return value
        self.error("expected a number, variable or '('", tok)


def _raise(base, exponent, fail):
    if exponent.denominator == 1 and exponent >= 0:
        return base ** int(exponent)
    if len(base) != 1:
        fail("only monomials may carry negative or fractional exponents")
    (exps, coeff), = base.items()
    if exponent.denominator == 1:
        return base ** int(exponent)
    if coeff != 1:
        fail("fractional powers need a coefficient of 1")
    return laurent.monomial(tuple(e * exponent for e in exps), nvars=base.nvars)


def parse_poly(text, nvars):
    return _Parser(text, nvars).parse()


# -- rendering --------------------------------------------------------------

def _exp_text(e):
    if e.denominator == 1 and e >= 0:
        return str(e)
    return f"({e})"


def _monomial_text(exps):
    parts = []
    for i, e in enumerate(exps):
        if e == 0:
            continue
        parts.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{_exp_text(e)}")
    return "*".join(parts)


def render_text(f):
    if f.is_zero():
        return "0"
    out = []
    for exps, c in f.items():
        mono = _monomial_text(exps)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _latex_fraction(q):
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return rf"{sign}\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def render_latex(f):
    if f.is_zero():
        return "0"
    out = []
    for exps, c in f.items():
        mono = " ".join(
            f"x_{{{i + 1}}}" if e == 1 else f"x_{{{i + 1}}}^{{{_latex_fraction(e)}}}"
            for i, e in enumerate(exps) if e != 0)
        mag = abs(c)
        coeff = "" if mag == 1 and mono else _latex_fraction(mag)
        body = f"{coeff} {mono}".strip() if coeff and mono else (coeff or mono)
        sign = "-" if c < 0 else ("+" if out else "")
        out.append(f"{sign} {body}".strip() if out else f"{sign}{body}")
    return " ".join(out)


def to_json_obj(f):
    return {"nvars": f.nvars,
            "terms": [{"coeff": str(c), "exps": [str(e) for e in exps]}
                      for exps, c in f.items()]}


def from_json_obj(obj):
    return laurent.make([(t["exps"], t["coeff"]) for t in obj["terms"]], obj["nvars"])


def render(f, format="text"):
    if format == "text":
        return render_text(f)
    if format == "latex":
        return render_latex(f)
    if format == "json":
        return json.dumps(to_json_obj(f))
    raise ValueError(f"unknown format {format!r}")


def parse_weight(text):
    """``"3,1,0,0"`` -> ``(3, 1, 0, 0)``; the empty string is the empty weight."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed weight {text!r}: expected comma-separated integers") from exc


def format_weight(parts):
    return "(" + ",".join(str(p) for p in parts) + ")"


__all__ = ["LaurentPoly", "ParseError", "parse_poly", "render", "render_text",
           "render_latex", "to_json_obj", "from_json_obj", "parse_weight", "format_weight"]
