"""
Precedence-climbing parser for the surface syntax.

Grammar, loosest binding first:
    a -> b        implication, right associative      (W-STAR)
    a \\/ b        join, left associative, sugar        (both)
    a (+) b       sum, left associative                (MV-STAR)
    -a  ~a        minus / negation, prefix
    a^+  a^-      positive / negative part, postfix
    x 0 1 ( )     variables [a-z][a-z0-9_]*, constants, grouping
``<->`` is accepted only by ``parse_biconditional``. Input nested deeper than
MAX_NESTING levels is rejected.
"""
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sqmv.syntax.abbreviations import join
from sqmv.syntax.terms import (
    ONE, ZERO, Impl, Neg, NegPart, OPlus, PosPart, Signature, Term, UMinus, Var,
)
from sqmv.utils.errors import SignatureError, TermSyntaxError

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<op><->|->|\(\+\)|\\/|\^\+|\^-|[()~-])|(?P<const>[0-9]+)|(?P<ident>[a-z][a-z0-9_]*))"
)

# operator -> (precedence, right associative)
_BINARY = {
    "->": (1, True),
    "\\/": (2, False),
    "(+)": (3, False),
}

# prefix operators, parentheses and right operands each open a level
MAX_NESTING = 100


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN_RE.match(text, position)
        if match is None or match.end() == position:
            start = len(text) - len(text[position:].lstrip())
            raise TermSyntaxError(start, "a term", text)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), start))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: List[Token], sig: Signature, text: str):
        self.tokens = tokens
        self.index = 0
        self.sig = sig
        self.text = text
        self.nesting = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, expected: str):
        raise TermSyntaxError(self.current.position, expected, self.text)

    def enter(self):
        self.nesting += 1
        if self.nesting > MAX_NESTING:
            self.fail(f"at most {MAX_NESTING} nested subterms")

    def require(self, allowed: bool, symbol: str):
        if not allowed:
            raise SignatureError(
                f"'{symbol}' at position {self.current.position} is not part of the {self.sig.value} signature"
            )

    def expression(self, min_prec: int = 1) -> Term:
        self.enter()
        left = self.prefix()
        while self.current.kind == "op" and self.current.text in _BINARY:
            prec, right_assoc = _BINARY[self.current.text]
            if prec < min_prec:
                break
            symbol = self.current.text
            if symbol == "->":
                self.require(self.sig is Signature.W, symbol)
            elif symbol == "(+)":
                self.require(self.sig is Signature.MV, symbol)
            self.advance()
            right = self.expression(prec if right_assoc else prec + 1)
            if symbol == "->":
                left = Impl(left, right)
            elif symbol == "(+)":
                left = OPlus(left, right)
            else:
                left = join(left, right, self.sig)
        self.nesting -= 1
        return left

    def prefix(self) -> Term:
        token = self.current
        if token.kind == "op" and token.text == "-":
            self.require(self.sig is Signature.MV, "-")
            self.advance()
            return UMinus(self.nested_prefix())
        if token.kind == "op" and token.text == "~":
            self.require(self.sig is Signature.W, "~")
            self.advance()
            return Neg(self.nested_prefix())
        return self.postfix()

    def nested_prefix(self) -> Term:
        self.enter()
        term = self.prefix()
        self.nesting -= 1
        return term

    def postfix(self) -> Term:
        term = self.atom()
        while self.current.kind == "op" and self.current.text in ("^+", "^-"):
            term = PosPart(term) if self.advance().text == "^+" else NegPart(term)
        return term

    def atom(self) -> Term:
        token = self.current
        if token.kind == "ident":
            self.advance()
            return Var(token.text)
        if token.kind == "const":
            if token.text == "1":
                self.advance()
                return ONE
            if token.text == "0":
                self.require(self.sig is Signature.MV, "0")
                self.advance()
                return ZERO
            self.fail("'0', '1' or a variable")
        if token.kind == "op" and token.text == "(":
            self.advance()
            inner = self.expression()
            if not (self.current.kind == "op" and self.current.text == ")"):
                self.fail("')'")
            self.advance()
            return inner
        if token.kind == "op" and token.text == "<->":
            self.fail("a term ('<->' is only allowed in proof scripts)")
        self.fail("a variable, constant, prefix operator or '('")


def parse(text: str, sig) -> Term:
    """
    Parse term text in the given signature.

    Args:
        text: Surface syntax
        sig: Signature or its name

    Returns:
        Term: The parsed tree with joins expanded

    Raises:
        TermSyntaxError: On malformed input
        SignatureError: On connectives foreign to sig
    """
    sig = Signature.parse(sig)
    parser = _Parser(tokenize(text), sig, text)
    term = parser.expression()
    if parser.current.kind != "end":
        if parser.current.text == "<->":
            parser.fail("end of input ('<->' is only allowed in proof scripts)")
        parser.fail("end of input")
    return term


def parse_biconditional(text: str, sig) -> Optional[Tuple[Term, Term]]:
    """
    Split text at a top-level ``<->`` and parse both sides.

    Returns:
        Optional[Tuple[Term, Term]]: The two sides, or None when text has
        no top-level biconditional
    """
    tokens = tokenize(text)
    depth = 0
    split_at = []
    for token in tokens:
        if token.kind != "op":
            continue
        if token.text == "(":
            depth += 1
        elif token.text == ")":
            depth -= 1
        elif token.text == "<->" and depth == 0:
            split_at.append(token.position)
    if not split_at:
        return None
    if len(split_at) > 1:
        raise TermSyntaxError(split_at[1], "at most one top-level '<->'", text)
    cut = split_at[0]
    left_text, right_text = text[:cut], text[cut + 3:]
    if not left_text.strip():
        raise TermSyntaxError(cut, "a term before '<->'", text)
    return parse(left_text, sig), parse(right_text, sig)
