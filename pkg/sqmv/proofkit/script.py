"""
Proof scripts and their text format.

    # comment
    system: sqL*            (or L*)
    lemma: 3                (optional, registers the script as a derived rule)
    meta: replacement       (optional, marks the replacement meta-rule)
    hyp: p -> q             (zero or more hypotheses)
    1. p -> q ; HYP 1
    2. (r -> r) -> (p -> q) ; RULE Reg 1
    3. (p -> q) <-> (~q -> ~p) ; AX Q1
    4. ~q -> ~p ; LEM 1 1

A line holds a formula or a biconditional ``A <-> B``; a biconditional
stands for the two formulas A -> B and B -> A.
"""
import re
from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Optional, Tuple

from sqmv.syntax.parser import parse, parse_biconditional
from sqmv.syntax.printer import print_term
from sqmv.syntax.terms import Impl, Signature, Term
from sqmv.utils.errors import ScriptFormatError, SqmvError


class System(str, Enum):
    SQL = "sqL*"
    LSTAR = "L*"

    @classmethod
    def parse(cls, text: str) -> "System":
        normalized = text.strip().lower().rstrip("*")
        if normalized in ("sql", "sqlstar"):
            return cls.SQL
        if normalized in ("l", "lstar"):
            return cls.LSTAR
        raise ScriptFormatError(f"unknown proof system '{text}'")


@dataclass(frozen=True)
class Item:
    """A formula, or a biconditional when right is set"""
    left: Term
    right: Optional[Term] = None

    @property
    def is_biconditional(self) -> bool:
        return self.right is not None

    @property
    def formulas(self) -> Tuple[Term, ...]:
        if self.right is None:
            return (self.left,)
        return (Impl(self.left, self.right), Impl(self.right, self.left))

    def map(self, function) -> "Item":
        return Item(function(self.left), None if self.right is None else function(self.right))

    def text(self) -> str:
        if self.right is None:
            return print_term(self.left)
        return f"{print_term(self.left)} <-> {print_term(self.right)}"

    @classmethod
    def parse(cls, text: str) -> "Item":
        sides = parse_biconditional(text, Signature.W)
        if sides is None:
            return cls(parse(text, Signature.W))
        return cls(*sides)


class JustificationKind(str, Enum):
    AX = "AX"
    HYP = "HYP"
    RULE = "RULE"
    LEM = "LEM"


@dataclass(frozen=True)
class Justification:
    kind: JustificationKind
    name: str
    premises: Tuple[int, ...] = ()

    def text(self) -> str:
        cited = ",".join(str(index) for index in self.premises)
        return " ".join(part for part in (self.kind.value, self.name, cited) if part)


@dataclass(frozen=True)
class ProofLine:
    number: int
    item: Item
    justification: Justification

    def text(self) -> str:
        return f"{self.number}. {self.item.text()} ; {self.justification.text()}"


@dataclass(frozen=True)
class ProofScript:
    system: System
    hypotheses: Tuple[Item, ...] = ()
    lines: Tuple[ProofLine, ...] = ()
    lemma: Optional[str] = None
    meta: Optional[str] = None
    name: str = "<script>"

    @property
    def conclusion(self) -> Item:
        if not self.lines:
            raise ScriptFormatError(f"{self.name} has no lines")
        return self.lines[-1].item

    def with_lines(self, lines) -> "ProofScript":
        return replace(self, lines=tuple(lines))


_LINE_RE = re.compile(r"^\s*(\d+)\s*\.\s*(.+?)\s*;\s*(.+?)\s*$")
_HEADER_RE = re.compile(r"^\s*(system|lemma|meta|hyp)\s*:\s*(.*?)\s*$", re.IGNORECASE)


def parse_justification(text: str, number: int = 0) -> Justification:
    parts = text.replace("′", "'").split(None, 1)
    try:
        kind = JustificationKind(parts[0].upper())
    except (ValueError, IndexError):
        raise ScriptFormatError(f"line {number}: unknown justification '{text}'")
    rest = parts[1].strip() if len(parts) > 1 else ""
    if kind is JustificationKind.HYP:
        name, cited = rest, ""
    else:
        name, _, cited = rest.partition(" ")
    if not name:
        raise ScriptFormatError(f"line {number}: justification '{text}' names nothing")
    try:
        premises = tuple(int(piece) for piece in re.split(r"[,\s]+", cited.strip()) if piece)
    except ValueError:
        raise ScriptFormatError(f"line {number}: premise list '{cited}' is not a list of line numbers")
    return Justification(kind, name, premises)


def parse_script(text: str, name: str = "<script>") -> ProofScript:
    """
    Read a proof script.

    Args:
        text: Script text
        name: Label used in messages

    Returns:
        ProofScript: The parsed script

    Raises:
        ScriptFormatError: If the text does not follow the format
    """
    system = None
    lemma = meta = None
    hypotheses: List[Item] = []
    lines: List[ProofLine] = []
    for row, raw in enumerate(text.splitlines(), 1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        header = _HEADER_RE.match(stripped)
        try:
            if header:
                key, value = header.group(1).lower(), header.group(2)
                if key == "system":
                    system = System.parse(value)
                elif key == "lemma":
                    lemma = value
                elif key == "meta":
                    meta = value
                else:
                    hypotheses.append(Item.parse(value))
                continue
            match = _LINE_RE.match(stripped)
            if match is None:
                raise ScriptFormatError(f"{name}:{row}: expected '<n>. <formula> ; <justification>'")
            number = int(match.group(1))
            if number != len(lines) + 1:
                raise ScriptFormatError(f"{name}:{row}: expected line number {len(lines) + 1}, got {number}")
            lines.append(ProofLine(number, Item.parse(match.group(2)),
                                   parse_justification(match.group(3), number)))
        except ScriptFormatError:
            raise
        except SqmvError as e:
            raise ScriptFormatError(f"{name}:{row}: {e.detail}")
    if system is None:
        raise ScriptFormatError(f"{name}: missing 'system:' header")
    return ProofScript(system, tuple(hypotheses), tuple(lines), lemma, meta, name)


def format_script(script: ProofScript) -> str:
    """Render a script in the text format"""
    rows = [f"system: {script.system.value}"]
    if script.lemma:
        rows.append(f"lemma: {script.lemma}")
    if script.meta:
        rows.append(f"meta: {script.meta}")
    rows.extend(f"hyp: {item.text()}" for item in script.hypotheses)
    rows.extend(line.text() for line in script.lines)
    return "\n".join(rows) + "\n"


class ScriptBuilder:
    """Accumulates lines for generated scripts"""

    def __init__(self, system: System, hypotheses: Tuple[Item, ...] = (), name: str = "<generated>"):
        self.system = system
        self.hypotheses = tuple(hypotheses)
        self.name = name
        self.lines: List[ProofLine] = []

    def add(self, item: Item, kind: JustificationKind, name: str, *premises: int) -> int:
        number = len(self.lines) + 1
        self.lines.append(ProofLine(number, item, Justification(kind, name, tuple(premises))))
        return number

    def formula(self, term: Term, kind: JustificationKind, name: str, *premises: int) -> int:
        return self.add(Item(term), kind, name, *premises)

    def extend(self, script: ProofScript) -> int:
        """Append another script's lines, renumbering its premise references"""
        offset = len(self.lines)
        for line in script.lines:
            justification = line.justification
            if justification.kind is not JustificationKind.HYP:
                justification = replace(justification,
                                        premises=tuple(index + offset for index in justification.premises))
            self.lines.append(ProofLine(line.number + offset, line.item, justification))
        return len(self.lines)

    def build(self) -> ProofScript:
        return ProofScript(self.system, self.hypotheses, tuple(self.lines), name=self.name)
