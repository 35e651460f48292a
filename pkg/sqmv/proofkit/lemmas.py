"""
Derived rules available to ``LEM`` justifications.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple, Union

from sqmv.proofkit.script import Item, ProofScript, System
from sqmv.syntax.terms import Term


@dataclass(frozen=True)
class DerivedRule:
    """Hypothesis schemas entail the conclusion schema (core form)"""
    lemma_id: str
    system: System
    hypotheses: Tuple[Term, ...]
    conclusion: Item
    certificate: Optional[ProofScript] = field(default=None, compare=False, repr=False)

    @property
    def arity(self) -> int:
        return len(self.hypotheses)


@dataclass(frozen=True)
class ReplacementRule:
    """
    Replacement of equivalents: from p <-> q and p1 <-> r1 infer
    p' <-> q' where p', q' replace occurrences of p1 in p, q by r1.
    """
    lemma_id: str
    system: System = System.SQL
    requires: Tuple[str, ...] = ("1", "2", "5")
    certificate: Optional[ProofScript] = field(default=None, compare=False, repr=False)


Lemma = Union[DerivedRule, ReplacementRule]


@dataclass(frozen=True)
class Registry:
    """Immutable lemma registry; extending returns a new registry"""
    entries: Tuple[Lemma, ...] = ()

    def get(self, lemma_id: str) -> Optional[Lemma]:
        for entry in self.entries:
            if entry.lemma_id == lemma_id:
                return entry
        return None

    def __contains__(self, lemma_id: str) -> bool:
        return self.get(lemma_id) is not None

    def __iter__(self) -> Iterator[Lemma]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(entry.lemma_id for entry in self.entries)

    def with_entry(self, entry: Lemma) -> "Registry":
        return Registry(self.entries + (entry,))

    def as_dict(self) -> Dict[str, Lemma]:
        return {entry.lemma_id: entry for entry in self.entries}


EMPTY_REGISTRY = Registry()
