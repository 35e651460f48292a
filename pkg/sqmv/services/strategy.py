"""
Sampling strategies for equation and entailment checks.

    exhaustive          every valuation of a finite model
    grid[:d]            first coordinates over {k/d}, simplest first
    random[:count]      seeded uniform rationals with bounded denominator
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from sqmv.config import get_settings
from sqmv.models.base import Model
from sqmv.utils.errors import StrategyError


class StrategyKind(str, Enum):
    EXHAUSTIVE = "exhaustive"
    GRID = "grid"
    RANDOM = "random"


@dataclass(frozen=True)
class Strategy:
    kind: StrategyKind
    denominator: Optional[int] = None
    count: Optional[int] = None
    seed: int = 0
    max_den: int = 120

    @classmethod
    def exhaustive(cls) -> "Strategy":
        return cls(StrategyKind.EXHAUSTIVE)

    @classmethod
    def grid(cls, denominator: Optional[int] = None) -> "Strategy":
        if denominator is not None and denominator < 1:
            raise StrategyError(f"grid denominator must be positive, got {denominator}")
        return cls(StrategyKind.GRID, denominator=denominator)

    @classmethod
    def random(cls, count: Optional[int] = None, seed: Optional[int] = None,
               max_den: Optional[int] = None) -> "Strategy":
        settings = get_settings()
        count = settings.random_samples if count is None else count
        if count < 1:
            raise StrategyError(f"sample count must be positive, got {count}")
        return cls(StrategyKind.RANDOM, count=count,
                   seed=settings.seed if seed is None else seed,
                   max_den=settings.max_den if max_den is None else max_den)

    @classmethod
    def parse(cls, text: Optional[str], seed: Optional[int] = None,
              max_den: Optional[int] = None) -> Optional["Strategy"]:
        """
        Read a strategy descriptor.

        Args:
            text: ``exhaustive``, ``grid``, ``grid:<d>``, ``random``,
                ``random:<count>`` or ``auto`` / None for the model default
            seed: Seed for random sampling
            max_den: Maximum denominator for random rationals

        Returns:
            Optional[Strategy]: None for ``auto``
        """
        if text is None or text.strip().lower() in ("", "auto"):
            return None
        kind, _, argument = text.strip().lower().partition(":")
        try:
            number = int(argument) if argument else None
        except ValueError:
            raise StrategyError(f"'{text}': expected an integer after ':'")
        if kind == StrategyKind.EXHAUSTIVE.value and number is None:
            return cls.exhaustive()
        if kind == StrategyKind.GRID.value:
            return cls.grid(number)
        if kind == StrategyKind.RANDOM.value:
            return cls.random(number, seed, max_den)
        raise StrategyError(f"unknown strategy '{text}'")

    def describe(self) -> str:
        if self.kind is StrategyKind.GRID:
            return "grid" if self.denominator is None else f"grid:{self.denominator}"
        if self.kind is StrategyKind.RANDOM:
            return f"random:{self.count}"
        return self.kind.value


def default_strategy(model: Model, seed: Optional[int] = None, max_den: Optional[int] = None) -> Strategy:
    """Exhaustive for finite models, seeded random sampling otherwise"""
    if model.is_finite:
        return Strategy.exhaustive()
    return Strategy.random(seed=seed, max_den=max_den)
