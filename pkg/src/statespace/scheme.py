from dataclasses import dataclass

from core.errors import ConstraintError


@dataclass(frozen=True)
class AtomLevelScheme:
    """Ordered single-atom levels with the Rydberg-flagged subset."""

    levels: tuple[str, ...]
    rydberg_labels: frozenset[str]

    def __post_init__(self):
        if len(set(self.levels)) != len(self.levels) or not self.levels:
            raise ConstraintError(f"Levels must be unique and nonempty: {self.levels}")
        if any(len(level) != 1 for level in self.levels):
            raise ConstraintError(f"Level labels must be single characters: {self.levels}")
        if not self.rydberg_labels or not self.rydberg_labels <= set(self.levels):
            raise ConstraintError(
                f"Rydberg labels {sorted(self.rydberg_labels)} must be a nonempty "
                f"subset of {self.levels}"
            )

    def rank(self, level: str) -> int:
        return self.levels.index(level)

    def sort_key(self, label: str) -> tuple[int, ...]:
        """Lexicographic key following the level order (g < e < r)."""
        return tuple(self.rank(c) for c in label)


TWO_LEVEL = AtomLevelScheme(("g", "r"), frozenset({"r"}))
THREE_LEVEL = AtomLevelScheme(("g", "e", "r"), frozenset({"r"}))
