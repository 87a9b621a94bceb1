"""Generator rosters for the graded coordinate algebra.

A roster fixes base dimension n and fiber dimension k and enumerates eight
generator families in a canonical order that never changes:

    x_a   base coordinates          degree (0, 0, 0)
    y_mu  fiber coordinates         degree (0, 0, 0)
    c^mu  ghosts                    degree (+1, +1, 0)
    b_mu  ghost momenta             degree (-1, 0, +1)
    x+_a  conjugate to x            degree (+1, 0, 0)
    y+_mu conjugate to y            degree (+1, 0, 0)
    c+_mu conjugate to c            degree (0, -1, 0)
    b+^mu conjugate to b            degree (+2, 0, -1)

Degrees are triples (total, ghost, momentum).  Parity of a generator is its
total degree mod 2; odd generators square to zero.  Text tokens are x1, y1,
c1, b1, xd1, yd1, cd1, bd1 with 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass

FAMILIES = ("x", "y", "c", "b", "xd", "yd", "cd", "bd")

# (total, ghost, momentum) per family
_FAMILY_DEGREES = {
    "x": (0, 0, 0),
    "y": (0, 0, 0),
    "c": (1, 1, 0),
    "b": (-1, 0, 1),
    "xd": (1, 0, 0),
    "yd": (1, 0, 0),
    "cd": (0, -1, 0),
    "bd": (2, 0, -1),
}

# coordinate family -> conjugate (daggered) family
CONJUGATE = {"x": "xd", "y": "yd", "c": "cd", "b": "bd"}

DAGGER_FAMILIES = ("xd", "yd", "cd", "bd")


@dataclass(frozen=True)
class Generator:
    gid: int
    name: str
    family: str
    index: int  # 1-based within its family
    total: int
    ghost: int
    momentum: int

    @property
    def odd(self) -> bool:
        return self.total % 2 != 0


class GeneratorRoster:
    """Immutable roster of generators for fixed (n_base, k_fiber)."""

    def __init__(self, n_base: int, k_fiber: int):
        if n_base < 0 or k_fiber < 1:
            raise ValueError("need n_base >= 0 and k_fiber >= 1")
        self.n_base = n_base
        self.k_fiber = k_fiber
        gens: list[Generator] = []
        for family in FAMILIES:
            count = n_base if family in ("x", "xd") else k_fiber
            t, g, m = _FAMILY_DEGREES[family]
            for i in range(1, count + 1):
                gens.append(Generator(len(gens), f"{family}{i}", family, i, t, g, m))
        self.gens = tuple(gens)
        self.size = len(gens)
        self._by_name = {gen.name: gen for gen in self.gens}
        self.odd_mask = tuple(gen.odd for gen in self.gens)
        self.totals = tuple(gen.total for gen in self.gens)
        self.ghosts = tuple(gen.ghost for gen in self.gens)
        self.momenta = tuple(gen.momentum for gen in self.gens)
        # conjugate coordinate/dagger pairs, in coordinate order
        self.pairs = tuple(
            (self._by_name[f"{fam}{i}"].gid, self._by_name[f"{CONJUGATE[fam]}{i}"].gid)
            for fam in ("x", "y", "c", "b")
            for i in range(1, (n_base if fam == "x" else k_fiber) + 1)
        )
        self.dagger_ids = frozenset(
            gen.gid for gen in self.gens if gen.family in DAGGER_FAMILIES
        )
        # ids used by the two Koszul contractions
        self.family_ids = {
            fam: tuple(gen.gid for gen in self.gens if gen.family == fam)
            for fam in FAMILIES
        }

    def __repr__(self):
        return f"GeneratorRoster(n_base={self.n_base}, k_fiber={self.k_fiber})"

    def __eq__(self, other):
        return (
            isinstance(other, GeneratorRoster)
            and other.n_base == self.n_base
            and other.k_fiber == self.k_fiber
        )

    def __hash__(self):
        return hash((self.n_base, self.k_fiber))

    def generator(self, name: str) -> Generator:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r} on {self!r}") from None

    def has_generator(self, name: str) -> bool:
        return name in self._by_name

    def coordinate_names(self) -> tuple[str, ...]:
        """Names of the degree-0 coordinates x1..xn, y1..yk, in canonical order."""
        return tuple(
            gen.name for gen in self.gens if gen.family in ("x", "y")
        )
