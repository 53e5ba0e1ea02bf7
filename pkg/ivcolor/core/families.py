"""Parameterized graph families and their realization as ``Graph`` objects.

Every composite family is a Cartesian product of simpler factors and is
realized through :func:`cartesian_product`, so the flat vertex id of a
structured coordinate is always row-major: the first factor varies slowest.
For a two-factor family, vertex ``v_j^(i)`` (row ``i``, column ``j``, both
1-based) is ``(i - 1) * columns + (j - 1)``. A hypercube vertex id is its bit
vector with the first factor as the most significant bit.

Degree, diameter and bipartiteness are also available symbolically, without
building the graph.
"""

from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence, Tuple

from ..errors import DomainError
from .graph import Graph, cartesian_product


class FamilySpec:
    """Base class of every family description."""

    name = "family"

    def validate(self) -> None:
        raise NotImplementedError

    def factors(self) -> Optional[List["FamilySpec"]]:
        """Product factors for composite families, ``None`` for basic ones."""
        return None

    def params(self) -> Tuple[int, ...]:
        raise NotImplementedError

    @property
    def label(self) -> str:
        return f"{self.name}-{'x'.join(str(p) for p in self.params())}"

    # -- coordinate scheme ---------------------------------------------------

    def shape(self) -> Tuple[int, ...]:
        """Size of each coordinate axis."""
        parts = self.factors()
        if parts is None:
            return (self.vertex_count,)
        return tuple(f.vertex_count for f in parts)

    def vertex_id(self, *coords: int) -> int:
        """Flat id of a 0-based structured coordinate."""
        shape = self.shape()
        if len(coords) != len(shape):
            raise DomainError("coords", f"expected {len(shape)} coordinates, got {len(coords)}")
        flat = 0
        for axis, (c, size) in enumerate(zip(coords, shape)):
            if not 0 <= c < size:
                raise DomainError(f"coords[{axis}]", f"{c} is not in [0, {size})")
            flat = flat * size + c
        return flat

    def coordinates(self, vid: int) -> Tuple[int, ...]:
        shape = self.shape()
        if not 0 <= vid < self.vertex_count:
            raise DomainError("vertex", f"{vid} is not in [0, {self.vertex_count})")
        coords = []
        for size in reversed(shape):
            vid, c = divmod(vid, size)
            coords.append(c)
        return tuple(reversed(coords))

    # -- symbolic metrics ----------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return reduce(lambda acc, f: acc * f.vertex_count, self.factors(), 1)

    @property
    def edge_count(self) -> int:
        parts = self.factors()
        total_v = self.vertex_count
        return sum(total_v // f.vertex_count * f.edge_count for f in parts)

    @property
    def max_degree(self) -> int:
        return sum(f.max_degree for f in self.factors())

    @property
    def diameter(self) -> int:
        return sum(f.diameter for f in self.factors())

    @property
    def bipartite(self) -> bool:
        return all(f.bipartite for f in self.factors())

    @property
    def regular_degree(self) -> Optional[int]:
        degrees = [f.regular_degree for f in self.factors()]
        if any(d is None for d in degrees):
            return None
        return sum(degrees)

    def realize(self) -> Graph:
        self.validate()
        graphs = [f.realize() for f in self.factors()]
        return reduce(cartesian_product, graphs)


def _require(name: str, value: int, minimum: int) -> None:
    if not isinstance(value, int) or value < minimum:
        raise DomainError(name, f"must be an integer >= {minimum}, got {value!r}")


@dataclass(frozen=True)
class Path(FamilySpec):
    n: int
    name = "path"

    def validate(self):
        _require("n", self.n, 1)

    def params(self):
        return (self.n,)

    @property
    def vertex_count(self):
        return self.n

    @property
    def edge_count(self):
        return self.n - 1

    @property
    def max_degree(self):
        return min(self.n - 1, 2)

    @property
    def diameter(self):
        return self.n - 1

    @property
    def bipartite(self):
        return True

    @property
    def regular_degree(self):
        return self.n - 1 if self.n <= 2 else None

    def realize(self):
        self.validate()
        return Graph(self.n, tuple((k, k + 1) for k in range(self.n - 1)))


@dataclass(frozen=True)
class Cycle(FamilySpec):
    n: int
    name = "cycle"

    def validate(self):
        _require("n", self.n, 3)

    def params(self):
        return (self.n,)

    @property
    def vertex_count(self):
        return self.n

    @property
    def edge_count(self):
        return self.n

    @property
    def max_degree(self):
        return 2

    @property
    def diameter(self):
        return self.n // 2

    @property
    def bipartite(self):
        return self.n % 2 == 0

    @property
    def regular_degree(self):
        return 2

    def realize(self):
        self.validate()
        edges = [(k, k + 1) for k in range(self.n - 1)] + [(0, self.n - 1)]
        return Graph.from_edges(self.n, edges)


@dataclass(frozen=True)
class Complete(FamilySpec):
    n: int
    name = "complete"

    def validate(self):
        _require("n", self.n, 1)

    def params(self):
        return (self.n,)

    @property
    def vertex_count(self):
        return self.n

    @property
    def edge_count(self):
        return self.n * (self.n - 1) // 2

    @property
    def max_degree(self):
        return self.n - 1

    @property
    def diameter(self):
        return 1 if self.n > 1 else 0

    @property
    def bipartite(self):
        return self.n <= 2

    @property
    def regular_degree(self):
        return self.n - 1

    def realize(self):
        self.validate()
        return Graph(self.n, tuple((u, v) for u in range(self.n) for v in range(u + 1, self.n)))


@dataclass(frozen=True)
class CompleteBipartite(FamilySpec):
    """K_{r,s}; the r-side is ``0..r-1`` and the s-side is ``r..r+s-1``."""

    r: int
    s: int
    name = "complete-bipartite"

    def validate(self):
        _require("r", self.r, 1)
        _require("s", self.s, 1)

    def params(self):
        return (self.r, self.s)

    def shape(self):
        return (self.r + self.s,)

    @property
    def vertex_count(self):
        return self.r + self.s

    @property
    def edge_count(self):
        return self.r * self.s

    @property
    def max_degree(self):
        return max(self.r, self.s)

    @property
    def diameter(self):
        return 1 if self.r == self.s == 1 else 2

    @property
    def bipartite(self):
        return True

    @property
    def regular_degree(self):
        return self.r if self.r == self.s else None

    def realize(self):
        self.validate()
        return Graph(
            self.r + self.s,
            tuple((i, self.r + j) for i in range(self.r) for j in range(self.s)),
        )


@dataclass(frozen=True)
class Hypercube(FamilySpec):
    n: int
    name = "hypercube"

    def validate(self):
        _require("n", self.n, 1)

    def params(self):
        return (self.n,)

    def factors(self):
        return [Path(2)] * self.n


@dataclass(frozen=True)
class Grid(FamilySpec):
    dims: Tuple[int, ...]
    name = "grid"

    def __init__(self, dims: Sequence[int]):
        object.__setattr__(self, "dims", tuple(dims))

    def validate(self):
        if not self.dims:
            raise DomainError("dims", "a grid needs at least one dimension")
        for axis, size in enumerate(self.dims):
            _require(f"dims[{axis}]", size, 1)

    def params(self):
        return self.dims

    def factors(self):
        return [Path(size) for size in self.dims]


@dataclass(frozen=True)
class Cylinder(FamilySpec):
    """P_m □ C_n: ``m`` rings of length ``n``."""

    m: int
    n: int
    name = "cylinder"

    def validate(self):
        _require("m", self.m, 1)
        _require("n", self.n, 3)

    def params(self):
        return (self.m, self.n)

    def factors(self):
        return [Path(self.m), Cycle(self.n)]


@dataclass(frozen=True)
class Torus(FamilySpec):
    """C_m □ C_n."""

    m: int
    n: int
    name = "torus"

    def validate(self):
        _require("m", self.m, 3)
        _require("n", self.n, 3)

    def params(self):
        return (self.m, self.n)

    def factors(self):
        return [Cycle(self.m), Cycle(self.n)]


@dataclass(frozen=True)
class Product(FamilySpec):
    left: FamilySpec
    right: FamilySpec
    name = "product"

    def validate(self):
        self.left.validate()
        self.right.validate()

    def params(self):
        return self.left.params() + self.right.params()

    @property
    def label(self):
        return f"{self.left.label}--{self.right.label}"

    def factors(self):
        return [self.left, self.right]


def realize(spec: FamilySpec) -> Graph:
    return spec.realize()


FAMILY_NAMES = {
    "path": (Path, 1),
    "cycle": (Cycle, 1),
    "complete": (Complete, 1),
    "complete-bipartite": (CompleteBipartite, 2),
    "hypercube": (Hypercube, 1),
    "cylinder": (Cylinder, 2),
    "torus": (Torus, 2),
}


def parse_params(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise DomainError("params", f"expected comma-separated integers, got {text!r}") from None


def family_from_name(name: str, params: Sequence[int]) -> FamilySpec:
    """Build a spec from a CLI family name and its integer parameters."""
    if name == "grid":
        spec = Grid(params)
    elif name in FAMILY_NAMES:
        cls, arity = FAMILY_NAMES[name]
        if len(params) != arity:
            raise DomainError("params", f"{name} takes {arity} parameter(s), got {len(params)}")
        spec = cls(*params)
    else:
        known = ", ".join(sorted(list(FAMILY_NAMES) + ["grid"]))
        raise DomainError("family", f"unknown family {name!r}; expected one of {known}")
    spec.validate()
    return spec
