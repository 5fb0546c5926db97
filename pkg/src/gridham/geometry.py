"""Grid geometry: coordinates, coloring, shapes, membership and adjacency.

Shapes are stored as integer parameters plus a tag.  Membership, adjacency
and vertex counts are computed arithmetically, so shapes with millions of
vertices cost constant memory.  Coordinates are global and 1-based, with
(1,1) the lower-left corner of the bounding rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Union

from .errors import OutsideShapeError


class Coord(NamedTuple):
    x: int
    y: int


class Color(Enum):
    WHITE = "white"
    BLACK = "black"

    @property
    def opposite(self) -> "Color":
        return Color.BLACK if self is Color.WHITE else Color.WHITE


def color_of(v: Coord) -> Color:
    """Lattice 2-coloring: white where x+y is even, black otherwise."""
    return Color.WHITE if (v[0] + v[1]) % 2 == 0 else Color.BLACK


@dataclass(frozen=True)
class RectShape:
    """Rectangular grid graph on all lattice points 1 <= x <= m, 1 <= y <= n."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"rectangle dimensions must be >= 1, got {self.m}x{self.n}")


@dataclass(frozen=True)
class LShape:
    """L-shaped grid graph: vertical stroke of width m plus a bottom-right foot.

    The bounding rectangle is (3m-2) x (5n-4); the removed block is
    columns m+1..3m-2 over rows n+1..5n-4.
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m < 3 or self.n < 3:
            raise ValueError(f"L-shape parameters must be >= 3, got {self.m}x{self.n}")


@dataclass(frozen=True)
class CShape:
    """C-shaped grid graph: vertical stroke plus bottom and top right arms.

    The bounding rectangle is (3m-2) x (5n-4); the removed block is
    columns m+1..3m-2 over rows n+1..4n-4, leaving an arm of height n at the
    bottom and another at the top.
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m < 3 or self.n < 3:
            raise ValueError(f"C-shape parameters must be >= 3, got {self.m}x{self.n}")


Shape = Union[RectShape, LShape, CShape]


def shape_kind(shape: Shape) -> str:
    """Tag used in CLI arguments and JSON output: rect, L or C."""
    if isinstance(shape, RectShape):
        return "rect"
    if isinstance(shape, LShape):
        return "L"
    return "C"


def make_shape(kind: str, m: int, n: int) -> Shape:
    if kind == "rect":
        return RectShape(m, n)
    if kind == "L":
        return LShape(m, n)
    if kind == "C":
        return CShape(m, n)
    raise ValueError(f"unknown shape kind {kind!r}")


def bounding_rect(shape: Shape) -> RectShape:
    """Smallest rectangular grid graph containing the shape."""
    if isinstance(shape, RectShape):
        return shape
    return RectShape(3 * shape.m - 2, 5 * shape.n - 4)


def contains(shape: Shape, v: Coord) -> bool:
    """Whether v belongs to the shape's vertex set."""
    x, y = v
    if isinstance(shape, RectShape):
        return 1 <= x <= shape.m and 1 <= y <= shape.n
    m, n = shape.m, shape.n
    if not (1 <= x <= 3 * m - 2 and 1 <= y <= 5 * n - 4):
        return False
    if x <= m:
        return True
    if isinstance(shape, LShape):
        return y <= n
    return y <= n or y >= 4 * n - 3


_OFFSETS = (Coord(1, 0), Coord(-1, 0), Coord(0, 1), Coord(0, -1))


def neighbors(shape: Shape, v: Coord) -> set[Coord]:
    """Unit-distance vertices of the shape around v (at most four)."""
    if not contains(shape, v):
        raise OutsideShapeError(f"{tuple(v)} is outside {shape}")
    x, y = v
    return {
        Coord(x + dx, y + dy)
        for dx, dy in _OFFSETS
        if contains(shape, Coord(x + dx, y + dy))
    }


def vertex_count(shape: Shape) -> int:
    if isinstance(shape, RectShape):
        return shape.m * shape.n
    m, n = shape.m, shape.n
    if isinstance(shape, LShape):
        return m * (5 * n - 4) + (2 * m - 2) * n
    return m * (5 * n - 4) + 2 * (2 * m - 2) * n


def is_even_sized(shape: Shape) -> bool:
    """Parity of the shape's corresponding rectangle (the bounding box for L/C).

    The removed blocks of L and C shapes always have even cardinality, so this
    equals the parity of the shape's own vertex count.
    """
    rect = bounding_rect(shape)
    return (rect.m * rect.n) % 2 == 0


def color_compatible(shape: Shape, s: Coord, t: Coord) -> bool:
    """Endpoint color test a Hamiltonian path must satisfy.

    Even-sized shapes have equally many black and white vertices, so the path
    ends must differ in color; odd-sized shapes have one extra white vertex,
    so both ends must be white.
    """
    for v in (s, t):
        if not contains(shape, v):
            raise OutsideShapeError(f"{tuple(v)} is outside {shape}")
    if s == t:
        raise ValueError("endpoints must be distinct")
    if is_even_sized(shape):
        return color_of(s) != color_of(t)
    return color_of(s) is Color.WHITE and color_of(t) is Color.WHITE


def iter_vertices(shape: Shape) -> Iterator[Coord]:
    """All vertices of the shape in (y, x) lexicographic order."""
    rect = bounding_rect(shape)
    for y in range(1, rect.n + 1):
        for x in range(1, rect.m + 1):
            v = Coord(x, y)
            if contains(shape, v):
                yield v


class Region(NamedTuple):
    """Axis-aligned sub-rectangle of a shape, in global coordinates.

    Localization maps the region bijectively onto RectShape(m, n) with the
    lower-left corner at (1,1).
    """

    x0: int
    y0: int
    m: int
    n: int

    @property
    def x1(self) -> int:
        return self.x0 + self.m - 1

    @property
    def y1(self) -> int:
        return self.y0 + self.n - 1

    @property
    def count(self) -> int:
        return self.m * self.n

    def rect(self) -> RectShape:
        return RectShape(self.m, self.n)

    def contains(self, v: Coord) -> bool:
        return self.x0 <= v[0] <= self.x1 and self.y0 <= v[1] <= self.y1

    def localize(self, v: Coord) -> Coord:
        return Coord(v[0] - self.x0 + 1, v[1] - self.y0 + 1)

    def globalize(self, v: Coord) -> Coord:
        return Coord(v[0] + self.x0 - 1, v[1] + self.y0 - 1)


def region_of(shape: RectShape) -> Region:
    return Region(1, 1, shape.m, shape.n)


@dataclass(frozen=True)
class ProblemInstance:
    """A shape with two distinct endpoint vertices."""

    shape: Shape
    s: Coord
    t: Coord

    def __post_init__(self):
        for v in (self.s, self.t):
            if not contains(self.shape, v):
                raise OutsideShapeError(f"endpoint {tuple(v)} is outside {self.shape}")
        if self.s == self.t:
            raise ValueError("endpoints must be distinct")
