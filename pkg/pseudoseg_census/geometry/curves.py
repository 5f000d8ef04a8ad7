"""
Curve types for the geometry kernel.

All coordinates are exact rationals (fractions.Fraction, always in reduced
form with a positive denominator). A curve is a polyline whose vertex
x-coordinates strictly increase, which is exactly the x-monotone property.
"""

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from ..exceptions import CensusError


Rat = Fraction


def as_rat(value):
    """
    Convert a value to an exact rational.

    Args:
        value: int, Fraction, [numerator, denominator] pair, or a string
            such as '3/4', '-2' or '0.125'. Floats are rejected.

    Returns:
        Fraction: The value in canonical reduced form.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise CensusError(f"Inexact coordinate {value!r}; use integers or rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, (list, tuple)) and len(value) == 2:
        numerator, denominator = value
        if not isinstance(numerator, int) or not isinstance(denominator, int):
            raise CensusError(f"Rational pair must hold integers: {value!r}")
        if denominator == 0:
            raise CensusError(f"Zero denominator in {value!r}")
        return Fraction(numerator, denominator)
    raise CensusError(f"Cannot read {value!r} as a rational")


@dataclass(frozen=True)
class MonotoneCurve:
    """
    Exact piecewise-linear x-monotone curve.

    Attributes:
        id (str): Curve label, unique within a family.
        vertices (tuple): ((x, y), ...) with strictly increasing x.
    """

    id: str
    vertices: tuple

    def __post_init__(self):
        points = tuple((as_rat(x), as_rat(y)) for x, y in self.vertices)
        if len(points) < 2:
            raise CensusError(f"Curve {self.id} needs at least 2 vertices")
        for (x_prev, _), (x_next, _) in zip(points, points[1:]):
            if x_next <= x_prev:
                raise CensusError(
                    f"Curve {self.id} is not x-monotone: x={x_next} follows x={x_prev}"
                )
        object.__setattr__(self, 'id', str(self.id))
        object.__setattr__(self, 'vertices', points)

    @classmethod
    def segment(cls, label, start, end):
        """Build a one-segment curve from two (x, y) points."""
        return cls(label, (start, end))

    @cached_property
    def xs(self):
        return tuple(x for x, _ in self.vertices)

    @cached_property
    def ys(self):
        return tuple(y for _, y in self.vertices)

    @property
    def x_min(self):
        return self.vertices[0][0]

    @property
    def x_max(self):
        return self.vertices[-1][0]

    @cached_property
    def y_min(self):
        return min(self.ys)

    @cached_property
    def y_max(self):
        return max(self.ys)

    @property
    def left_endpoint(self):
        return self.vertices[0]

    @property
    def right_endpoint(self):
        return self.vertices[-1]

    def segment_index(self, x):
        """
        Index of the segment containing abscissa x (vertex abscissas map to the
        segment on their left, except the first vertex).
        """
        i = bisect_left(self.xs, x)
        return min(max(i - 1, 0), len(self.vertices) - 2)

    def y_at(self, x):
        """
        Exact height of the curve at abscissa x.

        Args:
            x (Fraction): Abscissa within [x_min, x_max].

        Returns:
            Fraction: The y-coordinate.
        """
        xs = self.xs
        if x < xs[0] or x > xs[-1]:
            raise CensusError(f"x={x} outside the x-range of curve {self.id}")
        i = bisect_left(xs, x)
        if xs[i] == x:
            return self.ys[i]
        x0, y0 = self.vertices[i - 1]
        x1, y1 = self.vertices[i]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def clip(self, x0, x1):
        """
        Restrict the curve to the vertical strip [x0, x1].

        Returns:
            MonotoneCurve or None: The clipped curve, or None when the curve
            meets the strip in at most one abscissa.
        """
        lo = max(as_rat(x0), self.x_min)
        hi = min(as_rat(x1), self.x_max)
        if lo >= hi:
            return None
        inner = [(x, y) for x, y in self.vertices if lo < x < hi]
        return MonotoneCurve(self.id, [(lo, self.y_at(lo))] + inner + [(hi, self.y_at(hi))])

    def translated(self, dx=0, dy=0):
        dx, dy = as_rat(dx), as_rat(dy)
        return MonotoneCurve(self.id, [(x + dx, y + dy) for x, y in self.vertices])


@dataclass(frozen=True)
class CurveFamily:
    """
    Labelled collection of x-monotone curves, optionally confined to a strip.

    Attributes:
        curves (tuple): MonotoneCurve objects with distinct labels.
        strip (tuple, optional): (x0, x1) with every vertex inside [x0, x1].
    """

    curves: tuple
    strip: tuple = field(default=None)

    def __post_init__(self):
        curves = tuple(self.curves)
        seen = set()
        for curve in curves:
            if curve.id in seen:
                raise CensusError(f"Duplicate curve label {curve.id}")
            seen.add(curve.id)
        object.__setattr__(self, 'curves', curves)

        if self.strip is not None:
            x0, x1 = (as_rat(value) for value in self.strip)
            if x0 >= x1:
                raise CensusError(f"Empty strip [{x0}, {x1}]")
            for curve in curves:
                if curve.x_min < x0 or curve.x_max > x1:
                    raise CensusError(f"Curve {curve.id} leaves the strip [{x0}, {x1}]")
            object.__setattr__(self, 'strip', (x0, x1))

    def __len__(self):
        return len(self.curves)

    def __iter__(self):
        return iter(self.curves)

    @property
    def labels(self):
        return tuple(curve.id for curve in self.curves)

    @cached_property
    def by_label(self):
        return {curve.id: curve for curve in self.curves}

    def subfamily(self, labels):
        """Family of the given labels, in the order given."""
        index = self.by_label
        return CurveFamily(tuple(index[label] for label in labels), self.strip)

    def with_strip(self, strip):
        return CurveFamily(self.curves, strip)

    def translated(self, dx=0, dy=0):
        strip = None
        if self.strip is not None:
            strip = (self.strip[0] + as_rat(dx), self.strip[1] + as_rat(dx))
        return CurveFamily(tuple(curve.translated(dx, dy) for curve in self.curves), strip)

    def affine(self, x_scale=1, x_shift=0, y_scale=1, y_shift=0, strip=None):
        """
        Apply x -> x_scale*x + x_shift, y -> y_scale*y + y_shift to every vertex.

        Args:
            x_scale (Rat): Positive x scale (keeps curves x-monotone).
            x_shift (Rat): x translation.
            y_scale (Rat): Nonzero y scale.
            y_shift (Rat): y translation.
            strip (tuple, optional): Strip of the result. Default maps the
                current strip, if any.

        Returns:
            CurveFamily: The transformed family.
        """
        sx, tx, sy, ty = (as_rat(v) for v in (x_scale, x_shift, y_scale, y_shift))
        if sx <= 0 or sy == 0:
            raise CensusError("affine map must keep x order and be invertible in y")
        curves = tuple(
            MonotoneCurve(curve.id, [(sx * x + tx, sy * y + ty) for x, y in curve.vertices])
            for curve in self.curves
        )
        if strip is None and self.strip is not None:
            strip = (sx * self.strip[0] + tx, sx * self.strip[1] + tx)
        return CurveFamily(curves, strip)

    def relabeled(self, mapping):
        """Rename curves with a label -> label mapping (must stay injective)."""
        curves = tuple(
            MonotoneCurve(mapping.get(curve.id, curve.id), curve.vertices)
            for curve in self.curves
        )
        return CurveFamily(curves, self.strip)
