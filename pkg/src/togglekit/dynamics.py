"""Toggle dynamics on rational-valued poset arrays.

One engine drives both continuous regimes.  A ToggleAlgebra says how the
values on lower and upper covers aggregate (max and min for the
piecewise-linear case; sum and parallel sum for the birational case) and
how the aggregates recombine with the old value (L + R - v, resp.
L * R / v).  Swapping one instance for the other tropicalizes every
formula in the library at once, so the piecewise-linear theory is the
max-plus shadow of the birational theory by construction.

The poset is augmented with a virtual bottom below the minimal elements
and a virtual top above the maximal ones; their values are the algebra's
boundary pair, (0, 1) for piecewise-linear and (1, 1) for birational by
default.
"""

from functools import reduce

from .posets import OrderIdeal, PosetError
from .rational import ONE, ZERO, Rat


def _parallel(x, y):
    'Parallel sum xy/(x+y), the reciprocal-space addition.'
    return x * y / (x + y)


class ToggleAlgebra:
    'Aggregation rules and boundary values for one toggling regime.'

    __slots__ = (
        "name",
        "lower_aggregate",
        "upper_aggregate",
        "recombine",
        "bottom_value",
        "top_value",
        "positive_domain",
    )

    def __init__(self, name, lower_aggregate, upper_aggregate, recombine,
                 bottom_value, top_value, positive_domain=False):
        self.name = name
        self.lower_aggregate = lower_aggregate
        self.upper_aggregate = upper_aggregate
        self.recombine = recombine
        self.bottom_value = bottom_value
        self.top_value = top_value
        self.positive_domain = positive_domain

    @property
    def boundary(self):
        return (self.bottom_value, self.top_value)

    def reflect(self, v):
        'Unary dual: 1 - v piecewise-linearly, 1/v birationally.'
        return self.recombine(self.bottom_value, self.top_value, v)

    def combine(self, a, b):
        'Product-like pairing: a + b piecewise-linearly, a * b birationally.'
        return self.recombine(a, b, self.bottom_value)

    def difference(self, a, b):
        'Quotient-like pairing: a - b piecewise-linearly, a / b birationally.'
        return self.recombine(a, self.bottom_value, b)

    def fold_lower(self, values):
        return reduce(self.lower_aggregate, values)

    def fold_upper(self, values):
        return reduce(self.upper_aggregate, values)

    def array(self, poset, values, boundary=None):
        'Wrap values (anything Rat accepts) as a validated PArray.'
        values = tuple(Rat(v) for v in values)
        if boundary is None:
            boundary = self.boundary
        else:
            boundary = (Rat(boundary[0]), Rat(boundary[1]))
        if self.positive_domain and any(v <= 0 for v in values + boundary):
            bad = next(v for v in values + boundary if v <= 0)
            raise ValueError(f"{self.name} arrays must be strictly positive, got {bad}")
        return PArray(poset, values, boundary)

    def __repr__(self):
        return f"ToggleAlgebra({self.name!r})"


def pl_algebra(bottom=ZERO, top=ONE):
    'Max-plus toggling: L = max below, R = min above, v -> L + R - v.'
    return ToggleAlgebra(
        "pl", max, min, lambda L, R, v: L + R - v, Rat(bottom), Rat(top)
    )


def birational_algebra(bottom=ONE, top=ONE):
    'Subtraction-free toggling: L = sum below, R = parallel sum above, v -> L*R/v.'
    return ToggleAlgebra(
        "birational",
        lambda x, y: x + y,
        _parallel,
        lambda L, R, v: L * R / v,
        Rat(bottom),
        Rat(top),
        positive_domain=True,
    )


PL = pl_algebra()
BIRATIONAL = birational_algebra()


class PArray:
    """Rational values on the elements of a poset, in canonical index order.

    boundary is the (bottom, top) pair used for the augmented elements.
    Arrays are immutable and compare exactly.
    """

    __slots__ = ("poset", "values", "boundary")

    def __init__(self, poset, values, boundary=(ZERO, ONE)):
        values = tuple(Rat(v) for v in values)
        if len(values) != poset.size:
            raise ValueError(f"{len(values)} values for {poset.size} elements")
        self.poset = poset
        self.values = values
        self.boundary = (Rat(boundary[0]), Rat(boundary[1]))

    def _replace(self, values):
        new = object.__new__(PArray)
        new.poset = self.poset
        new.values = tuple(values)
        new.boundary = self.boundary
        return new

    def __getitem__(self, x):
        return self.values[x]

    def at(self, label):
        'Value at the element with this label, e.g. f.at((1,2)).'
        return self.values[self.poset.index_of(label)]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, PArray)
            and self.poset == other.poset
            and self.values == other.values
            and self.boundary == other.boundary
        )

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        inside = ", ".join(str(v) for v in self.values)
        return f"PArray({inside})"


def _toggled_value(alg, poset, values, boundary, x):
    lows = poset.lower_covers[x]
    ups = poset.upper_covers[x]
    left = alg.fold_lower([values[y] for y in lows]) if lows else boundary[0]
    right = alg.fold_upper([values[y] for y in ups]) if ups else boundary[1]
    return alg.recombine(left, right, values[x])


def toggle(alg, f, x):
    'Toggle one element: replace f(x) using its neighbours in the augmented poset.'
    poset = f.poset
    if not 0 <= x < poset.size:
        raise PosetError(f"element index {x} out of range")
    values = list(f.values)
    values[x] = _toggled_value(alg, poset, values, f.boundary, x)
    return f._replace(values)


def _sweep(alg, f, order):
    poset = f.poset
    values = list(f.values)
    boundary = f.boundary
    for x in order:
        values[x] = _toggled_value(alg, poset, values, boundary, x)
    return f._replace(values)


def rowmotion(alg, f):
    'Toggle every element once, top rank first.'
    return _sweep(alg, f, f.poset.rowmotion_order)


def rowmotion_inverse(alg, f):
    'Undo rowmotion: each toggle is an involution, so run the sweep backwards.'
    return _sweep(alg, f, list(reversed(f.poset.rowmotion_order)))


def promotion(alg, f):
    'Toggle every element once, sweeping files left to right (needs an rc embedding).'
    return _sweep(alg, f, f.poset.promotion_order)


def promotion_inverse(alg, f):
    'Undo promotion: sweep the files right to left.'
    return _sweep(alg, f, list(reversed(f.poset.promotion_order)))


def file_toggle(alg, f, index):
    'Toggle every element of one file; they are incomparable, so order is moot.'
    return _sweep(alg, f, f.poset.file_members(index))


def vertex_from_ideal(ideal, boundary=(ZERO, ONE)):
    'Indicator array of the complementary filter: 0 on the ideal, 1 off it.'
    poset = ideal.poset
    values = [ONE] * poset.size
    for x in ideal.indices:
        values[x] = ZERO
    return PArray(poset, values, boundary)


def ideal_from_vertex(f):
    """Read a 0/1 array as an order ideal (the set of zero entries).

    Raises when values stray from {0,1} or the ones are not up-closed,
    i.e. when f is not a vertex indicator.
    """
    if any(v != ZERO and v != ONE for v in f.values):
        raise ValueError("not a vertex: entries must all be 0 or 1")
    zeros = [x for x in range(f.poset.size) if f.values[x] == ZERO]
    try:
        return OrderIdeal(f.poset, zeros)
    except PosetError as exc:
        raise ValueError(f"not a vertex: {exc}") from exc
