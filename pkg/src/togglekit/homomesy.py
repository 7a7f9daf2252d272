"""Orbit statistics and homomesy checks.

A functional is a coefficient vector over the elements.  Piecewise-
linearly its orbit statistic is the average of the linear form along the
orbit; birationally the coefficients act as exponents and the statistic
is the orbit product of the monomial (constant 1 means 0-mesic in log
coordinates).  Homomesy = the statistic is the same on every orbit; the
constant is discovered from the first sample, never guessed.
"""

from .dynamics import promotion, rowmotion
from .orbits import orbit
from .posets import PosetError, rectangle_poset
from .rational import ONE, Rat, ZERO, as_integer


class Functional:
    'Named coefficient vector over the elements of a poset.'

    __slots__ = ("name", "coefficients")

    def __init__(self, name, coefficients):
        self.name = name
        self.coefficients = tuple(Rat(c) for c in coefficients)

    def linear_value(self, f):
        'Sum of coefficient * entry.'
        return sum(
            (c * v for c, v in zip(self.coefficients, f.values) if c != ZERO), ZERO
        )

    def monomial_value(self, f):
        'Product of entry ** coefficient; needs integer coefficients.'
        out = ONE
        for c, v in zip(self.coefficients, f.values):
            if c != ZERO:
                out *= v ** as_integer(c)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Functional)
            and self.name == other.name
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash((self.name, self.coefficients))

    def __repr__(self):
        return f"Functional({self.name!r})"


def pair_functional(a, b, i, j):
    'Entry at (i,j) plus the entry at the antipodal cell (a+1-i, b+1-j).'
    poset = rectangle_poset(a, b)
    coeff = [ZERO] * poset.size
    coeff[poset.index_of((i, j))] += ONE
    coeff[poset.index_of((a + 1 - i, b + 1 - j))] += ONE
    return Functional(f"pair({i},{j})", coeff)


def file_functional(a, b, k):
    'Sum of the entries in file k of [a]x[b].'
    poset = rectangle_poset(a, b)
    coeff = [ZERO] * poset.size
    for x in poset.file_members(k):
        coeff[x] = ONE
    return Functional(f"file({k})", coeff)


def standard_functionals(a, b):
    'Every antipodal pair sum and every file sum of [a]x[b].'
    out = [
        pair_functional(a, b, i, j)
        for i in range(1, a + 1)
        for j in range(1, b + 1)
    ]
    out += [file_functional(a, b, k) for k in range(1, a + b)]
    return out


_MAPS = {"rowmotion": rowmotion, "promotion": promotion}


def step_map(alg, map_name):
    try:
        stepper = _MAPS[map_name]
    except KeyError:
        raise PosetError(f"unknown map {map_name!r}; pick rowmotion or promotion") from None
    return lambda f: stepper(alg, f)


def _statistic_over(alg, functional, record):
    if alg.positive_domain:
        value = ONE
        for state in record:
            value *= functional.monomial_value(state)
        return value
    total = sum((functional.linear_value(state) for state in record), ZERO)
    return total / record.period


def orbit_statistic(alg, map_name, functional, f, cap=1000):
    """Orbit statistic of one start: (value, period).

    Piecewise-linear: exact mean of the linear form over the orbit.
    Birational: orbit product of the monomial.
    """
    rec = orbit(step_map(alg, map_name), f, cap=cap)
    return _statistic_over(alg, functional, rec), rec.period


def orbit_statistics(alg, map_name, functionals, f, cap=1000):
    'All the functionals statistics of one start, walking its orbit once.'
    rec = orbit(step_map(alg, map_name), f, cap=cap)
    return {fn.name: _statistic_over(alg, fn, rec) for fn in functionals}


def homomesy_check(alg, map_name, functional, starts, cap=1000):
    """Is the orbit statistic the same over all starts?

    The constant comes from the first start; the report records it and
    any starts that disagree.
    """
    constant = None
    violations = []
    for f in starts:
        value, _ = orbit_statistic(alg, map_name, functional, f, cap=cap)
        if constant is None:
            constant = value
        elif value != constant:
            violations.append(
                {"start": [str(v) for v in f.values], "statistic": str(value)}
            )
    return {
        "functional": functional.name,
        "map": map_name,
        "regime": alg.name,
        "constant": str(constant),
        "samples": len(list(starts)),
        "pass": not violations,
        "violations": violations,
    }


def exact_rank(rows):
    'Rank of a matrix of rationals, by fraction-free-enough Gaussian elimination.'
    matrix = [list(row) for row in rows]
    rank = 0
    cols = len(matrix[0]) if matrix else 0
    for col in range(cols):
        pivot = next(
            (r for r in range(rank, len(matrix)) if matrix[r][col] != ZERO), None
        )
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        head = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            if matrix[r][col] != ZERO:
                scale = matrix[r][col] / head
                matrix[r] = [
                    x - scale * y for x, y in zip(matrix[r], matrix[rank])
                ]
        rank += 1
    return rank


def orbit_average_vector(alg, map_name, f, cap=1000):
    'Per-element orbit averages of a piecewise-linear start.'
    rec = orbit(step_map(alg, map_name), f, cap=cap)
    totals = [ZERO] * len(f.values)
    for state in rec:
        for x, v in enumerate(state.values):
            totals[x] += v
    return [t / rec.period for t in totals]


def homomesy_space_rank(alg, map_name, samples, functionals, cap=1000):
    """Dimension audit of the homomesic functionals.

    The space of coefficient vectors whose orbit average is
    sample-independent has dimension p - rank{A(f) - A(f_0)} over the
    sampled starts; the candidate space spanned by the given functionals
    has dimension rank of their coefficient matrix.  Homomesy of the
    candidates makes the first at least the second; equality says the
    candidates exhaust the homomesies seen by these samples.  Rank
    stability under doubling the sample count is reported alongside.
    """
    samples = list(samples)
    if len(samples) < 2:
        raise ValueError("need at least two sample starts")
    averages = [orbit_average_vector(alg, map_name, f, cap=cap) for f in samples]
    base = averages[0]
    diffs = [[x - y for x, y in zip(avg, base)] for avg in averages[1:]]
    half = diffs[: max(1, len(diffs) // 2)]
    rank_half = exact_rank(half)
    rank_full = exact_rank(diffs)
    size = len(base)
    nullspace_dim = size - rank_full
    functional_rank = exact_rank([fn.coefficients for fn in functionals])
    return {
        "map": map_name,
        "regime": alg.name,
        "samples": len(samples),
        "nullspace_dim": nullspace_dim,
        "functional_rank": functional_rank,
        "stable": rank_half == rank_full,
        "pass": nullspace_dim == functional_rank and rank_half == rank_full,
    }
