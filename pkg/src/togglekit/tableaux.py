"""Semistandard tableaux, Gelfand-Tsetlin patterns, and the bridge to
piecewise-linear arrays.

A rectangular tableau with A rows, B columns, and entries at most n has
a Gelfand-Tsetlin pattern whose only unforced entries fill an A x (n-A)
rectangle; dividing them by B gives a point of the order polytope of
that rectangle poset.  Under this correspondence the i-th Bender-Knuth
involution acts as the i-th file toggle, so tableau promotion matches
piecewise-linear promotion.
"""

from .dynamics import PL, PArray
from .posets import PosetError, rectangle_poset
from .rational import Rat


class TableauError(ValueError):
    'A tableau or pattern failed validation.'


class Tableau:
    'Semistandard tableau: rows weakly increase, columns strictly increase.'

    __slots__ = ("rows", "max_entry")

    def __init__(self, rows, max_entry):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if not rows or not all(rows):
            raise TableauError("tableau needs at least one nonempty row")
        widths = [len(row) for row in rows]
        if any(a < b for a, b in zip(widths, widths[1:])):
            raise TableauError("row lengths must weakly decrease")
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if not 1 <= v <= max_entry:
                    raise TableauError(
                        f"entry {v} at row {r + 1} outside 1..{max_entry}"
                    )
                if c + 1 < len(row) and row[c + 1] < v:
                    raise TableauError(f"row {r + 1} is not weakly increasing")
                if r + 1 < len(rows) and c < widths[r + 1] and rows[r + 1][c] <= v:
                    raise TableauError(f"column {c + 1} is not strictly increasing")
        self.rows = rows
        self.max_entry = int(max_entry)

    @property
    def shape(self):
        return tuple(len(row) for row in self.rows)

    def is_rectangular(self):
        return len(set(self.shape)) == 1

    def __eq__(self, other):
        return (
            isinstance(other, Tableau)
            and self.rows == other.rows
            and self.max_entry == other.max_entry
        )

    def __hash__(self):
        return hash((self.rows, self.max_entry))

    def __repr__(self):
        return f"Tableau({list(map(list, self.rows))}, max_entry={self.max_entry})"


class GtPattern:
    """Gelfand-Tsetlin pattern: n weakly decreasing integer rows of
    lengths n, n-1, ..., 1 where consecutive rows interlace."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(rows)
        if not n or any(len(row) != n - i for i, row in enumerate(rows)):
            raise TableauError("pattern rows must have lengths n, n-1, ..., 1")
        for i, row in enumerate(rows):
            if any(row[k] < row[k + 1] for k in range(len(row) - 1)):
                raise TableauError(f"pattern row {i + 1} is not weakly decreasing")
            if any(v < 0 for v in row):
                raise TableauError("pattern entries must be nonnegative")
            if i + 1 < n:
                below = rows[i + 1]
                for k, v in enumerate(below):
                    if not row[k + 1] <= v <= row[k]:
                        raise TableauError(
                            f"rows {i + 1} and {i + 2} do not interlace at slot {k + 1}"
                        )
        self.rows = rows

    @property
    def size(self):
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, GtPattern) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"GtPattern({list(map(list, self.rows))})"


def tableau_to_pattern(tableau):
    """Pattern whose i-th row is the shape of the entries at most n+1-i.

    The top row is the full shape padded with zeros; the bottom row
    counts the 1s.
    """
    n = tableau.max_entry
    rows = []
    for i in range(1, n + 1):
        bound = n + 1 - i
        counts = [
            sum(1 for v in row if v <= bound) for row in tableau.rows[:bound]
        ]
        counts += [0] * (bound - len(counts))
        rows.append(counts)
    return GtPattern(rows)


def pattern_to_tableau(pattern):
    'Inverse of tableau_to_pattern.'
    n = pattern.size
    shapes = {n + 1 - i: pattern.rows[i - 1] for i in range(1, n + 1)}
    shapes[0] = (0,) * n
    top = shapes[n]
    rows = []
    for r in range(len(top)):
        if top[r] == 0:
            break
        row = []
        for c in range(top[r]):
            row.append(
                next(
                    m
                    for m in range(1, n + 1)
                    if r < len(shapes[m]) and shapes[m][r] >= c + 1
                )
            )
        rows.append(row)
    return Tableau(rows, n)


def rectangle_type(pattern):
    """(A, B) when the pattern comes from a rectangular tableau.

    Every slot (i, k) with i + k <= A holds B and every slot with
    k >= A holds 0 (rows are 1-indexed, slots 0-indexed); only an
    A x (n - A) rectangle of slots is free.
    """
    top = pattern.rows[0]
    a = sum(1 for v in top if v != 0)
    n = pattern.size
    if not 1 <= a < n:
        raise TableauError("pattern is not of rectangular type")
    b = top[0]
    for i, row in enumerate(pattern.rows, start=1):
        for k, v in enumerate(row):
            if i + k <= a and v != b:
                raise TableauError("pattern is not of rectangular type")
            if k >= a and v != 0:
                raise TableauError("pattern is not of rectangular type")
    return a, b


def pattern_to_array(pattern):
    """Free pattern slots, scaled by the column count, as a point of the
    order polytope of the rectangle poset [A] x [n-A].

    Element (i, j) of the rectangle reads slot A - i of pattern row
    n + 1 - A - j + i; files of the rectangle then match the pattern's
    diagonals so that the i-th Bender-Knuth involution becomes the i-th
    file toggle.
    """
    a, b = rectangle_type(pattern)
    n = pattern.size
    poset = rectangle_poset(a, n - a)
    values = [None] * poset.size
    for x in range(poset.size):
        i, j = poset.labels[x]
        values[x] = Rat(pattern.rows[n - a - j + i][a - i], b)
    return PL.array(poset, values)


def array_to_pattern(f, max_entry, columns):
    'Inverse of pattern_to_array for an array on [A] x [n-A].'
    shape = f.poset.rectangle_shape
    if shape is None:
        raise PosetError("array is not on a rectangle poset")
    a, width = shape
    n = int(max_entry)
    b = int(columns)
    if n - a != width:
        raise TableauError(
            f"array on [{a}]x[{width}] needs max entry {a + width}, got {n}"
        )
    rows = [
        [b if i + k <= a else 0 for k in range(n + 1 - i)]
        for i in range(1, n + 1)
    ]
    for x in range(f.poset.size):
        i, j = f.poset.labels[x]
        scaled = f.values[x] * b
        if scaled.denominator != 1:
            raise TableauError(
                f"entry {f.values[x]} at {(i, j)} times {b} is not an integer"
            )
        rows[n - a - j + i][a - i] = int(scaled)
    return GtPattern(rows)


def tableau_to_array(tableau):
    'Composite of tableau_to_pattern and pattern_to_array.'
    if not tableau.is_rectangular():
        raise TableauError("only rectangular tableaux map to arrays")
    return pattern_to_array(tableau_to_pattern(tableau))


def array_to_tableau(f, max_entry, columns):
    'Composite of array_to_pattern and pattern_to_tableau.'
    return pattern_to_tableau(array_to_pattern(f, max_entry, columns))


def bender_knuth(tableau, index):
    """The index-th Bender-Knuth involution.

    An entry equal to index is locked when index + 1 sits directly
    below it; an entry equal to index + 1 is locked when index sits
    directly above.  In each row the free entries form a consecutive
    block of s copies of index followed by t copies of index + 1, which
    the involution rewrites as t copies followed by s copies.
    """
    i = int(index)
    if not 1 <= i < tableau.max_entry:
        raise TableauError(
            f"involution index {i} outside 1..{tableau.max_entry - 1}"
        )
    rows = [list(row) for row in tableau.rows]
    for r, row in enumerate(rows):
        free = []
        for c, v in enumerate(row):
            if v == i:
                below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
                if below != i + 1:
                    free.append(c)
            elif v == i + 1:
                above = rows[r - 1][c] if r > 0 else None
                if above != i:
                    free.append(c)
        if not free:
            continue
        s = sum(1 for c in free if row[c] == i)
        for pos, c in enumerate(free):
            row[c] = i if pos < len(free) - s else i + 1
    return Tableau(rows, tableau.max_entry)


def tableau_promotion(tableau):
    'Composite of the Bender-Knuth involutions, lowest index first.'
    out = tableau
    for i in range(1, tableau.max_entry):
        out = bender_knuth(out, i)
    return out
