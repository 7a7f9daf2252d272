"""Birational dynamics on positive rational arrays.

The subtraction-free counterparts of the piecewise-linear maps, plus the
identities special to rectangles: the recombination shear that turns
promotion into rowmotion, the antipodal reciprocity of rowmotion powers,
and the file quotient sequence that promotion cycles one step left.
Every function takes the algebra as an argument, so the piecewise-linear
(max-plus) forms of the same identities come out of the same code.
"""

from .dynamics import (
    BIRATIONAL,
    file_toggle,
    promotion,
    promotion_inverse,
    rowmotion,
)
from .polytopes import three_step
from .posets import PosetError


def birational_three_step(f):
    'Birational rowmotion via the transfer / cumulate / complement factorization.'
    return three_step(BIRATIONAL, f)


def _diagonal_indices(poset):
    'Diagonal depth of each element: 0 on the bottom-left diagonal, up by 2 in rank+col.'
    if poset.rc is None:
        raise PosetError("recombination needs an rc embedding")
    diag = [r + c for c, r in poset.rc.positions]
    base = min(diag)
    if any((d - base) % 2 for d in diag):
        raise PosetError("rc embedding is not diagonally graded")
    return [(d - base) // 2 for d in diag]


def rowmotion_iterates(alg, f, count):
    'f, T(f), ..., T^count(f) under rowmotion; iterate 0 is f itself.'
    out = [f]
    for _ in range(count):
        out.append(rowmotion(alg, out[-1]))
    return out


def _shear(alg, f, step, experimental):
    'Entry x of the result comes from iterate depth(x) of the step map.'
    poset = f.poset
    if poset.rectangle_shape is None and not experimental:
        raise PosetError(
            "recombination beyond rectangles is experimental; pass experimental=True"
        )
    depth = _diagonal_indices(poset)
    iterates = [f]
    for _ in range(max(depth)):
        iterates.append(step(alg, iterates[-1]))
    return f._replace([iterates[depth[x]][x] for x in range(poset.size)])


def recombine(alg, f, experimental=False):
    """Shear the inverse-promotion iterates along diagonals.

    On [a]x[b] the entry of the result at (i,j) is the (i,j) entry of
    the (j-1)-th inverse-promotion iterate of f, so that recombining
    turns promotion into rowmotion:

        recombine(promotion(f)) == rowmotion(recombine(f))

    On other rc-embedded posets the column index generalizes to the
    diagonal depth (rank+col)/2; that extension is untested territory,
    so it must be requested with experimental=True.
    """
    return _shear(alg, f, promotion_inverse, experimental)


def recombine_inverse(alg, f, experimental=False):
    """Undo recombine: shear the rowmotion iterates along diagonals.

    Entry (i,j) of the result is the (i,j) entry of the (j-1)-th
    rowmotion iterate of f, so this shear turns rowmotion into
    promotion: recombine_inverse(rowmotion(f)) equals
    promotion(recombine_inverse(f)), and it carries the rowmotion orbit
    of f row-for-row onto the promotion orbit of its image.
    """
    return _shear(alg, f, rowmotion, experimental)


def reciprocity_check(alg, f, shape):
    """Antipodal reciprocity on a rectangle.

    For every cell (i,j) of [a]x[b], the (a+1-i, b+1-j) entry of the
    (a+b+1-i-j)-th rowmotion iterate must be the reflection of f(i,j)
    (its reciprocal birationally, 1 minus it piecewise-linearly).
    Returns (ok, violations).
    """
    a, b = shape
    poset = f.poset
    iterates = rowmotion_iterates(alg, f, a + b - 1)
    violations = []
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            power = a + b + 1 - i - j
            got = iterates[power].at((a + 1 - i, b + 1 - j))
            want = alg.reflect(f.at((i, j)))
            if got != want:
                violations.append(
                    {
                        "cell": [i, j],
                        "power": power,
                        "got": str(got),
                        "expected": str(want),
                    }
                )
    return (not violations, violations)


def quotient_sequence(alg, f):
    """Per-file quotient profile (q_1, ..., q_n), n = number of files + 1.

    p_i is the combined value of file i (a product birationally, a sum
    piecewise-linearly) with empty guards p_0 = p_n at the algebra's
    neutral value; q_i = p_i / p_{i-1}.  The q's multiply out to the
    neutral value, file toggles swap adjacent q's, and promotion cycles
    the whole profile one step left.
    """
    files = f.poset.files
    neutral = alg.bottom_value
    profile = [neutral]
    for members in files:
        total = neutral
        for x in members:
            total = alg.combine(total, f[x])
        profile.append(total)
    profile.append(neutral)
    return tuple(
        alg.difference(profile[k + 1], profile[k]) for k in range(len(profile) - 1)
    )


def file_toggle_swap_check(alg, f, index):
    'Does toggling file i swap entries i and i+1 of the quotient profile?'
    before = list(quotient_sequence(alg, f))
    after = quotient_sequence(alg, file_toggle(alg, f, index))
    before[index - 1], before[index] = before[index], before[index - 1]
    return tuple(before) == after


def promotion_shift_check(alg, f):
    'Does promotion cycle the quotient profile one step to the left?'
    before = quotient_sequence(alg, f)
    after = quotient_sequence(alg, promotion(alg, f))
    return before[1:] + before[:1] == after
