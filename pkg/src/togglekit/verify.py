"""Verification suites: seeded invariant batches with JSON-able reports.

Each suite returns {"suite", "seed", "pass", "checks": [...]} where every
check records what was tested, in which regime, how many inputs, and up
to three counterexamples verbatim.  Suites are deterministic for a given
seed, which the command line relies on for byte-identical reports.
"""

from .birational import (
    file_toggle_swap_check,
    promotion_shift_check,
    quotient_sequence,
    recombine,
    recombine_inverse,
    reciprocity_check,
)
from .dynamics import (
    BIRATIONAL,
    PL,
    file_toggle,
    promotion,
    rowmotion,
    toggle,
    vertex_from_ideal,
)
from .homomesy import (
    homomesy_space_rank,
    orbit_statistics,
    standard_functionals,
)
from .polytopes import pl_toggle, three_step
from .posets import (
    PosetError,
    brouwer_schrijver,
    down_closure,
    enumerate_ideals,
    promotion_ideal,
    rowmotion_by_complementation,
    rowmotion_ideal,
    toggle_ideal,
)
from .rational import ONE
from .sampling import (
    random_linear_extension,
    random_polytope_point,
    random_positive_array,
    random_tableau,
    seeded_rng,
)
from .tableaux import bender_knuth, tableau_promotion, tableau_to_array

MAX_REPORTED = 3

BRIDGE_SHAPES = ((2, 3, 5), (2, 2, 4), (1, 3, 4))


def _check(name, regime, count, violations, **extra):
    out = {
        "check": name,
        "regime": regime,
        "inputs": count,
        "pass": not violations,
        "violations": violations[:MAX_REPORTED],
    }
    out.update(extra)
    return out


def _report(suite, seed, checks):
    return {
        "suite": suite,
        "seed": seed,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }


def _require_shape(poset, suite):
    if poset.rectangle_shape is None:
        raise PosetError(f"the {suite} suite needs a rectangle shape AxB")
    return poset.rectangle_shape


def _strs(f):
    return [str(v) for v in f.values]


def _pl_samples(poset, rng, count):
    return [PL.array(poset, random_polytope_point(poset, rng)) for _ in range(count)]


def _bir_samples(poset, rng, count, start=None):
    if start is not None:
        return [BIRATIONAL.array(poset, start)]
    return [random_positive_array(BIRATIONAL, poset, rng) for _ in range(count)]


def _regime_samples(poset, rng, count, start=None):
    if start is not None:
        return (
            ("pl", PL, [PL.array(poset, start)]),
            ("birational", BIRATIONAL, [BIRATIONAL.array(poset, start)]),
        )
    return (
        ("pl", PL, _pl_samples(poset, rng, count)),
        ("birational", BIRATIONAL, _bir_samples(poset, rng, count)),
    )


_IDEAL_MAPS = (("rowmotion", rowmotion_ideal), ("promotion", promotion_ideal))
_ARRAY_MAPS = (("rowmotion", rowmotion), ("promotion", promotion))


def suite_order(poset, samples=100, seed=None, cap=1000, start=None):
    'The (a+b)-th power of rowmotion and of promotion is the identity, in all regimes.'
    a, b = _require_shape(poset, "order")
    n = a + b
    checks = []
    for map_name, step in _IDEAL_MAPS:
        violations = []
        ideals = enumerate_ideals(poset)
        for ideal in ideals:
            cur = ideal
            for _ in range(n):
                cur = step(cur)
            if cur != ideal:
                violations.append({"start": list(ideal.indices)})
        checks.append(
            _check(
                f"{map_name}-power-{n}-is-identity",
                "combinatorial",
                len(ideals),
                violations,
            )
        )
    rng = seeded_rng(seed)
    for regime, alg, arrays in _regime_samples(poset, rng, samples, start):
        for map_name, step in _ARRAY_MAPS:
            violations = []
            for f in arrays:
                cur = f
                for _ in range(n):
                    cur = step(alg, cur)
                if cur != f:
                    violations.append({"start": _strs(f)})
            checks.append(
                _check(
                    f"{map_name}-power-{n}-is-identity", regime, len(arrays), violations
                )
            )
    return _report("order", seed, checks)


def suite_three_step(poset, samples=100, seed=None, cap=1000, start=None):
    """transfer, then cumulate, then complement equals toggle-by-rank rowmotion.

    Checked piecewise-linearly on any poset; the birational check is run
    when the poset is a rectangle.
    """
    rng = seeded_rng(seed)
    checks = []
    if start is not None:
        regimes = [("pl", PL, [PL.array(poset, start)])]
        if poset.rectangle_shape is not None:
            regimes.append(("birational", BIRATIONAL, [BIRATIONAL.array(poset, start)]))
    else:
        regimes = [("pl", PL, _pl_samples(poset, rng, samples))]
        if poset.rectangle_shape is not None:
            regimes.append(("birational", BIRATIONAL, _bir_samples(poset, rng, samples)))
    for regime, alg, arrays in regimes:
        violations = []
        for f in arrays:
            if three_step(alg, f) != rowmotion(alg, f):
                violations.append({"start": _strs(f)})
        checks.append(
            _check("three-step-equals-rowmotion", regime, len(arrays), violations)
        )
    return _report("three-step", seed, checks)


def suite_recombination(poset, samples=100, seed=None, cap=1000, start=None):
    'The diagonal shear turns promotion into rowmotion, and its inverse turns it back.'
    _require_shape(poset, "recombination")
    rng = seeded_rng(seed)
    checks = []
    for regime, alg, arrays in _regime_samples(poset, rng, samples, start):
        forward = []
        backward = []
        round_trip = []
        for f in arrays:
            if recombine(alg, promotion(alg, f)) != rowmotion(alg, recombine(alg, f)):
                forward.append({"start": _strs(f)})
            sheared = recombine_inverse(alg, f)
            if recombine_inverse(alg, rowmotion(alg, f)) != promotion(alg, sheared):
                backward.append({"start": _strs(f)})
            if recombine(alg, sheared) != f:
                round_trip.append({"start": _strs(f)})
        checks.append(
            _check(
                "recombination-conjugates-promotion-to-rowmotion",
                regime,
                len(arrays),
                forward,
            )
        )
        checks.append(
            _check(
                "inverse-shear-conjugates-rowmotion-to-promotion",
                regime,
                len(arrays),
                backward,
            )
        )
        checks.append(
            _check("shear-round-trip-is-identity", regime, len(arrays), round_trip)
        )
    return _report("recombination", seed, checks)


def suite_reciprocity(poset, samples=100, seed=None, cap=1000, start=None):
    'Antipodal entries of suitable rowmotion powers reflect the original entries.'
    shape = _require_shape(poset, "reciprocity")
    rng = seeded_rng(seed)
    checks = []
    for regime, alg, arrays in _regime_samples(poset, rng, samples, start):
        violations = []
        for f in arrays:
            ok, cells = reciprocity_check(alg, f, shape)
            if not ok:
                violations.append({"start": _strs(f), "cells": cells[:2]})
        checks.append(
            _check("antipodal-reciprocity", regime, len(arrays), violations)
        )
    return _report("reciprocity", seed, checks)


def suite_quotient(poset, samples=100, seed=None, cap=1000, start=None):
    'File quotient profile: neutral product, adjacent swaps, cyclic shift.'
    a, b = _require_shape(poset, "quotient")
    rng = seeded_rng(seed)
    arrays = _bir_samples(poset, rng, samples, start)
    product_violations = []
    swap_violations = []
    shift_violations = []
    file_count = a + b - 1
    for f in arrays:
        q = quotient_sequence(BIRATIONAL, f)
        total = ONE
        for value in q:
            total *= value
        if total != ONE:
            product_violations.append({"start": _strs(f), "product": str(total)})
        bad = [i for i in range(1, file_count + 1) if not file_toggle_swap_check(BIRATIONAL, f, i)]
        if bad:
            swap_violations.append({"start": _strs(f), "files": bad})
        if not promotion_shift_check(BIRATIONAL, f):
            shift_violations.append({"start": _strs(f)})
    checks = [
        _check("quotient-product-is-neutral", "birational", len(arrays), product_violations),
        _check("file-toggle-swaps-adjacent-quotients", "birational", len(arrays), swap_violations),
        _check("promotion-cycles-quotients-left", "birational", len(arrays), shift_violations),
    ]
    return _report("quotient", seed, checks)


def suite_homomesy(poset, samples=50, seed=None, cap=1000, start=None):
    """Standard functionals have constant orbit statistics in both regimes,
    birational orbit products are all 1, the statistics restricted to
    polytope vertices reproduce the exhaustive combinatorial homomesies,
    and the sampled homomesy space has the dimension the functionals span.
    """
    a, b = _require_shape(poset, "homomesy")
    functionals = standard_functionals(a, b)
    rng = seeded_rng(seed)
    checks = []
    def constancy_violations(alg, map_name, arrays, require_one):
        constants = {}
        violations = []
        failed = set()
        for f in arrays:
            table = orbit_statistics(alg, map_name, functionals, f, cap=cap)
            for name, value in table.items():
                if name in failed:
                    continue
                if name not in constants:
                    constants[name] = value
                    if require_one and value != ONE:
                        failed.add(name)
                        violations.append(
                            {
                                "functional": name,
                                "start": _strs(f),
                                "product": str(value),
                                "expected": "1",
                            }
                        )
                elif value != constants[name]:
                    failed.add(name)
                    violations.append(
                        {
                            "functional": name,
                            "start": _strs(f),
                            "statistic": str(value),
                            "constant": str(constants[name]),
                        }
                    )
        return violations

    for regime, alg, arrays in _regime_samples(poset, rng, samples, start):
        for map_name, _ in _ARRAY_MAPS:
            violations = constancy_violations(
                alg, map_name, arrays, require_one=regime == "birational"
            )
            checks.append(
                _check(
                    f"standard-functionals-homomesic-under-{map_name}",
                    regime,
                    len(arrays),
                    violations,
                    functionals=len(functionals),
                )
            )
    vertex_arrays = [vertex_from_ideal(i) for i in enumerate_ideals(poset)]
    for map_name, _ in _ARRAY_MAPS:
        violations = constancy_violations(PL, map_name, vertex_arrays, require_one=False)
        checks.append(
            _check(
                f"vertex-restricted-homomesy-under-{map_name}",
                "combinatorial",
                len(vertex_arrays),
                violations,
                functionals=len(functionals),
            )
        )
    for map_name, _ in _ARRAY_MAPS:
        arrays = _pl_samples(poset, rng, max(samples, 2 * poset.size + 2))
        rank_report = homomesy_space_rank(PL, map_name, arrays, functionals, cap=cap)
        checks.append(
            _check(
                f"homomesy-space-dimension-under-{map_name}",
                "pl",
                rank_report["samples"],
                []
                if rank_report["pass"]
                else [
                    {
                        "nullspace_dim": rank_report["nullspace_dim"],
                        "functional_rank": rank_report["functional_rank"],
                        "stable": rank_report["stable"],
                    }
                ],
                nullspace_dim=rank_report["nullspace_dim"],
                functional_rank=rank_report["functional_rank"],
            )
        )
    return _report("homomesy", seed, checks)


def suite_bridge(shapes=BRIDGE_SHAPES, samples=100, seed=None, cap=1000):
    """Tableau dynamics match array dynamics through the pattern embedding.

    For random rectangular tableaux: each Bender-Knuth involution acts as
    the file toggle of the same index, whole-tableau promotion acts as
    piecewise-linear promotion, and promotion has order max_entry.
    """
    rng = seeded_rng(seed)
    checks = []
    for rows, cols, max_entry in shapes:
        tableaux = [random_tableau(rows, cols, max_entry, rng) for _ in range(samples)]
        bk_violations = []
        promo_violations = []
        order_violations = []
        for t in tableaux:
            arr = tableau_to_array(t)
            bad = [
                i
                for i in range(1, max_entry)
                if tableau_to_array(bender_knuth(t, i)) != file_toggle(PL, arr, i)
            ]
            if bad:
                bk_violations.append({"tableau": [list(r) for r in t.rows], "indices": bad})
            if tableau_to_array(tableau_promotion(t)) != promotion(PL, arr):
                promo_violations.append({"tableau": [list(r) for r in t.rows]})
            cur = t
            for _ in range(max_entry):
                cur = tableau_promotion(cur)
            if cur != t:
                order_violations.append({"tableau": [list(r) for r in t.rows]})
        label = f"{rows}x{cols}-entries-{max_entry}"
        checks.append(
            _check(
                f"bender-knuth-matches-file-toggle-{label}",
                "tableau",
                len(tableaux),
                bk_violations,
            )
        )
        checks.append(
            _check(
                f"tableau-promotion-matches-pl-promotion-{label}",
                "tableau",
                len(tableaux),
                promo_violations,
            )
        )
        checks.append(
            _check(
                f"tableau-promotion-power-{max_entry}-is-identity-{label}",
                "tableau",
                len(tableaux),
                order_violations,
            )
        )
    return _report("bridge", seed, checks)


def _nonadjacent_pairs(poset):
    covers = set(poset.covers)
    return [
        (x, y)
        for x in range(poset.size)
        for y in range(x + 1, poset.size)
        if (x, y) not in covers
    ]


def suite_vertex(poset, samples=20, seed=None, cap=1000):
    """Structural invariants: toggles are involutions, toggles at
    non-adjacent elements commute, the piecewise-linear maps restricted
    to polytope vertices act as the combinatorial maps, rowmotion equals
    complement / minimals / down-closure, any top-to-bottom linear
    extension sweep equals rowmotion, and the antichain map is rowmotion
    conjugated by down-closure.
    """
    ideals = enumerate_ideals(poset)
    pairs = _nonadjacent_pairs(poset)
    checks = []

    violations = [
        {"ideal": list(i.indices), "element": x}
        for i in ideals
        for x in range(poset.size)
        if toggle_ideal(toggle_ideal(i, x), x) != i
    ]
    checks.append(_check("toggles-are-involutions", "combinatorial", len(ideals), violations))

    violations = [
        {"ideal": list(i.indices), "elements": [x, y]}
        for i in ideals
        for x, y in pairs
        if toggle_ideal(toggle_ideal(i, x), y) != toggle_ideal(toggle_ideal(i, y), x)
    ]
    checks.append(
        _check("nonadjacent-toggles-commute", "combinatorial", len(ideals), violations)
    )

    rng = seeded_rng(seed)
    for regime, alg, arrays in _regime_samples(poset, rng, samples):
        violations = []
        for f in arrays:
            bad = [x for x in range(poset.size) if toggle(alg, toggle(alg, f, x), x) != f]
            if bad:
                violations.append({"start": _strs(f), "elements": bad})
        checks.append(_check("toggles-are-involutions", regime, len(arrays), violations))
        violations = []
        for f in arrays:
            bad = [
                [x, y]
                for x, y in pairs
                if toggle(alg, toggle(alg, f, x), y) != toggle(alg, toggle(alg, f, y), x)
            ]
            if bad:
                violations.append({"start": _strs(f), "pairs": bad[:3]})
        checks.append(_check("nonadjacent-toggles-commute", regime, len(arrays), violations))

    violations = []
    for ideal in ideals:
        vertex = vertex_from_ideal(ideal)
        bad = [
            x
            for x in range(poset.size)
            if vertex_from_ideal(toggle_ideal(ideal, x)) != pl_toggle(vertex, x)
        ]
        if bad:
            violations.append({"ideal": list(ideal.indices), "elements": bad})
        if vertex_from_ideal(rowmotion_ideal(ideal)) != rowmotion(PL, vertex):
            violations.append({"ideal": list(ideal.indices), "map": "rowmotion"})
        if poset.rc is not None and vertex_from_ideal(
            promotion_ideal(ideal)
        ) != promotion(PL, vertex):
            violations.append({"ideal": list(ideal.indices), "map": "promotion"})
    checks.append(
        _check("vertex-restriction-equivariance", "combinatorial", len(ideals), violations)
    )

    violations = [
        {"ideal": list(i.indices)}
        for i in ideals
        if rowmotion_by_complementation(i) != rowmotion_ideal(i)
    ]
    checks.append(
        _check(
            "complement-minimals-downclose-equals-rowmotion",
            "combinatorial",
            len(ideals),
            violations,
        )
    )

    extensions = [random_linear_extension(poset, rng) for _ in range(5)]
    violations = []
    for ext in extensions:
        order = list(reversed(ext))
        for ideal in ideals:
            cur = ideal
            for x in order:
                cur = toggle_ideal(cur, x)
            if cur != rowmotion_ideal(ideal):
                violations.append({"extension": ext, "ideal": list(ideal.indices)})
    checks.append(
        _check(
            "reversed-linear-extension-sweep-equals-rowmotion",
            "combinatorial",
            len(ideals) * len(extensions),
            violations,
        )
    )

    violations = []
    for ideal in ideals:
        antichain = tuple(
            x for x in ideal.indices if not any(up in ideal for up in poset.upper_covers[x])
        )
        if down_closure(poset, brouwer_schrijver(poset, antichain)) != rowmotion_ideal(
            down_closure(poset, antichain)
        ):
            violations.append({"antichain": sorted(antichain)})
    checks.append(
        _check(
            "antichain-map-conjugate-to-rowmotion",
            "combinatorial",
            len(ideals),
            violations,
        )
    )
    return _report("vertex", seed, checks)


SUITES = {
    "order": suite_order,
    "three-step": suite_three_step,
    "recombination": suite_recombination,
    "reciprocity": suite_reciprocity,
    "quotient": suite_quotient,
    "homomesy": suite_homomesy,
    "bridge": suite_bridge,
    "vertex": suite_vertex,
}
