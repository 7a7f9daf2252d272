import pytest

from togglekit.kernels import HAVE_COMPILED, kernel_for, pybitops
from togglekit.posets import rectangle_poset, triangle_poset

if HAVE_COMPILED:
    from togglekit.kernels import _bitops
else:
    _bitops = None

POSETS = [
    rectangle_poset(2, 2),
    rectangle_poset(2, 3),
    rectangle_poset(3, 3),
    triangle_poset(3),
]


def test_chain_toggle_semantics():
    # 2-chain 0 < 1: masks by hand
    lows = [0b00, 0b01]
    ups = [0b10, 0b00]
    assert pybitops.toggle(0b00, lows[0], ups[0], 0b01) == 0b01
    # blocked: upper cover present
    assert pybitops.toggle(0b10, lows[0], ups[0], 0b01) == 0b10
    # blocked: lower cover missing
    assert pybitops.toggle(0b00, lows[1], ups[1], 0b10) == 0b00
    assert pybitops.toggle(0b01, lows[1], ups[1], 0b10) == 0b11


def test_ideal_counts_on_grids():
    assert len(pybitops.enumerate_ideals(4, rectangle_poset(2, 2).lower_masks)) == 6
    assert len(pybitops.enumerate_ideals(6, rectangle_poset(2, 3).lower_masks)) == 10
    p44 = rectangle_poset(4, 4)
    assert len(pybitops.enumerate_ideals(p44.size, p44.lower_masks)) == 70


def test_enumerated_masks_are_ideals_and_unique():
    for poset in POSETS:
        masks = pybitops.enumerate_ideals(poset.size, poset.lower_masks)
        assert len(set(masks)) == len(masks)
        assert all(poset.is_ideal_mask(m) for m in masks)


def test_sweep_matches_elementwise_toggles():
    for poset in POSETS:
        lows, ups = poset.lower_masks, poset.upper_masks
        order = poset.rowmotion_order
        for mask in pybitops.enumerate_ideals(poset.size, lows):
            expected = mask
            for i in order:
                expected = pybitops.toggle(expected, lows[i], ups[i], 1 << i)
            assert pybitops.sweep(mask, order, lows, ups) == expected


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernels not built")
def test_compiled_matches_pure():
    for poset in POSETS:
        lows, ups = poset.lower_masks, poset.upper_masks
        pure = pybitops.enumerate_ideals(poset.size, lows)
        fast = _bitops.enumerate_ideals(poset.size, lows)
        assert sorted(fast) == sorted(pure)
        for order in (poset.rowmotion_order, poset.promotion_order):
            assert list(_bitops.sweep_many(pure, order, lows, ups)) == list(
                pybitops.sweep_many(pure, order, lows, ups)
            )
        for mask in pure:
            for i in range(poset.size):
                assert _bitops.toggle(mask, lows[i], ups[i], 1 << i) == pybitops.toggle(
                    mask, lows[i], ups[i], 1 << i
                )


def test_sweep_many_applies_sweep_to_each():
    poset = rectangle_poset(2, 3)
    lows, ups = poset.lower_masks, poset.upper_masks
    order = poset.rowmotion_order
    masks = pybitops.enumerate_ideals(poset.size, lows)
    assert pybitops.sweep_many(masks, order, lows, ups) == [
        pybitops.sweep(m, order, lows, ups) for m in masks
    ]


def test_kernel_for_size_cutoff(monkeypatch):
    monkeypatch.delenv("TOGGLEKIT_PURE", raising=False)
    assert kernel_for(200) is pybitops
    if HAVE_COMPILED:
        assert kernel_for(16) is _bitops
        assert kernel_for(64) is _bitops
        assert kernel_for(65) is pybitops


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernels not built")
def test_pure_env_forces_fallback(monkeypatch):
    monkeypatch.setenv("TOGGLEKIT_PURE", "1")
    assert kernel_for(16) is pybitops
