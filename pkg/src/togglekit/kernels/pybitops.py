"""Pure-Python bitset kernels.

Mirror of the compiled _bitops module: order ideals are int bitmasks over
element indices, and the toggle at x flips bit x exactly when every lower
cover of x is present and no upper cover is.  Python ints put no limit on
poset size; the compiled twin handles sizes up to 64.
"""


def enumerate_ideals(size, lower_masks):
    """All down-closed masks, each exactly once, in a deterministic order.

    lower_masks[i] may only reference indices below i, i.e. the index
    order must be a linear extension (the Poset constructor arranges
    this before calling).
    """
    masks = [0]
    for i in range(size):
        low = lower_masks[i]
        bit = 1 << i
        masks += [m | bit for m in masks if m & low == low]
    return masks


def toggle(mask, low, up, bit):
    'Toggle one element: flip its bit if the result is still an ideal.'
    if mask & low == low and mask & up == 0:
        return mask ^ bit
    return mask


def sweep(mask, order, lower_masks, upper_masks):
    'Apply toggles at the given element indices, in order.'
    for i in order:
        low = lower_masks[i]
        if mask & low == low and mask & upper_masks[i] == 0:
            mask ^= 1 << i
    return mask


def sweep_many(masks, order, lower_masks, upper_masks):
    'Apply the same toggle sequence to every mask in a list.'
    return [sweep(m, order, lower_masks, upper_masks) for m in masks]
