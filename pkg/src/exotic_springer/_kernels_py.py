"""Pure-Python hot kernels (fallback for the compiled ``_ckernels``)."""

from itertools import permutations


def _cycle_masks(perm):
    seen = 0
    masks = []
    lengths = []
    for start in range(len(perm)):
        if seen >> start & 1:
            continue
        mask = 0
        length = 0
        v = start
        while not mask >> v & 1:
            mask |= 1 << v
            length += 1
            v = perm[v]
        seen |= mask
        masks.append(mask)
        lengths.append(length)
    return masks, lengths


def character_gram(m):
    """Gram matrix ``G[a][b] = sum_w chi_a(w) chi_b(w)`` over all 2^m m! signed permutations.

    ``chi_l(w)`` is the trace of ``w`` on span{X_I : |I| = l}; it is read off
    as the ``t^l`` coefficient of ``prod_cycles (1 + sign(c) t^len(c))``.
    """
    size = m + 1
    gram = [[0] * size for _ in range(size)]
    for perm in permutations(range(m)):
        masks, lengths = _cycle_masks(perm)
        cycles = list(zip(masks, lengths))
        for signs in range(1 << m):
            poly = [1] + [0] * m
            for cmask, length in cycles:
                negative = bin(signs & cmask).count("1") & 1
                for d in range(m - length, -1, -1):
                    c = poly[d]
                    if c:
                        poly[d + length] += -c if negative else c
            for a in range(size):
                pa = poly[a]
                if pa:
                    row = gram[a]
                    for b in range(size):
                        row[b] += pa * poly[b]
    return gram


def orienting_masks(m, cup_pairs, ray_mask):
    """Bitmasks ``g`` (bit i set = vee at vertex i+1) meeting every constraint.

    ``cup_pairs`` holds 0-based vertex pairs that must carry opposite
    symbols; ``ray_mask`` marks vertices forced to wedge.
    """
    out = []
    for g in range(1 << m):
        if g & ray_mask:
            continue
        for i, j in cup_pairs:
            if (g >> i & 1) == (g >> j & 1):
                break
        else:
            out.append(g)
    return out
