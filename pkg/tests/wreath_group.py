"""Brute-force wreath products C_ell wr S_n, for validating class data.

Elements are (colors, perm) with colors in (Z/ell)^n and perm a tuple
mapping position -> image.  Small groups only.
"""

from __future__ import annotations

from itertools import permutations, product


def elements(ell: int, n: int):
    for colors in product(range(ell), repeat=n):
        for perm in permutations(range(n)):
            yield (colors, perm)


def multiply(a, b, ell: int):
    (ca, pa), (cb, pb) = a, b
    inv_pa = [0] * len(pa)
    for i, v in enumerate(pa):
        inv_pa[v] = i
    colors = tuple((ca[i] + cb[inv_pa[i]]) % ell for i in range(len(ca)))
    perm = tuple(pa[pb[i]] for i in range(len(pa)))
    return (colors, perm)


def inverse(a, ell: int):
    colors, perm = a
    inv_perm = [0] * len(perm)
    for i, v in enumerate(perm):
        inv_perm[v] = i
    inv_colors = tuple((-colors[inv_perm[i]]) % ell for i in range(len(colors)))
    return (inv_colors, tuple(inv_perm))


def cycle_type(a, ell: int):
    """Multipartition label: the cycle of length m whose color sum lies in
    class j of C_ell contributes a part m to slot j."""
    colors, perm = a
    n = len(perm)
    seen = [False] * n
    slots = [[] for _ in range(ell)]
    for start in range(n):
        if seen[start]:
            continue
        j = start
        length = 0
        colorsum = 0
        while not seen[j]:
            seen[j] = True
            colorsum += colors[j]
            j = perm[j]
            length += 1
        slots[colorsum % ell].append(length)
    return tuple(tuple(sorted(s, reverse=True)) for s in slots)


def conjugacy_classes(ell: int, n: int) -> dict:
    """Map from class label (cycle type) to the set of elements."""
    classes: dict = {}
    els = list(elements(ell, n))
    for g in els:
        label = cycle_type(g, ell)
        classes.setdefault(label, set()).add(g)
    # sanity: labels must be unions of true conjugacy classes; verify by
    # checking closure under conjugation
    for label, members in classes.items():
        sample = next(iter(members))
        orbit = {
            multiply(multiply(h, sample, ell), inverse(h, ell), ell) for h in els
        }
        if orbit != members:
            raise AssertionError(f"cycle type {label} is not a single conjugacy class")
    return classes
