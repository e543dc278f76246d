"""Frozen reference coefficient patterns for the canonical
representation of the general element in low-dimensional algebras
(quaternions, split-quaternions, space-time algebra, ...).

Each entry of a pattern is (sign, k): the matrix cell equals
sign * a_k where a_1..a_{2^n} are the coefficients of the general
element in graded-lex order.
"""

GOLDEN_PATTERNS = {
    (2, 0): (
        ((1, 1), (1, 2), (1, 3), (1, 4)),
        ((1, 2), (1, 1), (1, 4), (1, 3)),
        ((1, 3), (-1, 4), (1, 1), (-1, 2)),
        ((-1, 4), (1, 3), (-1, 2), (1, 1)),
    ),
    (1, 1): (
        ((1, 1), (1, 2), (1, 3), (1, 4)),
        ((1, 2), (1, 1), (1, 4), (1, 3)),
        ((-1, 3), (1, 4), (1, 1), (-1, 2)),
        ((1, 4), (-1, 3), (-1, 2), (1, 1)),
    ),
    (0, 2): (
        ((1, 1), (1, 2), (1, 3), (1, 4)),
        ((-1, 2), (1, 1), (-1, 4), (1, 3)),
        ((-1, 3), (1, 4), (1, 1), (-1, 2)),
        ((-1, 4), (-1, 3), (1, 2), (1, 1)),
    ),
    (3, 0): (
        ((1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8)),
        ((1, 2), (1, 1), (1, 5), (1, 6), (1, 3), (1, 4), (1, 8), (1, 7)),
        ((1, 3), (-1, 5), (1, 1), (1, 7), (-1, 2), (-1, 8), (1, 4), (-1, 6)),
        ((1, 4), (-1, 6), (-1, 7), (1, 1), (1, 8), (-1, 2), (-1, 3), (1, 5)),
        ((-1, 5), (1, 3), (-1, 2), (-1, 8), (1, 1), (1, 7), (-1, 6), (1, 4)),
        ((-1, 6), (1, 4), (1, 8), (-1, 2), (-1, 7), (1, 1), (1, 5), (-1, 3)),
        ((-1, 7), (-1, 8), (1, 4), (-1, 3), (1, 6), (-1, 5), (1, 1), (1, 2)),
        ((-1, 8), (-1, 7), (1, 6), (-1, 5), (1, 4), (-1, 3), (1, 2), (1, 1)),
    ),
    (2, 1): (
        ((1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8)),
        ((1, 2), (1, 1), (1, 5), (1, 6), (1, 3), (1, 4), (1, 8), (1, 7)),
        ((1, 3), (-1, 5), (1, 1), (1, 7), (-1, 2), (-1, 8), (1, 4), (-1, 6)),
        ((-1, 4), (1, 6), (1, 7), (1, 1), (-1, 8), (-1, 2), (-1, 3), (1, 5)),
        ((-1, 5), (1, 3), (-1, 2), (-1, 8), (1, 1), (1, 7), (-1, 6), (1, 4)),
        ((1, 6), (-1, 4), (-1, 8), (-1, 2), (1, 7), (1, 1), (1, 5), (-1, 3)),
        ((1, 7), (1, 8), (-1, 4), (-1, 3), (-1, 6), (-1, 5), (1, 1), (1, 2)),
        ((1, 8), (1, 7), (-1, 6), (-1, 5), (-1, 4), (-1, 3), (1, 2), (1, 1)),
    ),
    (1, 2): (
        ((1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8)),
        ((1, 2), (1, 1), (1, 5), (1, 6), (1, 3), (1, 4), (1, 8), (1, 7)),
        ((-1, 3), (1, 5), (1, 1), (-1, 7), (-1, 2), (1, 8), (1, 4), (-1, 6)),
        ((-1, 4), (1, 6), (1, 7), (1, 1), (-1, 8), (-1, 2), (-1, 3), (1, 5)),
        ((1, 5), (-1, 3), (-1, 2), (1, 8), (1, 1), (-1, 7), (-1, 6), (1, 4)),
        ((1, 6), (-1, 4), (-1, 8), (-1, 2), (1, 7), (1, 1), (1, 5), (-1, 3)),
        ((-1, 7), (-1, 8), (-1, 4), (1, 3), (-1, 6), (1, 5), (1, 1), (1, 2)),
        ((-1, 8), (-1, 7), (-1, 6), (1, 5), (-1, 4), (1, 3), (1, 2), (1, 1)),
    ),
    (0, 3): (
        ((1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8)),
        ((-1, 2), (1, 1), (-1, 5), (-1, 6), (1, 3), (1, 4), (-1, 8), (1, 7)),
        ((-1, 3), (1, 5), (1, 1), (-1, 7), (-1, 2), (1, 8), (1, 4), (-1, 6)),
        ((-1, 4), (1, 6), (1, 7), (1, 1), (-1, 8), (-1, 2), (-1, 3), (1, 5)),
        ((-1, 5), (-1, 3), (1, 2), (-1, 8), (1, 1), (-1, 7), (1, 6), (1, 4)),
        ((-1, 6), (-1, 4), (1, 8), (1, 2), (1, 7), (1, 1), (-1, 5), (-1, 3)),
        ((-1, 7), (-1, 8), (-1, 4), (1, 3), (-1, 6), (1, 5), (1, 1), (1, 2)),
        ((1, 8), (-1, 7), (1, 6), (-1, 5), (-1, 4), (1, 3), (-1, 2), (1, 1)),
    ),
    (4, 0): (
        ((1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 11), (1, 12), (1, 13), (1, 14), (1, 15), (1, 16)),
        ((1, 2), (1, 1), (1, 6), (1, 7), (1, 8), (1, 3), (1, 4), (1, 5), (1, 12), (1, 13), (1, 14), (1, 9), (1, 10), (1, 11), (1, 16), (1, 15)),
        ((1, 3), (-1, 6), (1, 1), (1, 9), (1, 10), (-1, 2), (-1, 12), (-1, 13), (1, 4), (1, 5), (1, 15), (-1, 7), (-1, 8), (-1, 16), (1, 11), (-1, 14)),
        ((1, 4), (-1, 7), (-1, 9), (1, 1), (1, 11), (1, 12), (-1, 2), (-1, 14), (-1, 3), (-1, 15), (1, 5), (1, 6), (1, 16), (-1, 8), (-1, 10), (1, 13)),
        ((1, 5), (-1, 8), (-1, 10), (-1, 11), (1, 1), (1, 13), (1, 14), (-1, 2), (1, 15), (-1, 3), (-1, 4), (-1, 16), (1, 6), (1, 7), (1, 9), (-1, 12)),
        ((-1, 6), (1, 3), (-1, 2), (-1, 12), (-1, 13), (1, 1), (1, 9), (1, 10), (-1, 7), (-1, 8), (-1, 16), (1, 4), (1, 5), (1, 15), (-1, 14), (1, 11)),
        ((-1, 7), (1, 4), (1, 12), (-1, 2), (-1, 14), (-1, 9), (1, 1), (1, 11), (1, 6), (1, 16), (-1, 8), (-1, 3), (-1, 15), (1, 5), (1, 13), (-1, 10)),
        ((-1, 8), (1, 5), (1, 13), (1, 14), (-1, 2), (-1, 10), (-1, 11), (1, 1), (-1, 16), (1, 6), (1, 7), (1, 15), (-1, 3), (-1, 4), (-1, 12), (1, 9)),
        ((-1, 9), (-1, 12), (1, 4), (-1, 3), (-1, 15), (1, 7), (-1, 6), (-1, 16), (1, 1), (1, 11), (-1, 10), (1, 2), (1, 14), (-1, 13), (1, 5), (1, 8)),
        ((-1, 10), (-1, 13), (1, 5), (1, 15), (-1, 3), (1, 8), (1, 16), (-1, 6), (-1, 11), (1, 1), (1, 9), (-1, 14), (1, 2), (1, 12), (-1, 4), (-1, 7)),
        ((-1, 11), (-1, 14), (-1, 15), (1, 5), (-1, 4), (-1, 16), (1, 8), (-1, 7), (1, 10), (-1, 9), (1, 1), (1, 13), (-1, 12), (1, 2), (1, 3), (1, 6)),
        ((-1, 12), (-1, 9), (1, 7), (-1, 6), (-1, 16), (1, 4), (-1, 3), (-1, 15), (1, 2), (1, 14), (-1, 13), (1, 1), (1, 11), (-1, 10), (1, 8), (1, 5)),
        ((-1, 13), (-1, 10), (1, 8), (1, 16), (-1, 6), (1, 5), (1, 15), (-1, 3), (-1, 14), (1, 2), (1, 12), (-1, 11), (1, 1), (1, 9), (-1, 7), (-1, 4)),
        ((-1, 14), (-1, 11), (-1, 16), (1, 8), (-1, 7), (-1, 15), (1, 5), (-1, 4), (1, 13), (-1, 12), (1, 2), (1, 10), (-1, 9), (1, 1), (1, 6), (1, 3)),
        ((-1, 15), (1, 16), (-1, 11), (1, 10), (-1, 9), (1, 14), (-1, 13), (1, 12), (1, 5), (-1, 4), (1, 3), (-1, 8), (1, 7), (-1, 6), (1, 1), (-1, 2)),
        ((1, 16), (-1, 15), (1, 14), (-1, 13), (1, 12), (-1, 11), (1, 10), (-1, 9), (-1, 8), (1, 7), (-1, 6), (1, 5), (-1, 4), (1, 3), (-1, 2), (1, 1)),
    ),
    (3, 1): (
        ((1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 11), (1, 12), (1, 13), (1, 14), (1, 15), (1, 16)),
        ((1, 2), (1, 1), (1, 6), (1, 7), (1, 8), (1, 3), (1, 4), (1, 5), (1, 12), (1, 13), (1, 14), (1, 9), (1, 10), (1, 11), (1, 16), (1, 15)),
        ((1, 3), (-1, 6), (1, 1), (1, 9), (1, 10), (-1, 2), (-1, 12), (-1, 13), (1, 4), (1, 5), (1, 15), (-1, 7), (-1, 8), (-1, 16), (1, 11), (-1, 14)),
        ((1, 4), (-1, 7), (-1, 9), (1, 1), (1, 11), (1, 12), (-1, 2), (-1, 14), (-1, 3), (-1, 15), (1, 5), (1, 6), (1, 16), (-1, 8), (-1, 10), (1, 13)),
        ((1, 5), (-1, 8), (-1, 10), (-1, 11), (1, 1), (1, 13), (1, 14), (-1, 2), (1, 15), (-1, 3), (-1, 4), (-1, 16), (1, 6), (1, 7), (1, 9), (-1, 12)),
        ((-1, 6), (1, 3), (-1, 2), (-1, 12), (-1, 13), (1, 1), (1, 9), (1, 10), (-1, 7), (-1, 8), (-1, 16), (1, 4), (1, 5), (1, 15), (-1, 14), (1, 11)),
        ((-1, 7), (1, 4), (1, 12), (-1, 2), (-1, 14), (-1, 9), (1, 1), (1, 11), (1, 6), (1, 16), (-1, 8), (-1, 3), (-1, 15), (1, 5), (1, 13), (-1, 10)),
        ((-1, 8), (1, 5), (1, 13), (1, 14), (-1, 2), (-1, 10), (-1, 11), (1, 1), (-1, 16), (1, 6), (1, 7), (1, 15), (-1, 3), (-1, 4), (-1, 12), (1, 9)),
        ((-1, 9), (-1, 12), (1, 4), (-1, 3), (-1, 15), (1, 7), (-1, 6), (-1, 16), (1, 1), (1, 11), (-1, 10), (1, 2), (1, 14), (-1, 13), (1, 5), (1, 8)),
        ((-1, 10), (-1, 13), (1, 5), (1, 15), (-1, 3), (1, 8), (1, 16), (-1, 6), (-1, 11), (1, 1), (1, 9), (-1, 14), (1, 2), (1, 12), (-1, 4), (-1, 7)),
        ((-1, 11), (-1, 14), (-1, 15), (1, 5), (-1, 4), (-1, 16), (1, 8), (-1, 7), (1, 10), (-1, 9), (1, 1), (1, 13), (-1, 12), (1, 2), (1, 3), (1, 6)),
        ((-1, 12), (-1, 9), (1, 7), (-1, 6), (-1, 16), (1, 4), (-1, 3), (-1, 15), (1, 2), (1, 14), (-1, 13), (1, 1), (1, 11), (-1, 10), (1, 8), (1, 5)),
        ((-1, 13), (-1, 10), (1, 8), (1, 16), (-1, 6), (1, 5), (1, 15), (-1, 3), (-1, 14), (1, 2), (1, 12), (-1, 11), (1, 1), (1, 9), (-1, 7), (-1, 4)),
        ((-1, 14), (-1, 11), (-1, 16), (1, 8), (-1, 7), (-1, 15), (1, 5), (-1, 4), (1, 13), (-1, 12), (1, 2), (1, 10), (-1, 9), (1, 1), (1, 6), (1, 3)),
        ((-1, 15), (1, 16), (-1, 11), (1, 10), (-1, 9), (1, 14), (-1, 13), (1, 12), (1, 5), (-1, 4), (1, 3), (-1, 8), (1, 7), (-1, 6), (1, 1), (-1, 2)),
        ((1, 16), (-1, 15), (1, 14), (-1, 13), (1, 12), (-1, 11), (1, 10), (-1, 9), (-1, 8), (1, 7), (-1, 6), (1, 5), (-1, 4), (1, 3), (-1, 2), (1, 1)),
    ),
    (2, 2): (
        ((1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 11), (1, 12), (1, 13), (1, 14), (1, 15), (1, 16)),
        ((1, 2), (1, 1), (1, 6), (1, 7), (1, 8), (1, 3), (1, 4), (1, 5), (1, 12), (1, 13), (1, 14), (1, 9), (1, 10), (1, 11), (1, 16), (1, 15)),
        ((1, 3), (-1, 6), (1, 1), (1, 9), (1, 10), (-1, 2), (-1, 12), (-1, 13), (1, 4), (1, 5), (1, 15), (-1, 7), (-1, 8), (-1, 16), (1, 11), (-1, 14)),
        ((-1, 4), (1, 7), (1, 9), (1, 1), (-1, 11), (-1, 12), (-1, 2), (1, 14), (-1, 3), (1, 15), (1, 5), (1, 6), (-1, 16), (-1, 8), (-1, 10), (1, 13)),
        ((-1, 5), (1, 8), (1, 10), (1, 11), (1, 1), (-1, 13), (-1, 14), (-1, 2), (-1, 15), (-1, 3), (-1, 4), (1, 16), (1, 6), (1, 7), (1, 9), (-1, 12)),
        ((-1, 6), (1, 3), (-1, 2), (-1, 12), (-1, 13), (1, 1), (1, 9), (1, 10), (-1, 7), (-1, 8), (-1, 16), (1, 4), (1, 5), (1, 15), (-1, 14), (1, 11)),
        ((1, 7), (-1, 4), (-1, 12), (-1, 2), (1, 14), (1, 9), (1, 1), (-1, 11), (1, 6), (-1, 16), (-1, 8), (-1, 3), (1, 15), (1, 5), (1, 13), (-1, 10)),
        ((1, 8), (-1, 5), (-1, 13), (-1, 14), (-1, 2), (1, 10), (1, 11), (1, 1), (1, 16), (1, 6), (1, 7), (-1, 15), (-1, 3), (-1, 4), (-1, 12), (1, 9)),
        ((1, 9), (1, 12), (-1, 4), (-1, 3), (1, 15), (-1, 7), (-1, 6), (1, 16), (1, 1), (-1, 11), (-1, 10), (1, 2), (-1, 14), (-1, 13), (1, 5), (1, 8)),
        ((1, 10), (1, 13), (-1, 5), (-1, 15), (-1, 3), (-1, 8), (-1, 16), (-1, 6), (1, 11), (1, 1), (1, 9), (1, 14), (1, 2), (1, 12), (-1, 4), (-1, 7)),
        ((-1, 11), (-1, 14), (-1, 15), (-1, 5), (1, 4), (-1, 16), (-1, 8), (1, 7), (-1, 10), (1, 9), (1, 1), (-1, 13), (1, 12), (1, 2), (1, 3), (1, 6)),
        ((1, 12), (1, 9), (-1, 7), (-1, 6), (1, 16), (-1, 4), (-1, 3), (1, 15), (1, 2), (-1, 14), (-1, 13), (1, 1), (-1, 11), (-1, 10), (1, 8), (1, 5)),
        ((1, 13), (1, 10), (-1, 8), (-1, 16), (-1, 6), (-1, 5), (-1, 15), (-1, 3), (1, 14), (1, 2), (1, 12), (1, 11), (1, 1), (1, 9), (-1, 7), (-1, 4)),
        ((-1, 14), (-1, 11), (-1, 16), (-1, 8), (1, 7), (-1, 15), (-1, 5), (1, 4), (-1, 13), (1, 12), (1, 2), (-1, 10), (1, 9), (1, 1), (1, 6), (1, 3)),
        ((-1, 15), (1, 16), (-1, 11), (-1, 10), (1, 9), (1, 14), (1, 13), (-1, 12), (-1, 5), (1, 4), (1, 3), (1, 8), (-1, 7), (-1, 6), (1, 1), (-1, 2)),
        ((1, 16), (-1, 15), (1, 14), (1, 13), (-1, 12), (-1, 11), (-1, 10), (1, 9), (1, 8), (-1, 7), (-1, 6), (-1, 5), (1, 4), (1, 3), (-1, 2), (1, 1)),
    ),
    (1, 3): (
        ((1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 11), (1, 12), (1, 13), (1, 14), (1, 15), (1, 16)),
        ((1, 2), (1, 1), (1, 6), (1, 7), (1, 8), (1, 3), (1, 4), (1, 5), (1, 12), (1, 13), (1, 14), (1, 9), (1, 10), (1, 11), (1, 16), (1, 15)),
        ((-1, 3), (1, 6), (1, 1), (-1, 9), (-1, 10), (-1, 2), (1, 12), (1, 13), (1, 4), (1, 5), (-1, 15), (-1, 7), (-1, 8), (1, 16), (1, 11), (-1, 14)),
        ((-1, 4), (1, 7), (1, 9), (1, 1), (-1, 11), (-1, 12), (-1, 2), (1, 14), (-1, 3), (1, 15), (1, 5), (1, 6), (-1, 16), (-1, 8), (-1, 10), (1, 13)),
        ((-1, 5), (1, 8), (1, 10), (1, 11), (1, 1), (-1, 13), (-1, 14), (-1, 2), (-1, 15), (-1, 3), (-1, 4), (1, 16), (1, 6), (1, 7), (1, 9), (-1, 12)),
        ((1, 6), (-1, 3), (-1, 2), (1, 12), (1, 13), (1, 1), (-1, 9), (-1, 10), (-1, 7), (-1, 8), (1, 16), (1, 4), (1, 5), (-1, 15), (-1, 14), (1, 11)),
        ((1, 7), (-1, 4), (-1, 12), (-1, 2), (1, 14), (1, 9), (1, 1), (-1, 11), (1, 6), (-1, 16), (-1, 8), (-1, 3), (1, 15), (1, 5), (1, 13), (-1, 10)),
        ((1, 8), (-1, 5), (-1, 13), (-1, 14), (-1, 2), (1, 10), (1, 11), (1, 1), (1, 16), (1, 6), (1, 7), (-1, 15), (-1, 3), (-1, 4), (-1, 12), (1, 9)),
        ((-1, 9), (-1, 12), (-1, 4), (1, 3), (-1, 15), (-1, 7), (1, 6), (-1, 16), (1, 1), (-1, 11), (1, 10), (1, 2), (-1, 14), (1, 13), (1, 5), (1, 8)),
        ((-1, 10), (-1, 13), (-1, 5), (1, 15), (1, 3), (-1, 8), (1, 16), (1, 6), (1, 11), (1, 1), (-1, 9), (1, 14), (1, 2), (-1, 12), (-1, 4), (-1, 7)),
        ((-1, 11), (-1, 14), (-1, 15), (-1, 5), (1, 4), (-1, 16), (-1, 8), (1, 7), (-1, 10), (1, 9), (1, 1), (-1, 13), (1, 12), (1, 2), (1, 3), (1, 6)),
        ((-1, 12), (-1, 9), (-1, 7), (1, 6), (-1, 16), (-1, 4), (1, 3), (-1, 15), (1, 2), (-1, 14), (1, 13), (1, 1), (-1, 11), (1, 10), (1, 8), (1, 5)),
        ((-1, 13), (-1, 10), (-1, 8), (1, 16), (1, 6), (-1, 5), (1, 15), (1, 3), (1, 14), (1, 2), (-1, 12), (1, 11), (1, 1), (-1, 9), (-1, 7), (-1, 4)),
        ((-1, 14), (-1, 11), (-1, 16), (-1, 8), (1, 7), (-1, 15), (-1, 5), (1, 4), (-1, 13), (1, 12), (1, 2), (-1, 10), (1, 9), (1, 1), (1, 6), (1, 3)),
        ((1, 15), (-1, 16), (-1, 11), (1, 10), (-1, 9), (1, 14), (-1, 13), (1, 12), (-1, 5), (1, 4), (-1, 3), (1, 8), (-1, 7), (1, 6), (1, 1), (-1, 2)),
        ((-1, 16), (1, 15), (1, 14), (-1, 13), (1, 12), (-1, 11), (1, 10), (-1, 9), (1, 8), (-1, 7), (1, 6), (-1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1)),
    ),
    (0, 4): (
        ((1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (1, 11), (1, 12), (1, 13), (1, 14), (1, 15), (1, 16)),
        ((-1, 2), (1, 1), (-1, 6), (-1, 7), (-1, 8), (1, 3), (1, 4), (1, 5), (-1, 12), (-1, 13), (-1, 14), (1, 9), (1, 10), (1, 11), (-1, 16), (1, 15)),
        ((-1, 3), (1, 6), (1, 1), (-1, 9), (-1, 10), (-1, 2), (1, 12), (1, 13), (1, 4), (1, 5), (-1, 15), (-1, 7), (-1, 8), (1, 16), (1, 11), (-1, 14)),
        ((-1, 4), (1, 7), (1, 9), (1, 1), (-1, 11), (-1, 12), (-1, 2), (1, 14), (-1, 3), (1, 15), (1, 5), (1, 6), (-1, 16), (-1, 8), (-1, 10), (1, 13)),
        ((-1, 5), (1, 8), (1, 10), (1, 11), (1, 1), (-1, 13), (-1, 14), (-1, 2), (-1, 15), (-1, 3), (-1, 4), (1, 16), (1, 6), (1, 7), (1, 9), (-1, 12)),
        ((-1, 6), (-1, 3), (1, 2), (-1, 12), (-1, 13), (1, 1), (-1, 9), (-1, 10), (1, 7), (1, 8), (-1, 16), (1, 4), (1, 5), (-1, 15), (1, 14), (1, 11)),
        ((-1, 7), (-1, 4), (1, 12), (1, 2), (-1, 14), (1, 9), (1, 1), (-1, 11), (-1, 6), (1, 16), (1, 8), (-1, 3), (1, 15), (1, 5), (-1, 13), (-1, 10)),
        ((-1, 8), (-1, 5), (1, 13), (1, 14), (1, 2), (1, 10), (1, 11), (1, 1), (-1, 16), (-1, 6), (-1, 7), (-1, 15), (-1, 3), (-1, 4), (1, 12), (1, 9)),
        ((-1, 9), (-1, 12), (-1, 4), (1, 3), (-1, 15), (-1, 7), (1, 6), (-1, 16), (1, 1), (-1, 11), (1, 10), (1, 2), (-1, 14), (1, 13), (1, 5), (1, 8)),
        ((-1, 10), (-1, 13), (-1, 5), (1, 15), (1, 3), (-1, 8), (1, 16), (1, 6), (1, 11), (1, 1), (-1, 9), (1, 14), (1, 2), (-1, 12), (-1, 4), (-1, 7)),
        ((-1, 11), (-1, 14), (-1, 15), (-1, 5), (1, 4), (-1, 16), (-1, 8), (1, 7), (-1, 10), (1, 9), (1, 1), (-1, 13), (1, 12), (1, 2), (1, 3), (1, 6)),
        ((1, 12), (-1, 9), (1, 7), (-1, 6), (1, 16), (-1, 4), (1, 3), (-1, 15), (-1, 2), (1, 14), (-1, 13), (1, 1), (-1, 11), (1, 10), (-1, 8), (1, 5)),
        ((1, 13), (-1, 10), (1, 8), (-1, 16), (-1, 6), (-1, 5), (1, 15), (1, 3), (-1, 14), (-1, 2), (1, 12), (1, 11), (1, 1), (-1, 9), (1, 7), (-1, 4)),
        ((1, 14), (-1, 11), (1, 16), (1, 8), (-1, 7), (-1, 15), (-1, 5), (1, 4), (1, 13), (-1, 12), (-1, 2), (-1, 10), (1, 9), (1, 1), (-1, 6), (1, 3)),
        ((1, 15), (-1, 16), (-1, 11), (1, 10), (-1, 9), (1, 14), (-1, 13), (1, 12), (-1, 5), (1, 4), (-1, 3), (1, 8), (-1, 7), (1, 6), (1, 1), (-1, 2)),
        ((1, 16), (1, 15), (-1, 14), (1, 13), (-1, 12), (-1, 11), (1, 10), (-1, 9), (-1, 8), (1, 7), (-1, 6), (-1, 5), (1, 4), (-1, 3), (1, 2), (1, 1)),
    ),
}
