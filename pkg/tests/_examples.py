"""Shared worked examples: four 2x2-block matrices A, B (4x5, codimension 2),
their (4,5)-minors A45, B45, and two 2x4 matrices C, D (codimension 3),
together with independently frozen expected values used across the suite.
"""

MATRIX_A = [
    [2, 2, 5, 5, 5],
    [2, 2, 5, 5, 5],
    [-2, -2, 1, 1, 1],
    [-2, -2, 1, 1, 1],
]
MATRIX_B = [
    [1, 2, 5, 5, 5],
    [1, 2, 5, 5, 5],
    [-3, -2, 1, 1, 1],
    [-3, -2, 1, 1, 1],
]
# A45 / B45: delete row 4 and column 5 (same codimension, one size down)
MATRIX_A45 = [
    [2, 2, 5, 5],
    [2, 2, 5, 5],
    [-2, -2, 1, 1],
]
MATRIX_B45 = [
    [1, 2, 5, 5],
    [1, 2, 5, 5],
    [-3, -2, 1, 1],
]
MATRIX_C = [
    [3, 3, 3, 3],
    [1, 1, 1, 1],
]
MATRIX_D = [
    [2, 2, 2, 2],
    [1, 1, 1, 1],
]

H_A = (1, 2, 3, 4, 5, 6, 4, 4, 4, 2)
H_B = (1, 2, 3, 4, 5, 3, 3, 3, 2)
H_A45 = (1, 2, 3, 4, 5, 4, 4, 4, 2)
H_B45 = (1, 2, 3, 4, 3, 3, 3, 2)
H_C = (1, 3, 6, 10, 9, 7, 3, 1)
H_D = (1, 3, 6, 4, 1)

ALL_SIX = [
    ("A", MATRIX_A, H_A),
    ("B", MATRIX_B, H_B),
    ("A45", MATRIX_A45, H_A45),
    ("B45", MATRIX_B45, H_B45),
    ("C", MATRIX_C, H_C),
    ("D", MATRIX_D, H_D),
]

# a 3x5 matrix that passes every purity shortcut and screen and is decided
# only by the exhaustive search (not pure, 1099 nodes under default budgets)
MATRIX_SEARCH = [
    [1, 1, 3, 3, 3],
    [1, 1, 3, 3, 3],
    [-1, -1, 1, 1, 1],
]
H_SEARCH = (1, 3, 6, 7, 9, 5, 3)

# unequal rows and a zero entry; reduces to the equal-rows [[2, 2]]
MATRIX_ZERO = [
    [1, 2, 2],
    [0, 1, 1],
]
