"""Spindle permutations, the three moves, and reconstruction."""
import itertools

from skewlines import (
    find_spindle,
    move_circular,
    move_horizontal,
    move_vertical,
    spindle_closure,
    spindle_matrix,
    switching_equivalent,
)
from skewlines.census import class_codes
from skewlines.signmat import canonical_code, matrix_from_code
from skewlines.textio import format_matrix

sigma = (1, 4, 2, 5, 3)
print(format_matrix(spindle_matrix(sigma)))

# MOVES ===================================================================

print("circular (1,0):  ", move_circular(sigma, 1, 0))
print("vertical k=5:    ", move_vertical(sigma, 5))
print("horizontal k=5:  ", move_horizontal(sigma, 5))

orbit = spindle_closure(sigma)
print(len(orbit), "permutations reachable by moves")
print(all(switching_equivalent(spindle_matrix(p), spindle_matrix(sigma)) for p in orbit))

# RECONSTRUCTION ==========================================================

X = spindle_matrix((3, 6, 1, 5, 2, 4))
res = find_spindle(X)
print("sigma", res.sigma, "gamma", res.gamma, "verified", res.verify(X))

# one class of order 6 has no spindle at all
spindles = {canonical_code(spindle_matrix(p)) for p in itertools.permutations(range(1, 7))}
for code in class_codes(6):
    if code not in spindles:
        Y = matrix_from_code(6, code)
        print(format_matrix(Y))
        print("find_spindle ->", find_spindle(Y))
