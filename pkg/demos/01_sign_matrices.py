"""Sign matrices, switching, vorticities and the exact characteristic polynomial."""
from pathlib import Path

import numpy as np

from skewlines import (
    SwitchingTransform,
    all_vorticities,
    apply_switching,
    canonical_form,
    char_poly,
    matrix_from_vorticities,
    switching_equivalent,
)
from skewlines.textio import format_matrix, parse_matrix

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"

# LOAD ====================================================================

X = parse_matrix((DATA / "skew6.txt").read_text())
print(format_matrix(X))

# SWITCHING ===============================================================

# relabel the lines and reverse a couple of orientations
T = SwitchingTransform(perm=(2, 1, 3, 6, 4, 5), signs=(1, -1, 1, 1, -1, 1))
Y = apply_switching(X, T)
print(format_matrix(Y))
print("equivalent:", switching_equivalent(X, Y))
print("same canonical form:", canonical_form(X) == canonical_form(Y))

# VORTICITIES =============================================================

vort = all_vorticities(X)
negative = [t for t, v in vort.items() if v == -1]
print(f"{len(negative)} of {len(vort)} triples have vorticity -1")

# the matrix comes back with row 1 normalized to +1
Z = matrix_from_vorticities(X.n, vort)
print("rebuilt equivalent:", switching_equivalent(X, Z))
print("row 1:", Z.tolist()[0])

# SPECTRUM ================================================================

p = char_poly(X)
print("charpoly:", p)
print("factored:", p.factored())

# cross-check against floating point eigenvalues
eig = np.sort(np.linalg.eigvalsh(np.array(X.tolist(), dtype=float)))
print("eigenvalues:", np.round(eig, 4))
print("max |p(lambda)|:", max(abs(float(p(float(e)))) for e in eig))
