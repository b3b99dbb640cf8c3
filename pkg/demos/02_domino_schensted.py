"""Applying the skew domino Schensted correspondence and inverting it.

Run with ``python3 demos/02_domino_schensted.py``.
"""
from skewdomino import PPM, SDT, ChainTableau, phi, phi_inverse, phi_sym, phi_sym_inverse
from skewdomino.growth import DOMINO
from skewdomino.schensted import colored_perm_stats, cp_of_matrix, phi_diagram
from skewdomino.tableaux import sdt_stats

# Start from a 2x2 partial permutation matrix with one barred entry and
# empty boundary tableaux on the 2-core (2,1).
core = (2, 1)
U = V = ChainTableau.empty(SDT, core)
M = PPM.parse("0 1; -1 0")

G = phi_diagram(U, V, M, DOMINO)
print("growth diagram (rows top-down):")
for row in G.grid:
    print("   ", "  ".join(str(p) for p in row))

P, Q = phi(U, V, M)
print(f"P = {P} on {P.shape}\nQ = {Q} on {Q.shape}")

# The map is invertible: the bottom row and right column alone rebuild it.
assert phi_inverse(P, Q) == (U, V, M)
print("round trip ok")

# A symmetric matrix is a colored involution; phi_sym returns one tableau
# whose domino counts record the cycle structure.
S = PPM.parse("0 0 -1; 0 1 0; -1 0 0")
D = phi_sym(ChainTableau.empty(SDT, ()), S)
stats = colored_perm_stats(cp_of_matrix(S))
print(f"\ninvolution {cp_of_matrix(S).cycle_string()} -> D = {D}")
print(f"  cycle stats {stats._asdict()}")
print(f"  domino stats {sdt_stats(D)._asdict()}")
assert phi_sym_inverse(D)[1] == S
