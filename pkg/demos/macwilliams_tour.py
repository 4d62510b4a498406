"""From a Gabidulin code to its dual distribution, three different ways.

Builds the (3, 2) Gabidulin code over GF(2^3), computes its rank weight
distribution by enumeration, transforms it with the Krawtchouk kernel and
with the q-product form, and checks the answer against the brute-force
distribution of the dual code.  Ends with the moment identities.

Run:  python3 demos/macwilliams_tour.py
"""
from rankmetric import codes as cd
from rankmetric import wenum as we
from rankmetric.ffield import make_field

F = make_field(2, 3)
code = cd.gabidulin(F, (1, 2, 4), 2)
print(f"code: (n, k) = (3, 2) Gabidulin over GF(8), "
      f"d_R = {cd.min_rank_distance(code)} (Singleton: {3 - 2 + 1})")

A = we.code_enumerator(code)
print(f"rank distribution A = {A.coeffs}")

B_kraw = we.macwilliams(A)
B_prod = we.macwilliams(A, method="qproduct")
B_brute = tuple(cd.rank_distribution(cd.dual(code)))
print(f"dual distribution via Krawtchouk kernel: {B_kraw.coeffs}")
print(f"dual distribution via q-product:         {B_prod.coeffs}")
print(f"dual distribution by enumerating C^perp: {B_brute}")
assert B_kraw.coeffs == B_prod.coeffs == B_brute

back = we.macwilliams(B_kraw)
print(f"transforming back recovers A: {back.coeffs == A.coeffs}")

print("\nKrawtchouk kernel P_j(i) for (m, n) = (3, 3):")
for j, row in enumerate(we.krawtchouk_table(2, 3, 3)):
    print(f"  j={j}: {row}")

print("\nmoment identities (binomial and shell forms):")
for nu in range(4):
    l1, r1, l2, r2 = we.moments(A.coeffs, B_kraw.coeffs, 2, 3, 3, 2, nu)
    print(f"  nu={nu}:  {l1} == {r1}   {l2} == {r2}")

# the one-word code {0, v} family: its dual distribution only depends on
# the rank of v, matching the closed-form enumerator
r = 2
closed = we.dual_vector_enumerator(r, 3, 2, 3)
print(f"\ndual distribution of a rank-{r} one-dimensional code, closed "
      f"form: {closed.coeffs}")
