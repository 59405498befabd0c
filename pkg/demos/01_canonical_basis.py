# Canonical basis vectors of the q-wedge space, computed by the recursive
# procedure and checked against the q = 1 closed form.

from qsuper import ucb, ucb_q1, ucb_q1_closed
from qsuper.canonical import procedure_trace
from qsuper.cli import render_vector

# The smallest interesting case: two zeros.

print(render_vector(ucb((0, 0)), "F"))

# A typical weight (at most one zero, no pair a, -a) is its own canonical vector.

print(render_vector(ucb((3, 1, -2)), "F"))

# A longer example. The procedure records the operators it applies on the way
# down to a typical weight.

lam = (5, 3, 2, 1, 0, 0, -1, -4, -6)
for g, mu in procedure_trace(lam):
    print(g, mu)
print(render_vector(ucb(lam), "F"))

# At q = 1 the coefficients are powers of 2, and the closed form agrees.

lam = (0, 0, 0, 0)
print(render_vector(ucb_q1(lam), "F"))
print(ucb_q1(lam) == ucb_q1_closed(lam))
