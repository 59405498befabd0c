# The bar involution on the second tensor power, truncated at a cutoff,
# and the bar-invariant basis it determines.

from qsuper.cli import render_vector
from qsuper.tensor import bar_n2, bar_vector_n2, m2_in_L, t2_closed, truncate

D = 30

v = bar_n2((1, -1), 6)
print(render_vector(v, "N"))

# Applying bar twice gives back the starting vector below the cutoff.

print(bar_vector_n2(bar_n2((2, -1), D), D))

# The closed-form T vectors are bar-fixed.

t = t2_closed((0, 0))
print(render_vector(t, "N"))
print(bar_vector_n2(t, D) == truncate(t, D))

# M in terms of the dual canonical basis.

print(m2_in_L((1, -1)))
