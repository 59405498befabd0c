# Straightening tensor words into the F basis of the q-wedge space,
# and the action of the quantum group on it.

import random

from qsuper.cli import render_vector
from qsuper.tensor import E, F
from qsuper.wedge import Fvec, act_wedge, straighten

# A bad pair is rewritten until every word is in normal form.

print(render_vector(straighten((1, -1)), "F"))
print(render_vector(straighten((2, 2)), "F"))
print(render_vector(straighten((0, 1, -1)), "F"))

# The result does not depend on the order in which bad pairs are rewritten.

w = (2, -3, 0, 1)
print(straighten(w) == straighten(w, "rightmost") ==
      straighten(w, "random", rng=random.Random(0)))

# Generators act on F vectors through the tensor space.

print(render_vector(act_wedge(E(0), Fvec(1, 0)), "F"))
print(render_vector(act_wedge(F(1), Fvec(1, 0, -1)), "F"))
