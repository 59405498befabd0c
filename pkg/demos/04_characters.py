# Characters: Schur P-functions, Euler characters, irreducible characters,
# and the decomposition numbers linking them.

from qsuper import ch_euler, ch_irreducible, decomposition_column, schur_p
from qsuper.canonical import decomposition_row
from qsuper.characters import pieri_check

print(schur_p((1, -1)))
print(ch_euler((1, -1)))

# The Euler character of (1,-1) contains the trivial module twice.

print(decomposition_row((1, -1)))
print(ch_irreducible((1, -1)))

# Columns of the decomposition matrix.

print(decomposition_column((0, 0, 0)))
print(decomposition_column((0, 0, 0), "closed"))

# The natural module.

print(ch_irreducible((1, 0, 0)))

# Multiplying by x1 + ... + xn.

lhs, rhs = pieri_check((1, 0, -1))
print(lhs == rhs)
print(rhs)
