# Crystal operators on integer sequences, from i-signatures.

from qsuper.crystal import dominant, dual, i_signature, i_string, primed

lam = (1, 2, 0, -3, -2, -1, 0, 1)

# The i-signature lists, entry by entry, the +/- symbols seen by node i.

print(i_signature(lam, 0))
print(i_signature(lam, 1))

# Primed operators cancel +- pairs; dual operators cancel -+ pairs.

print(primed(lam, 0))
print(dual(lam, 0))

# On dominant weights every i-string has length at most 2.

print(dominant((0, 0), 0))
print(i_string((0, 0), 0))
print(i_string((2, 0, -1), 1))
