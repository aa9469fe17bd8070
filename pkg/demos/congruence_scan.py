"""Congruence properties of the distinct-odd-parts function.

Scans the arithmetic progression 27n + 26 for divisibility by 3, then
confirms the mod-2 companions: the two-colored-even count, the
three-colored distinct-odd count, and the self-convolution relation.
"""

from podium import FunctionId, constant, gf_series, named_theta

ORDER = 600

pod = gf_series(FunctionId.POD, ORDER)

print("pod(27n + 26) and its residue mod 3:")
n = 0
while 27 * n + 26 <= ORDER:
    value = pod[27 * n + 26]
    print(f"  n={n:<2} pod({27 * n + 26:>3}) = {value}  -> mod 3 = {value % 3}")
    assert value % 3 == 0
    n += 1
print(f"divisible by 3 at every index checked (n < {n}).\n")

cubic = gf_series(FunctionId.CUBIC, ORDER)
qodd3 = gf_series(FunctionId.QODD3, ORDER)
assert pod.reduce_mod(2) == cubic.reduce_mod(2)
assert pod.reduce_mod(2) == qodd3.reduce_mod(2)
print(f"pod agrees mod 2 with cubic and with qodd3 up to order {ORDER}.")

# The self-convolution of pod interleaves the three-colored partition
# numbers mod 2: odd positions vanish, position 2m carries p_3(m).
p3_dilated = gf_series(FunctionId.P3, ORDER).substitute(2)
assert (pod * pod).reduce_mod(2) == p3_dilated.reduce_mod(2)
print("pod self-convolution matches dilated three-colored partitions mod 2.")

# And the unsigned triangular recurrence collapses to 1 mod 2.
triangular_sum = named_theta("psi", ORDER)
assert (pod * triangular_sum).reduce_mod(2) == constant(1, ORDER)
print("unsigned triangular convolution of pod telescopes to 1 mod 2.")
