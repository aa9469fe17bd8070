"""Tour of the sixteen partition-counting functions.

Prints a table of early values for every function, spot-checks the
published single values, and replays one product-form-versus-enumeration
cross-check by hand.
"""

from podium import FunctionId, count_by_enumeration, gf_series, table

NMAX = 12

print(f"values of every counting function up to n = {NMAX}\n")
width = max(len(f.value) for f in FunctionId)
header = " " * (width + 2) + "".join(f"{n:>6}" for n in range(NMAX + 1))
print(header)
for fid in FunctionId:
    row = table(fid, NMAX)
    print(f"{fid.value:<{width}}  " + "".join(f"{v:>6}" for v in row))

print("\nsingle values with published counts:")
for fid, n, expected in [
    (FunctionId.P, 4, 5),
    (FunctionId.POD, 4, 3),
    (FunctionId.PED, 6, 9),
    (FunctionId.OPBAR, 3, 8),
    (FunctionId.CUBIC, 3, 4),
    (FunctionId.QODD3, 4, 9),
    (FunctionId.EO, 8, 12),
    (FunctionId.EOBAR, 8, 5),
]:
    value = gf_series(fid, n)[n]
    print(f"  {fid.value}({n}) = {value}   (expected {expected})")
    assert value == expected

# Every function has two fully independent realizations: a Pochhammer
# product form and a brute-force object count.  Comparing them is the
# package's core self-check; here it is for one function.
print("\nproduct form versus enumeration for eo(n), n <= 20:")
series = gf_series(FunctionId.EO, 20)
counts = [count_by_enumeration(FunctionId.EO, n) for n in range(21)]
print("  series:      ", list(series))
print("  enumeration: ", counts)
assert counts == list(series)
print("  identical.")
