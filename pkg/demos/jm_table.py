"""Power sums of Jucys-Murphy elements in the normalized class basis.

Prints p_m(Xi) for m <= 6, then substitutes n = 5 and compares with a
direct computation in the group algebra of S_5.
"""
from symclass import classes
from symclass import group_algebra as ga

table = classes.jm_table(6)
print(classes.table_to_text(table))

n = 5
print(f"\nchecking against S_{n}:")
for m, row in table.items():
    direct = ga.class_decomposition(ga.jm_power_sum(n, m))
    ok = classes.to_classes(row, n) == direct
    print(f"  m={m}: {'agrees' if ok else 'DISAGREES'}")

print("\na_2 x a_2 =", classes.format_row(classes.a_structure((2,), (2,))))
print("p_2(Xi) x a_2 =", classes.format_row(classes.product_in_a(2, (2,), check_n=[5, 6])))
