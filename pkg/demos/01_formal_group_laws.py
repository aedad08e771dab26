"""Formal group laws in logarithm form: sums, inverses, n- and t-series.

Walks through the three standard laws (additive, multiplicative,
universal-truncated) and prints the series the rest of the package is
built from.
"""

from cobschur import RingContext, Series, FormalGroupLaw

print(__doc__)

for mode in ("additive", "multiplicative", "universal"):
    scalars = ("beta",) if mode == "multiplicative" else ()
    ctx = RingContext(n_x=2, m_order=3 if mode == "universal" else 0,
                      deg_bound=4, scalars=scalars)
    fgl = FormalGroupLaw(ctx, mode)
    x1, x2 = Series.gen(ctx, "x1"), Series.gen(ctx, "x2")
    print("== %s ==" % mode)
    print("  x1 +_L x2      =", fgl.formal_sum(x1, x2).text())
    print("  inverse of x1  =", fgl.formal_inverse(x1).text())
    print("  [2](x1)        =", fgl.n_series(2, x1).text())
    print("  log(x1)        =", fgl.logarithm(x1).text())
    print()

ctx = RingContext(n_x=1, m_order=3, deg_bound=4, scalars=("t",))
fgl = FormalGroupLaw(ctx, "universal")
x = Series.gen(ctx, "x1")
ts = fgl.t_series(x)
print("universal [t](x) =", ts.truncate(2).text(), "+ ...")
print("  at t = -1 it is the formal inverse:",
      ts.substitute_gen("t", -1) == fgl.formal_inverse(x))
print("  at t = 2 it is the 2-series:      ",
      ts.substitute_gen("t", 2) == fgl.n_series(2, x))

print()
print("low coefficients of the universal sum F(u,v) = u + v + sum a_ij u^i v^j:")
for (i, j) in ((1, 1), (1, 2), (2, 2)):
    print("  a_%d%d =" % (i, j), fgl.a_coefficient(i, j).text())
