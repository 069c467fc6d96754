"""Independent reference values for the C++ test-suite, computed with sympy.

Run:  python3 tests/oracles/oracles.py > tests/oracles/oracle_values.txt

Every value printed here is frozen into the unit and acceptance tests; the
C++ code never calls this script.
"""
from sympy import symbols, groebner, expand, diff, factorial, Rational, reduced, Poly

def show(label, value):
    print(f"{label}: {value}")

def kernel(src, images, tgt, rels, order_src='grevlex'):
    """Kernel of src_i -> images_i into k[tgt]/(rels), by lex elimination."""
    gens = list(rels) + [s - im for s, im in zip(src, images)]
    gb = groebner(gens, *tgt, *src, order='lex')
    keep = [g for g in gb.exprs if not (set(g.free_symbols) & set(tgt))]
    return groebner(keep, *src, order=order_src).exprs if keep else []

def deriv(images, a):
    return expand(sum(diff(a, v) * im for v, im in images.items()))

def power(images, a, n):
    for _ in range(n):
        a = deriv(images, a)
    return a

x, y, z, t, u, v, w = symbols('x y z t u v w')
ups = symbols('upsilon')

# groebner module
_, r = reduced(x**2 * y, [x**2 - y], x, y, order='lex')
show("NF(x^2*y, {x^2-y}) lex x>y", r)
show("GB{x^2, x*y} grevlex", groebner([x**2, x*y], x, y, order='grevlex').exprs)
show("GB{x-t^2, y-t^3} lex t>x>y", groebner([x - t**2, y - t**3], t, x, y, order='lex').exprs)
show("GB{x-t, y-t^2, z-t^3} lex t>x>y>z", groebner([x - t, y - t**2, z - t**3], t, x, y, z, order='lex').exprs)
X, Y = symbols('X Y')
show("ker X->t^2, Y->t^3", kernel([X, Y], [t**2, t**3], [t], []))
a, b, c = symbols('a b c')
show("ker a->x^2, b->x*y, c->y^2", kernel([a, b, c], [x**2, x*y, y**2], [x, y], []))

# lnd module, SL2
sl2 = {x: 0, y: 0, u: x, v: y}
show("SL2 d(uv)", deriv(sl2, u*v))
show("SL2 d^2(uv)", power(sl2, u*v, 2))
show("SL2 D^(2)(uv)", expand(power(sl2, u*v, 2) / 2))
s = symbols('s')
show("SL2 exp(s d)(uv)", expand(sum(power(sl2, u*v, i) / factorial(i) * s**i for i in range(4))))
tri = {x: 0, y: x**2, z: 2*y, t: 0}
show("tri d^k z, k=1..3", [power(tri, z, k) for k in (1, 2, 3)])
show("tri d(x^2 z - y^2)", deriv(tri, x**2*z - y**2))

# Rees presentations for the generator sets the algorithm reports
def rees_relations(names, elems, weights, tgt, rels, order='grevlex'):
    Xs = symbols(names)
    images = [e * ups**wt for e, wt in zip(elems, weights)]
    return kernel(list(Xs), images, list(tgt) + [ups], rels, order)

show("SL2 relations", rees_relations('Xx Xy Xu Xv X0', [x, y, u, v, 1], [0, 0, 1, 1, 1], [x, y, u, v], [x*v - y*u - 1]))
show("Danielewski relations", rees_relations('Xx Xy Xz X0', [x, y, z, 1], [0, 1, 2, 1], [x, y, z], [x*z - y**2 + 1]))
show("triangular relations", rees_relations('Xx Xt Xw Xy X0 Xz', [x, t, x**2*z - y**2, y, 1, z], [0, 0, 0, 1, 1, 2], [x, y, z, t], []))
w1, w2, w3 = symbols('w1 w2 w3')
three_rels = [y*w3 - w1*w2, x*w2 - y*(y*w1 + 1), x*w3 - w1*(y*w1 + 1)]
show("threefold relations", rees_relations('Xx Xy XW1 XW2 X0 XW3', [x, y, w1, w2, 1, w3], [0, 0, 1, 1, 1, 2], [x, y, w1, w2, w3], three_rels))
Xx, Xy, XW1, XW2, X0, XW3 = symbols('Xx Xy XW1 XW2 X0 XW3')
listed3 = [Xx*XW2 - Xy*(Xy*XW1 + X0), Xy*XW3 - XW1*XW2, Xx*XW3 - XW1*(Xy*XW1 + X0)]
show("threefold listed ideal GB", groebner(listed3, Xx, Xy, XW1, XW2, X0, XW3, order='grevlex').exprs)

# torsor extension subalgebra B[upsilon, xu, xv, yv] of k[x, y, u, v]
Bx, By, U, XX, ZZ, YY = symbols('Bx By U X Z Y')
show("torsor relations", kernel([Bx, By, U, XX, ZZ, YY], [x, y, x*v - y*u, x*u, x*v, y*v], [x, y, u, v], []))
show("torsor listed J GB", groebner([Bx*YY - By*ZZ, By*XX - Bx*(ZZ - U), XX*YY - ZZ*(ZZ - U)], Bx, By, U, XX, ZZ, YY, order='grevlex').exprs)

# Winkelmann
wk = x*v - y*u
c1 = x*(1 + wk) - u*z
c2 = y*(1 + wk) - v*z
wink = {u: 0, v: 0, x: u, y: v, z: 1 + wk}
show("Winkelmann d(w), d(c1), d(c2)", [deriv(wink, e) for e in (wk, c1, c2)])
show("Winkelmann relations", rees_relations('Xu Xv Xw Xc1 Xc2 Xx Xy Xz X0', [u, v, wk, c1, c2, x, y, z, 1], [0, 0, 0, 0, 0, 1, 1, 1, 1], [u, v, x, y, z], []))
