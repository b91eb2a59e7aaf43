"""Independent sympy computations whose outputs are frozen in tests/test_milnor.cpp."""
import mpmath as mp
import sympy as sp

x, y = sp.symbols("x y")

CORPUS = {
    "ex82": 2*x**2*y**3 - 9*x*y**2 + 12*y,
    "ex81": x**2*y**3*(y**2-25)**2 + 2*x*y*(y**2-25)*(y+25) - (y**4+y**3-50*y**2-51*y+575),
    "broughton": x + x**2*y,
    "quartic": (x**2 - 1)**2,
    "cubic": x**3 - 3*x + y**2,
    "circle": x**3 + x*y**2 - 4*x + 5,
    "mixed": x**2*y - y**3 + x*y + 2*x,
}


def real_solutions(eqs):
    """Real common zeros: real roots of the resultant in x, candidate y values
    from the fibre, then joint Newton polishing and a residual test."""
    g1, g2 = [sp.Poly(e, x, y) for e in eqs]
    r = sp.Poly(sp.resultant(g1.as_expr(), g2.as_expr(), y), x)
    if r.degree() < 1:
        return []
    mp.mp.dps = 80
    F = [sp.lambdify((x, y), g.as_expr(), "mpmath") for g in (g1, g2)]
    D = [[sp.lambdify((x, y), sp.diff(g.as_expr(), v), "mpmath") for v in (x, y)] for g in (g1, g2)]
    terms = [g.terms() for g in (g1, g2)]

    def scale(k, xv, yv):
        return sum(abs(c) * abs(xv) ** i * abs(yv) ** j for (i, j), c in terms[k])

    fibre_src = g1 if g1.degree(y) >= g2.degree(y) else g2
    pts = []
    for x0 in sp.Poly(sp.sqf_part(r.as_expr()), x).real_roots():
        xv = mp.mpf(str(sp.N(x0, 90)))
        coeffs = [mp.mpf(str(sp.N(c.subs(x, sp.N(x0, 90)), 90))) for c in sp.Poly(fibre_src.as_expr(), y).all_coeffs()]
        while coeffs and abs(coeffs[0]) < mp.mpf(10) ** -60:
            coeffs.pop(0)
        if len(coeffs) < 2:
            continue
        for yc in mp.polyroots(coeffs, maxsteps=400, extraprec=400):
            if abs(mp.im(yc)) > 1e-8:
                continue
            X, Y = xv, mp.re(yc)
            for _ in range(200):
                a, b = F[0](X, Y), F[1](X, Y)
                j = mp.matrix([[D[0][0](X, Y), D[0][1](X, Y)], [D[1][0](X, Y), D[1][1](X, Y)]])
                if abs(mp.det(j)) < mp.mpf(10) ** -70:
                    break
                step = mp.lu_solve(j, mp.matrix([a, b]))
                X, Y = X - step[0], Y - step[1]
                if abs(step[0]) + abs(step[1]) < mp.mpf(10) ** -70:
                    break
            ok = all(abs(F[k](X, Y)) <= mp.mpf(10) ** -25 * (1 + scale(k, X, Y)) for k in range(2))
            if ok and all(abs(px - X) + abs(py - Y) > 1e-10 for px, py in pts):
                pts.append((X, Y))
    return pts


def mu_points(f):
    J = sp.expand(sp.diff(f, x)*2*y - sp.diff(f, y)*2*x)
    h = sp.sqf_part(J)
    comp = sp.expand(x*sp.diff(h, y) - y*sp.diff(h, x))
    g = sp.gcd(h, comp)
    hh = sp.cancel(h/g)
    cc = sp.expand(x*sp.diff(hh, y) - y*sp.diff(hh, x))
    pts = real_solutions([hh, cc]) if sp.Poly(hh, x, y).total_degree() > 0 else []
    return pts, sp.factor(g)


def critical(f):
    fx, fy = sp.diff(f, x), sp.diff(f, y)
    g = sp.gcd(fx, fy)
    pts = real_solutions([sp.cancel(fx/g), sp.cancel(fy/g)]) if g.is_number else None
    if pts is None:
        return "has curve component"
    fl = sp.lambdify((x, y), f, "mpmath")
    vals = []
    for px, py in pts:
        v = fl(px, py)
        if all(abs(v - w) > 1e-20 for w in vals):
            vals.append(v)
    return [mp.nstr(v, 20) for v in sorted(vals)]


if __name__ == "__main__":
    for name, f in CORPUS.items():
        pts, g = mu_points(f)
        norms = [float(mp.sqrt(px**2 + py**2)) for px, py in pts]
        print(name, "mu points:", len(pts), "max norm:", max(norms) if norms else None, "shared:", g)
        print(name, "critical values:", critical(f))
