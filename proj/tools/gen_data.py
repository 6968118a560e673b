#!/usr/bin/env python3
"""Regenerates the bundled category files in data/.

Values are written as exact field-element strings in the power basis of
Q(z), z a primitive n-th root of unity, n = cyclotomic_order.
"""
import itertools
import json
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def dump(name, obj):
    with open(os.path.join(OUT, name), "w") as f:
        json.dump(obj, f, indent=1, sort_keys=False)
        f.write("\n")


def vect():
    return {"format_version": 1, "backend": "skeletal", "cyclotomic_order": 1,
            "simples": ["1"], "duals": {}, "fusion": {}, "F": {}, "R": {},
            "twist": {}, "pivot": {}}


def abelian(names, vecs, add, rsym, order, theta):
    """Pointed category on an abelian group with trivial associator."""
    fusion, R = {}, {}
    for a, b in itertools.product(range(len(names)), repeat=2):
        c = vecs.index(add(vecs[a], vecs[b]))
        if a and b:
            fusion[f"{names[a]},{names[b]}"] = [names[c]]
        R[f"{names[a]},{names[b]};{names[c]}"] = rsym(vecs[a], vecs[b])
    F = {}
    for a, b, c in itertools.product(range(len(names)), repeat=3):
        e = vecs.index(add(vecs[a], vecs[b]))
        f = vecs.index(add(vecs[b], vecs[c]))
        d = vecs.index(add(vecs[e], vecs[c]))
        F[f"{names[a]},{names[b]},{names[c]};{names[d]};{names[e]},{names[f]}"] = "1"
    duals = {}
    for a in range(1, len(names)):
        neg = tuple((-x) % 2 for x in vecs[a])
        duals[names[a]] = names[vecs.index(neg)]
    return {"format_version": 1, "backend": "skeletal", "cyclotomic_order": order,
            "simples": names, "duals": duals, "fusion": fusion, "F": F, "R": R,
            "twist": {names[a]: theta(vecs[a]) for a in range(1, len(names))},
            "pivot": {names[a]: "1" for a in range(1, len(names))}}


def toric():
    vecs = [(0, 0), (1, 0), (0, 1), (1, 1)]
    add = lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)
    rsym = lambda x, y: "-1" if x[0] * y[1] % 2 else "1"
    theta = lambda x: "-1" if x[0] * x[1] % 2 else "1"
    return abelian(["1", "e", "m", "f"], vecs, add, rsym, 1, theta)


def rep_z2():
    # Rep(Z/2) with the trivial (symmetric) braiding: not modular.
    vecs = [(0,), (1,)]
    add = lambda x, y: ((x[0] + y[0]) % 2,)
    return abelian(["1", "s"], vecs, add, lambda x, y: "1", 1, lambda x: "1")


class Cyc5:
    """Element of Q(z), z^5 = 1, in the basis 1, z, z^2, z^3."""

    def __init__(self, c):
        c = [Fraction(x) for x in c] + [Fraction(0)] * (9 - len(c))
        # reduce with z^4 = -(1 + z + z^2 + z^3) and z^5 = 1
        for k in range(len(c) - 1, 3, -1):
            if k >= 5:
                c[k - 5] += c[k]
            else:
                for j in range(4):
                    c[j] -= c[4]
            c[k] = Fraction(0)
        self.c = c[:4]

    @staticmethod
    def z(k):
        v = [0] * 9
        v[k % 5] = 1
        return Cyc5(v)

    def __add__(self, o):
        return Cyc5([a + b for a, b in zip(self.c, o.c)])

    def __neg__(self):
        return Cyc5([-a for a in self.c])

    def __mul__(self, o):
        v = [Fraction(0)] * 9
        for i, a in enumerate(self.c):
            for j, b in enumerate(o.c):
                v[i + j] += a * b
        return Cyc5(v)

    def inv(self):
        # brute force: x^-1 = x^(order-1) is not available, solve linearly
        import sympy
        m = sympy.Matrix(4, 4, lambda i, j: (self * Cyc5.z(j)).c[i])
        sol = m.LUsolve(sympy.Matrix([1, 0, 0, 0]))
        return Cyc5([Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in sol])

    def __str__(self):
        den = 1
        for a in self.c:
            den = den * a.denominator // __import__("math").gcd(den, a.denominator)
        terms = []
        for k, a in enumerate(self.c):
            n = int(a * den)
            if n == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            mag = abs(n)
            body = str(mag) if (mono == "" or mag != 1) else ""
            body += mono
            terms.append(("-" if n < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sgn, body in terms[1:]:
            out += f" {sgn} {body}"
        return out if den == 1 else f"({out})/{den}"


def fib_data():
    """Fibonacci data over Q(zeta_5), in the gauge where F^{ttt}_t = [[1/phi, 1], [1/phi, -1/phi]]."""
    one, t = 0, 1
    fus = {(0, 0): [0], (0, 1): [1], (1, 0): [1], (1, 1): [0, 1]}
    phi_inv = Cyc5.z(1) + Cyc5.z(4)
    F = {}
    for a, b, c in itertools.product(range(2), repeat=3):
        for d in range(2):
            es = [e for e in fus[(a, b)] if d in fus[(e, c)]]
            fs = [f for f in fus[(b, c)] if d in fus[(a, f)]]
            for e in es:
                for f in fs:
                    F[(a, b, c, d, e, f)] = Cyc5([1])
    F[(1, 1, 1, 1, 0, 0)] = phi_inv
    F[(1, 1, 1, 1, 0, 1)] = Cyc5([1])
    F[(1, 1, 1, 1, 1, 0)] = phi_inv
    F[(1, 1, 1, 1, 1, 1)] = -phi_inv
    R = {(a, b, c): Cyc5([1]) for (a, b), cs in fus.items() for c in cs}
    R[(1, 1, 0)] = Cyc5.z(3)       # exp(-4 pi i / 5)
    R[(1, 1, 1)] = -Cyc5.z(4)      # exp(3 pi i / 5)
    theta = [Cyc5([1]), Cyc5.z(2)]  # exp(4 pi i / 5)
    return fus, F, R, theta


def fib2(pivot_t=None):
    fus, F, R, theta = fib_data()
    # reverse braiding: R'^{ab}_c = 1 / R^{ba}_c, theta' = 1 / theta
    Rrev = {(a, b, c): R[(b, a, c)].inv() for (a, b, c) in R}
    trev = [x.inv() for x in theta]
    pairs = [(0, 0), (1, 0), (0, 1), (1, 1)]
    names = ["1", "t1", "1t", "tt"]
    idx = {p: i for i, p in enumerate(pairs)}
    fusion, Fj, Rj = {}, {}, {}
    for A, B in itertools.product(pairs, repeat=2):
        cs = [(c1, c2) for c1 in fus[(A[0], B[0])] for c2 in fus[(A[1], B[1])]]
        if A != (0, 0) and B != (0, 0):
            fusion[f"{names[idx[A]]},{names[idx[B]]}"] = [names[idx[c]] for c in cs]
        for C in cs:
            Rj[f"{names[idx[A]]},{names[idx[B]]};{names[idx[C]]}"] = str(R[(A[0], B[0], C[0])] * Rrev[(A[1], B[1], C[1])])
    for k1 in F:
        for k2 in F:
            key = [(k1[i], k2[i]) for i in range(6)]
            n = [names[idx[p]] for p in key]
            Fj[f"{n[0]},{n[1]},{n[2]};{n[3]};{n[4]},{n[5]}"] = str(F[k1] * F[k2])
    tw = {names[idx[p]]: str(theta[p[0]] * trev[p[1]]) for p in pairs[1:]}
    pv = pivot_t or {"t1": "1", "1t": "1", "tt": "1"}
    return {"format_version": 1, "backend": "skeletal", "cyclotomic_order": 5,
            "simples": names, "duals": {n: n for n in names[1:]}, "fusion": fusion,
            "F": Fj, "R": Rj, "twist": tw, "pivot": pv}


def group_algebra_z2():
    from drinfeld import Hopf
    one = Fraction(1)
    mult = {(a, b): {(a + b) % 2: one} for a in range(2) for b in range(2)}
    return Hopf(2, mult, [one, Fraction(0)], {i: {(i, i): one} for i in range(2)},
                [one, one], [[one, Fraction(0)], [Fraction(0), one]])


def sweedler():
    """Sweedler's algebra: g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x.
    Basis g^a x^b at index 2b + a."""
    from drinfeld import Hopf
    el = lambda a, b: 2 * b + a
    mult = {}
    for a, b, c, d in itertools.product(range(2), repeat=4):
        if b + d < 2:
            mult[(el(a, b), el(c, d))] = {el((a + c) % 2, b + d): Fraction((-1) ** (b * c))}
    comult = {}
    for a in range(2):
        comult[el(a, 0)] = {(el(a, 0), el(a, 0)): Fraction(1)}
        comult[el(a, 1)] = {(el(a, 1), el(a, 0)): Fraction(1), (el((a + 1) % 2, 0), el(a, 1)): Fraction(1)}
    S = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    return Hopf(4, mult, [Fraction(1), 0, 0, 0], comult, [Fraction(x) for x in (1, 1, 0, 0)],
                [[Fraction(x) for x in r] for r in S])


def fstr(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def hopf_json(D, R, ribbon, modules, order):
    return {"format_version": 1, "backend": "hopf", "cyclotomic_order": order, "dim": D.n,
            "mult": {f"{i},{j}": {str(k): fstr(c) for k, c in sorted(d.items())}
                     for (i, j), d in sorted(D.mult.items())},
            "unit": [fstr(x) for x in D.unit_v],
            "comult": {str(i): {f"{j},{k}": fstr(c) for (j, k), c in sorted(d.items())}
                       for i, d in sorted(D.comult.items())},
            "counit": [fstr(x) for x in D.counit],
            "antipode": {str(i): [fstr(x) for x in row] for i, row in enumerate(D.S)},
            "R": {f"{j},{k}": fstr(c) for (j, k), c in sorted(R.items())},
            "ribbon": ribbon,
            "modules": modules}


def character_module(name, chi):
    return {"name": name, "dim": 1, "action": {str(i): [[fstr(c)]] for i, c in enumerate(chi) if c}}


def dz2_hopf():
    """D(Z/2). Simple modules are characters (h, beta); the braiding c_{X,Y} is beta_X(h_Y),
    so the labels line up with toric: e = (1, sgn), m = (g, triv), f = (g, sgn)."""
    from drinfeld import double, ribbon_element, characters
    H = group_algebra_z2()
    D, R, emb_H, emb_dual = double(H)
    one, zero = Fraction(1), Fraction(0)
    grp = {"1": [one, zero], "g": [zero, one]}
    chars = {"triv": [one, one], "sgn": [one, -one]}
    G = [D.mul(emb_dual(b), emb_H(h)) for b in chars.values() for h in grp.values()]
    v = ribbon_element(D, R, G)
    mods = []
    for name, h, beta in (("1", "1", "triv"), ("e", "1", "sgn"), ("m", "g", "triv"), ("f", "g", "sgn")):
        chi = characters(H, D, [grp[h]], [chars[beta]])
        assert len(chi) == 1
        mods.append(character_module(name, chi[0]))
    return hopf_json(D, R, [fstr(x) for x in v], mods, 1)


def sweedler_ribbon_candidate(D, R, grouplikes):
    """v = G^-1 u for the first grouplike G with S^2 = Ad(G).

    D(H4) has no ribbon element. This v is central with eps(v) = 1 and
    (R21 R) Delta(v) = v (x) v, so the pivot u v^-1 = G is grouplike and the
    twist is balanced. Only S(v) = v fails, and the axiom report names it."""
    from drinfeld import drinfeld_u, inverse
    u = drinfeld_u(D, R)
    for G in grouplikes:
        Gi = inverse(D, G)
        if all(D.antipode(D.antipode(D.basis(i))) == D.mul(D.mul(G, D.basis(i)), Gi) for i in range(D.n)):
            return [fstr(x) for x in D.mul(Gi, u)]
    raise ValueError("no grouplike implements S^2")


def sweedler_double():
    from drinfeld import double, characters, submodule, module_action
    H = sweedler()
    D, R, emb_H, emb_dual = double(H)
    one, zero = Fraction(1), Fraction(0)
    grp = [[one, zero, zero, zero], [zero, one, zero, zero]]
    hchars = [[one, one, zero, zero], [one, -one, zero, zero]]
    chis = characters(H, D, grp, hchars)
    mods = [character_module(n, c) for n, c in zip(("1", "s"), chis)]
    # the two 2-dimensional simples, as minimal left ideals generated by basis products
    seen = []
    for i, j in itertools.product(range(D.n), repeat=2):
        w = D.mul(D.basis(i), D.basis(j))
        if not any(w):
            continue
        b = submodule(D, [w])
        if len(b) != 2:
            continue
        acts = module_action(D, b)
        tr = tuple(a[0][0] + a[1][1] for a in acts)
        if tr in seen:
            continue
        seen.append(tr)
        mods.append({"name": "vw"[len(seen) - 1], "dim": 2,
                     "action": {str(k): [[fstr(x) for x in r] for r in a]
                                for k, a in enumerate(acts) if any(any(r) for r in a)}})
        if len(seen) == 2:
            break
    dgrp = [D.mul(emb_dual(b), emb_H(h)) for b in hchars for h in grp]
    return hopf_json(D, R, sweedler_ribbon_candidate(D, R, dgrp), mods, 4)


if __name__ == "__main__":
    which = sys.argv[1:] or ["vect", "toric", "rep_z2", "fib2", "dz2_hopf", "sweedler_double"]
    for w in which:
        dump(w + ".json", globals()[w]())
