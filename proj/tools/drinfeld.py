"""Drinfeld doubles of small Hopf algebras over Q, for the Hopf-backend data.

A Hopf algebra is given by structure constants on a basis e_0..e_{n-1}
(e_0 need not be the unit). The double D(H) = H*cop (x) H has the basis
f^i (x) e_j, index i * n + j, with

    (phi (x) a)(psi (x) b) = phi psi(S^-1(a_3) ? a_1) (x) a_2 b
    Delta(phi (x) a) = (phi_2 (x) a_1) (x) (phi_1 (x) a_2)
    R = sum_i (eps (x) e_i) (x) (f^i (x) 1)
"""
import itertools
from fractions import Fraction

F0, F1 = Fraction(0), Fraction(1)


def solve(rows, rhs):
    """Solve rows * x = rhs exactly; returns one solution or None."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncol = len(rows[0]) if rows else 0
    piv, r = [], 0
    for c in range(ncol):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in m):
        return None
    x = [F0] * ncol
    for i, c in enumerate(piv):
        x[c] = m[i][-1]
    return x


def nullspace(rows, ncol):
    m = [list(r) for r in rows]
    piv, r = [], 0
    for c in range(ncol):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    out = []
    for free in (c for c in range(ncol) if c not in piv):
        v = [F0] * ncol
        v[free] = F1
        for i, c in enumerate(piv):
            v[c] = -m[i][free]
        out.append(v)
    return out


class Hopf:
    """Structure constants: mult[(i,j)] = {k: c}, comult[i] = {(j,k): c},
    unit and counit vectors, antipode[i] = vector."""

    def __init__(self, n, mult, unit, comult, counit, antipode):
        self.n, self.mult, self.unit_v = n, mult, unit
        self.comult, self.counit, self.S = comult, counit, antipode

    def vec(self, d):
        v = [F0] * self.n
        for k, c in d.items():
            v[k] += c
        return v

    def mul(self, x, y):
        out = [F0] * self.n
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                for k, c in self.mult.get((i, j), {}).items():
                    out[k] += a * b * c
        return out

    def basis(self, i):
        v = [F0] * self.n
        v[i] = F1
        return v

    def antipode(self, x):
        out = [F0] * self.n
        for i, a in enumerate(x):
            if a:
                out = [o + a * s for o, s in zip(out, self.S[i])]
        return out

    def antipode_inv_matrix(self):
        # columns S(e_i); solve S * X = I column by column
        rows = [[self.S[j][i] for j in range(self.n)] for i in range(self.n)]
        cols = [solve(rows, self.basis(k)) for k in range(self.n)]
        return [[cols[k][i] for i in range(self.n)] for k in range(self.n)]

    def comul3(self, i):
        """Delta^2(e_i) as {(a,b,c): coeff}."""
        out = {}
        for (j, k), c in self.comult[i].items():
            for (a, b), c2 in self.comult[j].items():
                out[(a, b, k)] = out.get((a, b, k), F0) + c * c2
        return {k: v for k, v in out.items() if v}


def double(H):
    n = H.n
    N = n * n
    Sinv = H.antipode_inv_matrix()  # Sinv[k] = S^-1(e_k)

    def idx(i, j):
        return i * n + j

    # dual product: (f^i f^j)(e_k) = sum over Delta(e_k) of f^i(a) f^j(b)
    def dual_mul(phi, psi):
        out = [F0] * n
        for k in range(n):
            s = F0
            for (a, b), c in H.comult[k].items():
                s += c * phi[a] * psi[b]
            out[k] = s
        return out

    def dual_comul(i):
        """Delta(f^i) = sum f^a (x) f^b with f^i(e_a e_b) = coefficient."""
        out = {}
        for a in range(n):
            for b in range(n):
                c = H.mult.get((a, b), {}).get(i, F0)
                if c:
                    out[(a, b)] = c
        return out

    mult = {}
    for (i, a), (k, b) in itertools.product(itertools.product(range(n), repeat=2), repeat=2):
        res = [F0] * N
        for (a1, a2, a3), c in H.comul3(a).items():
            # functional h -> f^k(S^-1(a3) h a1)
            fn = [F0] * n
            for h in range(n):
                prod = H.mul(H.mul(Sinv[a3], H.basis(h)), H.basis(a1))
                fn[h] = prod[k]
            if not any(fn):
                continue
            phi = dual_mul(H.basis(i), fn)
            hb = H.mul(H.basis(a2), H.basis(b))
            for p, cp in enumerate(phi):
                if cp == 0:
                    continue
                for q, cq in enumerate(hb):
                    if cq:
                        res[idx(p, q)] += c * cp * cq
        d = {t: v for t, v in enumerate(res) if v}
        if d:
            mult[(idx(i, a), idx(k, b))] = d

    # unit eps (x) 1; eps as a functional is the counit vector
    unit = [F0] * N
    for p, cp in enumerate(H.counit):
        for q, cq in enumerate(H.unit_v):
            unit[idx(p, q)] += cp * cq

    comult = {}
    for i in range(n):
        dphi = dual_comul(i)
        for a in range(n):
            out = {}
            for (p1, p2), c in dphi.items():
                for (a1, a2), c2 in H.comult[a].items():
                    key = (idx(p2, a1), idx(p1, a2))
                    out[key] = out.get(key, F0) + c * c2
            comult[idx(i, a)] = {k: v for k, v in out.items() if v}

    counit = [F0] * N
    for i in range(n):
        for a in range(n):
            counit[idx(i, a)] = H.unit_v[i] * H.counit[a]

    D = Hopf(N, mult, unit, comult, counit, None)

    # antipode: S(phi (x) a) = (eps (x) S(a)) (phi o S^-1 (x) 1)
    def emb_H(x):
        v = [F0] * N
        for p, cp in enumerate(H.counit):
            for q, cq in enumerate(x):
                v[idx(p, q)] += cp * cq
        return v

    def emb_dual(phi):
        v = [F0] * N
        for p, cp in enumerate(phi):
            for q, cq in enumerate(H.unit_v):
                v[idx(p, q)] += cp * cq
        return v

    S = []
    for i in range(n):
        phi_si = [Sinv[k][i] for k in range(n)]  # (f^i o S^-1)(e_k)
        for a in range(n):
            S.append(D.mul(emb_H(H.S[a]), emb_dual(phi_si)))
    D.S = S

    R = {}
    for i in range(n):
        for p, cp in enumerate(H.counit):
            for q, cq in enumerate(H.unit_v):
                c = cp * cq
                if c:
                    R[(idx(p, i), idx(i, q))] = R.get((idx(p, i), idx(i, q)), F0) + c
    return D, R, emb_H, emb_dual


def tensor_mul(D, x, y):
    """Product in D (x) D of dicts {(j,k): c}."""
    out = {}
    for (a, b), c in x.items():
        for (p, q), d in y.items():
            l = D.mul(D.basis(a), D.basis(p))
            r = D.mul(D.basis(b), D.basis(q))
            for s, cs in enumerate(l):
                if cs == 0:
                    continue
                for t, ct in enumerate(r):
                    if ct:
                        out[(s, t)] = out.get((s, t), F0) + c * d * cs * ct
    return {k: v for k, v in out.items() if v}


def comul_vec(D, x):
    out = {}
    for i, a in enumerate(x):
        if a:
            for k, c in D.comult[i].items():
                out[k] = out.get(k, F0) + a * c
    return {k: v for k, v in out.items() if v}


def inverse(D, x):
    rows = [[D.mul(x, D.basis(j))[i] for j in range(D.n)] for i in range(D.n)]
    return solve(rows, D.unit_v)


def drinfeld_u(D, R):
    u = [F0] * D.n
    for (j, k), c in R.items():
        t = D.mul(D.antipode(D.basis(k)), D.basis(j))
        u = [a + c * b for a, b in zip(u, t)]
    return u


def is_ribbon(D, R, u, v):
    n = D.n
    if any(D.mul(v, D.basis(i)) != D.mul(D.basis(i), v) for i in range(n)):
        return False
    if D.antipode(v) != v or sum(a * b for a, b in zip(D.counit, v)) != 1:
        return False
    if D.mul(v, v) != D.mul(u, D.antipode(u)):
        return False
    R21 = {(k, j): c for (j, k), c in R.items()}
    lhs = tensor_mul(D, tensor_mul(D, R21, R), comul_vec(D, v))
    vv = {(i, j): a * b for i, a in enumerate(v) for j, b in enumerate(v) if a and b}
    return lhs == vv


def ribbon_element(D, R, grouplikes):
    """First v = u^{-1} g or u g over the given grouplikes that satisfies the ribbon axioms."""
    u = drinfeld_u(D, R)
    uinv = inverse(D, u)
    for g in grouplikes:
        for base in (uinv, u):
            v = D.mul(base, g)
            if is_ribbon(D, R, u, v):
                return v
    return None


def characters(H, D, grouplikes, hchars):
    """Algebra maps D -> Q of the form phi (x) a -> phi(h) beta(a), h grouplike, beta a character of H."""
    out = []
    for h in grouplikes:
        for beta in hchars:
            chi = [h[i] * beta[a] for i in range(H.n) for a in range(H.n)]
            ev = lambda x: sum(c * y for c, y in zip(chi, x))
            if all(ev(D.mul(D.basis(i), D.basis(j))) == chi[i] * chi[j]
                   for i in range(D.n) for j in range(D.n)):
                out.append(chi)
    return out


def submodule(D, vecs):
    """Smallest left ideal containing vecs, as an echelon basis."""
    basis = []

    def reduce(v):
        v = list(v)
        for b, p in basis:
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, b)]
        return v

    queue = list(vecs)
    while queue:
        w = reduce(queue.pop())
        p = next((i for i, x in enumerate(w) if x), None)
        if p is None:
            continue
        inv = 1 / w[p]
        w = [x * inv for x in w]
        basis = [(bb if bb[p] == 0 else [x - bb[p] * y for x, y in zip(bb, w)], pp) for bb, pp in basis]
        basis.append((w, p))
        for i in range(D.n):
            queue.append(D.mul(D.basis(i), w))
    return basis


def module_action(D, basis):
    """Action matrices of the left ideal spanned by an echelon basis."""
    k = len(basis)
    acts = []
    for i in range(D.n):
        mat = [[F0] * k for _ in range(k)]
        for c, (b, _) in enumerate(basis):
            img = D.mul(D.basis(i), b)
            # coordinates: read off pivot positions
            for r, (bb, p) in enumerate(basis):
                mat[r][c] = img[p]
        acts.append(mat)
    return acts
