#!/usr/bin/env python3
"""Regenerates the preset structure-constant tables from matrix realizations.

The C++ library stores the tables (include/zform/presets.hpp); this script is
only used to produce them. Output is the line-oriented algebra file format.

    python3 tools/gen_presets.py sl21 > data/algebras/sl21.alg
"""
import sys

import sympy as sp


def e(n, i, j):
    m = sp.zeros(n, n)
    m[i, j] = 1
    return m


def supercomm(x, px, y, py):
    return x * y - (-1) ** (px * py) * y * x


class Algebra:
    def __init__(self, name, size, cartan, roots):
        # cartan: list of matrices h_1..h_l
        # roots: list of (label, parity, sign, neg_label, matrix)
        self.name = name
        self.size = size
        self.cartan = cartan
        self.roots = roots
        self.symbols = [("h[%d]" % (i + 1), 0, h) for i, h in enumerate(cartan)]
        self.symbols += [("x[%s]" % lab, par, m) for lab, par, _, _, m in roots]
        flat = [sp.Matrix(m).reshape(size * size, 1) for _, _, m in self.symbols]
        self.basis = sp.Matrix.hstack(*flat)

    def decompose(self, m):
        v = sp.Matrix(m).reshape(self.size * self.size, 1)
        sol = (self.basis.T * self.basis).LUsolve(self.basis.T * v)
        sol = sol.applyfunc(sp.nsimplify)
        if sp.simplify(self.basis * sol - v) != sp.zeros(v.rows, 1):
            raise ValueError("bracket leaves the span in %s" % self.name)
        return [sp.nsimplify(sp.simplify(c)) for c in sol]

    def emit(self):
        l = len(self.cartan)
        out = ["# generated by tools/gen_presets.py", "name %s" % self.name, "cartan %d" % l]
        evals = {}
        for lab, par, sign, neg, m in self.roots:
            vec = []
            for h in self.cartan:
                comm = supercomm(h, 0, m, par)
                coeffs = self.decompose(comm)
                vec.append(coeffs[l + [r[0] for r in self.roots].index(lab)])
            evals[lab] = vec
            out.append("root %s %s %s %s : %s" % (lab, "odd" if par else "even",
                                                 sign, neg, " ".join(str(v) for v in vec)))
        by_label = {r[0]: r for r in self.roots}
        for lab, par, _, neg, m in self.roots:
            nm = by_label[neg][4]
            coeffs = self.decompose(supercomm(m, par, nm, par))
            out.append("coroot %s : %s" % (lab, " ".join(str(c) for c in coeffs[:l])))
        for (sa, pa, ma) in self.symbols:
            for (sb, pb, mb) in self.symbols:
                coeffs = self.decompose(supercomm(ma, pa, mb, pb))
                terms = [(c, self.symbols[k][0]) for k, c in enumerate(coeffs) if c != 0]
                for c, _ in terms:
                    if not c.is_integer:
                        raise ValueError("non-integral constant %s in [%s,%s]" % (c, sa, sb))
                if terms:
                    out.append("bracket %s %s : %s" % (sa, sb, " ".join("%s %s" % t for t in terms)))
        return "\n".join(out) + "\n"


def sl2():
    n = 2
    return Algebra("sl2", n, [e(n, 0, 0) - e(n, 1, 1)],
                   [("a", 0, "+", "-a", e(n, 0, 1)), ("-a", 0, "-", "a", e(n, 1, 0))])


def sl3():
    n = 3
    h = [e(n, 0, 0) - e(n, 1, 1), e(n, 1, 1) - e(n, 2, 2)]
    roots = [("a1", 0, "+", "-a1", e(n, 0, 1)), ("a2", 0, "+", "-a2", e(n, 1, 2)),
             ("a1+a2", 0, "+", "-a1-a2", e(n, 0, 2)),
             ("-a1", 0, "-", "a1", e(n, 1, 0)), ("-a2", 0, "-", "a2", e(n, 2, 1)),
             ("-a1-a2", 0, "-", "a1+a2", e(n, 2, 0))]
    return Algebra("sl3", n, h, roots)


def sp4():
    # symplectic form J = [[0, I], [-I, 0]]; a1 = e1 - e2 short, a2 = 2 e2 long
    n = 4
    h = [e(n, 0, 0) - e(n, 1, 1) - e(n, 2, 2) + e(n, 3, 3), e(n, 1, 1) - e(n, 3, 3)]
    xa1 = e(n, 0, 1) - e(n, 3, 2)
    xa2 = e(n, 1, 3)
    xa12 = e(n, 0, 3) + e(n, 1, 2)
    x2a12 = e(n, 0, 2)
    roots = [("a1", 0, "+", "-a1", xa1), ("a2", 0, "+", "-a2", xa2),
             ("a1+a2", 0, "+", "-a1-a2", xa12), ("2a1+a2", 0, "+", "-2a1-a2", x2a12),
             ("-a1", 0, "-", "a1", xa1.T), ("-a2", 0, "-", "a2", xa2.T),
             ("-a1-a2", 0, "-", "a1+a2", xa12.T), ("-2a1-a2", 0, "-", "2a1+a2", x2a12.T)]
    J = sp.Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    for m in h + [r[4] for r in roots]:
        assert m.T * J + J * m == sp.zeros(n, n)
    return Algebra("sp4", n, h, roots)


def sl21():
    # parities of rows/cols: 0, 0 | 1
    n = 3
    h = [e(n, 0, 0) - e(n, 1, 1), e(n, 1, 1) + e(n, 2, 2)]
    roots = [("a1", 0, "+", "-a1", e(n, 0, 1)), ("a2", 1, "+", "-a2", e(n, 1, 2)),
             ("a1+a2", 1, "+", "-a1-a2", e(n, 0, 2)),
             ("-a1", 0, "-", "a1", e(n, 1, 0)), ("-a2", 1, "-", "a2", e(n, 2, 1)),
             ("-a1-a2", 1, "-", "a1+a2", e(n, 2, 0))]
    return Algebra("sl21", n, h, roots)


def osp12():
    # C^{1|2}: index 0 even, indices 1, 2 odd; h_1 is the coroot of the even root 2g
    n = 3
    r2 = sp.sqrt(2)
    H = e(n, 1, 1) - e(n, 2, 2)
    vp = e(n, 1, 0) + e(n, 0, 2)
    vm = e(n, 0, 1) - e(n, 2, 0)
    roots = [("g", 1, "+", "-g", r2 * vp), ("2g", 0, "+", "-2g", e(n, 1, 2)),
             ("-g", 1, "-", "g", r2 * vm), ("-2g", 0, "-", "2g", e(n, 2, 1))]
    return Algebra("osp12", n, [H], roots)


def g2():
    # 7-dim representation on the weight basis
    #   2a1+a2, a1+a2, a1, 0, -a1, -a1-a2, -2a1-a2   (a1 short, a2 long).
    # The +-1 signs of the Chevalley generators are searched so that the Serre
    # relations hold; root vectors then follow Chevalley's normalization
    # [x_a, x_b] = +-(p+1) x_{a+b}, with x_{-b} scaled so [x_b, x_{-b}] = h_b.
    import itertools
    n = 7
    P, Q, A1, Z, M1, MQ, MP = range(7)

    def gens(s1, s2, s3, s4, t1, t2):
        e1 = s1 * e(n, P, Q) + s2 * e(n, MQ, MP) + s3 * e(n, Z, M1) + 2 * s4 * e(n, A1, Z)
        f1 = s1 * e(n, Q, P) + s2 * e(n, MP, MQ) + s4 * e(n, Z, A1) + 2 * s3 * e(n, M1, Z)
        e2 = t1 * e(n, Q, A1) + t2 * e(n, M1, MQ)
        f2 = t1 * e(n, A1, Q) + t2 * e(n, MQ, M1)
        return e1, f1, e2, f2

    def ad(x, y, k):
        for _ in range(k):
            y = x * y - y * x
        return y

    zero = sp.zeros(n, n)
    for signs in itertools.product([1, -1], repeat=6):
        e1, f1, e2, f2 = gens(*signs)
        if all(m == zero for m in (ad(e1, e2, 4), ad(e2, e1, 2), ad(f1, f2, 4), ad(f2, f1, 2),
                                   e1 * f2 - f2 * e1, e2 * f1 - f1 * e2)):
            break
    else:
        raise ValueError("no sign choice satisfies the Serre relations")

    def br(x, y):
        return x * y - y * x

    h1, h2 = br(e1, f1), br(e2, f2)
    pos = {"a1": e1, "a2": e2}
    pos["a1+a2"] = br(e1, e2)
    pos["2a1+a2"] = br(e1, pos["a1+a2"]) / 2
    pos["3a1+a2"] = br(e1, pos["2a1+a2"]) / 3
    pos["3a1+2a2"] = br(e2, pos["3a1+a2"])
    neg = {"a1": f1, "a2": f2}
    neg["a1+a2"] = br(f1, f2)
    neg["2a1+a2"] = br(f1, neg["a1+a2"])
    neg["3a1+a2"] = br(f1, neg["2a1+a2"])
    neg["3a1+2a2"] = br(f2, neg["3a1+a2"])
    # coroot h_b = c1 h1 + c2 h2 with b(h_b) = 2; read the scale off [x_b, y_b]
    coroot = {"a1": (1, 0), "a2": (0, 1), "a1+a2": (1, 3), "2a1+a2": (2, 3), "3a1+a2": (1, 1),
              "3a1+2a2": (1, 2)}
    for lab, (c1, c2) in coroot.items():
        target = c1 * h1 + c2 * h2
        got = br(pos[lab], neg[lab])
        k = [got[i, i] / target[i, i] for i in range(n) if target[i, i] != 0][0]
        neg[lab] = neg[lab] / k
        assert br(pos[lab], neg[lab]) == target, lab
    order = ["a1", "a2", "a1+a2", "2a1+a2", "3a1+a2", "3a1+2a2"]
    roots = [(lab, 0, "+", "-" + lab.replace("+", "-"), pos[lab]) for lab in order]
    roots += [("-" + lab.replace("+", "-"), 0, "-", lab, neg[lab]) for lab in order]
    return Algebra("g2", n, [h1, h2], roots)


PRESETS = {"sl2": sl2, "sl3": sl3, "sp4": sp4, "sl21": sl21, "osp12": osp12}
# user-supplied tables that are not compiled-in presets
EXTRA = {"g2": g2}

if __name__ == "__main__":
    names = sys.argv[1:] or list(PRESETS)
    for name in names:
        sys.stdout.write({**PRESETS, **EXTRA}[name]().emit())
