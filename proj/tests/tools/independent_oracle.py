#!/usr/bin/env python3
"""Recompute the expected outputs of the shipped instances from scratch.

Deliberately naive: cochains are evaluated on basis tuples straight from the
Chevalley-Eilenberg formula, scalars are pairs of Fractions, weights are read
off diagonal ad matrices (true for every shipped instance). Writes
<instance>.expected.json next to each instance, or with --check compares
against the files already there and exits 1 on any difference.

usage: independent_oracle.py [--check] INSTANCE_DIR
"""

import itertools
import json
import re
import sys
from fractions import Fraction
from math import comb
from pathlib import Path


class Q:
    """a + b i with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, o):
        return Q(self.a + o.a, self.b + o.b)

    def __sub__(self, o):
        return Q(self.a - o.a, self.b - o.b)

    def __mul__(self, o):
        return Q(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a)

    def __neg__(self):
        return Q(-self.a, -self.b)

    def inv(self):
        n = self.a * self.a + self.b * self.b
        return Q(self.a / n, -self.b / n)

    def zero(self):
        return self.a == 0 and self.b == 0

    def __eq__(self, o):
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))


def parse_scalar(text):
    text = text.replace(" ", "")
    total = Q()
    for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
        s = -1 if sign == "-" else 1
        parts = body.split("*")
        coeff = Q(1)
        for part in parts:
            coeff = coeff * (Q(0, 1) if part == "i" else Q(Fraction(part)))
        total = total + Q(s) * coeff
    return total


def parse_period(text):
    """Map base symbol -> (real coefficient, imaginary coefficient)."""
    text = text.replace(" ", "")
    out = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
        s = -1 if sign == "-" else 1
        coeff = Fraction(s)
        imag = False
        base = "1"
        for part in body.split("*"):
            if part == "i":
                imag = not imag
            elif re.fullmatch(r"\d+(/\d+)?", part):
                coeff *= Fraction(part)
            else:
                base = part
        re_c, im_c = out.get(base, (Fraction(0), Fraction(0)))
        out[base] = (re_c, im_c + coeff) if imag else (re_c + coeff, im_c)
    return out


def scale_period(mu, value):
    """mu * value for mu in Q(i): returns base -> (re, im)."""
    out = {}
    for base, (x, y) in value.items():
        prod = mu * Q(x, y)
        out[base] = (prod.a, prod.b)
    return out


def add_period(u, v):
    out = dict(u)
    for base, (x, y) in v.items():
        a, b = out.get(base, (Fraction(0), Fraction(0)))
        out[base] = (a + x, b + y)
    return out


def in_2pi_i_Z(v):
    for base, (x, y) in v.items():
        if base == "pi":
            if x != 0 or y.denominator != 1 or y.numerator % 2:
                return False
        elif x != 0 or y != 0:
            return False
    return True


def im_in_pi_Z(v):
    # every declared symbol in the shipped instances is real
    for base, (x, y) in v.items():
        if base == "pi":
            if y.denominator != 1:
                return False
        elif y != 0:
            return False
    return True


def rank(rows, ncols):
    m = [list(r) for r in rows]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not m[i][c].zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def perm_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


class Instance:
    def __init__(self, doc):
        alg = doc["algebra"]
        self.kind = doc["kind"]
        self.names = alg["basis"]
        self.n = len(self.names)
        idx = {name: i for i, name in enumerate(self.names)}
        self.c = {}
        for x, y, z, *coeff in alg["brackets"]:
            v = parse_scalar(coeff[0]) if coeff else Q(1)
            i, j, k = idx[x], idx[y], idx[z]
            self.c[(i, j, k)] = v
            self.c[(j, i, k)] = -v
        self.complement = [idx[x] for x in alg.get("complement", [])]
        rep = doc["representation"]
        if rep.get("adjoint"):
            self.m = self.n
            self.R = [[[self.c.get((i, l, k), Q()) for l in range(self.n)] for k in range(self.n)] for i in range(self.n)]
        else:
            self.m = 1
            self.R = [[[Q()]] for _ in range(self.n)]
        # weights: diagonal of ad / R along the complement
        self.lam = [tuple(self.c.get((j, i, i), Q()) for j in self.complement) for i in range(self.n)]
        self.lam_rep = [tuple(self.R[j][k][k] for j in self.complement) for k in range(self.m)]
        lat = doc.get("lattice", {})
        self.gens = [[parse_period(t) for t in g] for g in lat.get("generators", [])]

    def tag(self, I, k):
        r = len(self.complement)
        out = [Q() for _ in range(r)]
        for i in I:
            out = [a + b for a, b in zip(out, self.lam[i])]
        return tuple(a - b for a, b in zip(out, self.lam_rep[k]))

    def evaluate(self, mu, delta):
        v = {}
        for coeff, d in zip(mu, delta):
            v = add_period(v, scale_period(coeff, d))
        return v

    def trivial(self, mu):
        return all(in_2pi_i_Z(self.evaluate(mu, d)) for d in self.gens)

    def ratio_trivial(self, mu):
        return all(im_in_pi_Z(self.evaluate(mu, d)) for d in self.gens)

    def mu_at(self, mu, i):
        return mu[self.complement.index(i)] if i in self.complement else Q()

    def omega(self, I, k, args):
        """x_I (x) v_k evaluated on basis vectors args: a vector in V."""
        out = [Q() for _ in range(self.m)]
        if len(set(args)) == len(args) and sorted(args) == list(I):
            out[k] = Q(perm_sign(args))
        return out

    def d_column(self, I, k, mu, targets):
        """Coordinates of d(x_I (x) v_k) in the module of weight mu."""
        col = []
        for J in targets:
            vals = [Q() for _ in range(self.m)]
            for a, ja in enumerate(J):
                rest = J[:a] + J[a + 1:]
                w = self.omega(I, k, rest)
                s = Q(1 if a % 2 == 0 else -1)
                for r in range(self.m):
                    acc = self.mu_at(mu, ja) * w[r]
                    for l in range(self.m):
                        acc = acc + self.R[ja][r][l] * w[l]
                    vals[r] = vals[r] + s * acc
            for a, b in itertools.combinations(range(len(J)), 2):
                rest = tuple(x for t, x in enumerate(J) if t not in (a, b))
                s = Q(1 if (a + b) % 2 == 0 else -1)
                for l in range(self.n):
                    cf = self.c.get((J[a], J[b], l))
                    if cf is None or cf.zero():
                        continue
                    w = self.omega(I, k, (l,) + rest)
                    for r in range(self.m):
                        vals[r] = vals[r] + s * cf * w[r]
            col.extend(vals)
        return col

    def selected_betti(self, keep_tag):
        """Betti numbers of the span of (I, k) with keep_tag(tag), differential taken per tag."""
        basis = []
        for p in range(self.n + 1):
            basis.append([(I, k) for I in itertools.combinations(range(self.n), p) for k in range(self.m)
                          if keep_tag(self.tag(I, k))])
        dims = [len(b) for b in basis]
        ranks = []
        for p in range(self.n):
            targets_full = list(itertools.combinations(range(self.n), p + 1))
            keep_rows = [(J, k) for J in targets_full for k in range(self.m)]
            row_index = {lab: t for t, lab in enumerate(keep_rows)}
            cols = []
            for I, k in basis[p]:
                full = self.d_column(I, k, self.tag(I, k), targets_full)
                cols.append([full[row_index[lab]] for lab in basis[p + 1]])
            rows = [[cols[c][r] for c in range(len(cols))] for r in range(dims[p + 1])]
            ranks.append(rank(rows, len(cols)) if cols and rows else 0)
        betti = []
        for p in range(self.n + 1):
            out_rank = ranks[p] if p < self.n else 0
            in_rank = ranks[p - 1] if p > 0 else 0
            betti.append(dims[p] - out_rank - in_rank)
        return dims, betti


def expected_for(doc):
    inst = Instance(doc)
    out = {"kind": inst.kind}
    if inst.kind == "derham":
        dims, betti = inst.selected_betti(inst.trivial)
        out["derham"] = {"selected_dims": dims, "betti": betti}
        # trivial coefficients on the same algebra: first Betti number
        triv = dict(doc)
        triv["representation"] = {"trivial": True}
        t = Instance(triv)
        _, tb = t.selected_betti(t.trivial)
        out["trivial_coefficients_betti"] = tb
    else:
        dims, betti = inst.selected_betti(inst.ratio_trivial)
        hodge = [[comb(inst.n, p) * b for b in betti] for p in range(inst.n + 1)]
        out["dolbeault"] = {"selected_dims": dims, "betti": betti, "hodge": hodge}
    tags = {inst.tag(I, k) for p in range(inst.n + 1) for I in itertools.combinations(range(inst.n), p)
            for k in range(inst.m)}
    out["distinct_tags"] = len(tags)
    return out


def main():
    args = sys.argv[1:]
    check = "--check" in args
    root = Path([a for a in args if a != "--check"][0])
    bad = 0
    for path in sorted(root.glob("*.json")):
        if path.name.endswith(".expected.json"):
            continue
        doc = json.loads(path.read_text())
        target = path.with_name(path.stem + ".expected.json")
        result = expected_for(doc)
        if check:
            same = target.exists() and json.loads(target.read_text()) == result
            print("ok " if same else "DIFF", target.name)
            bad += not same
        else:
            target.write_text(json.dumps(result, indent=2, sort_keys=True) + "\n")
            print("wrote", target)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
