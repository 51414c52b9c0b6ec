#!/usr/bin/env python3
"""Regenerates frozen_gates.hpp with sympy.

Each gate is obtained by literal contraction: build phi (x) Psi_i on 27
components with symbolic amplitudes, project A1A2 onto Psi_k and read the
coefficients of c0, c1, c2 off Bob's three amplitudes. Entries are written
in the basis {1, sqrt2, sqrt3, sqrt6}.

usage: generate_frozen.py > frozen_gates.hpp
"""
import sympy as sp

s2, s3, s6 = sp.sqrt(2), sp.sqrt(3), sp.sqrt(6)
c = sp.symbols("c0 c1 c2")


def pair(scale, terms):
    v = [sp.Integer(0)] * 9
    for a, b, w in terms:
        v[3 * a + b] = w * scale
    return v


PSI = [
    pair(1 / s3, [(0, 0, 1), (1, 1, 1), (2, 2, 1)]),
    pair(1 / s2, [(1, 0, 1), (0, 1, 1)]),
    pair(1 / s2, [(1, 0, 1), (0, 1, -1)]),
    pair(1 / s2, [(1, 1, -1), (2, 2, 1)]),
    pair(1 / s2, [(2, 0, 1), (0, 2, 1)]),
    pair(1 / s2, [(2, 0, 1), (0, 2, -1)]),
    pair(1 / s2, [(2, 1, 1), (1, 2, 1)]),
    pair(1 / s2, [(2, 1, 1), (1, 2, -1)]),
    pair(1 / s6, [(0, 0, -2), (1, 1, 1), (2, 2, 1)]),
]


def gate(i, k):
    xi = [c[a1] * PSI[i][3 * a2 + b] for a1 in range(3) for a2 in range(3) for b in range(3)]
    bob = [sp.expand(sum(PSI[k][3 * a1 + a2] * xi[9 * a1 + 3 * a2 + b] for a1 in range(3) for a2 in range(3)))
           for b in range(3)]
    return sp.Matrix(3, 3, lambda r, col: sp.nsimplify(sp.expand(bob[r]).coeff(c[col])))


def components(x):
    x = sp.expand(sp.radsimp(x))
    q6 = x.coeff(s6)
    x = sp.expand(x - q6 * s6)
    q3 = x.coeff(s3)
    x = sp.expand(x - q3 * s3)
    q2 = x.coeff(s2)
    q1 = sp.expand(x - q2 * s2)
    out = [sp.Rational(q) for q in (q1, q2, q3, q6)]
    assert sp.simplify(out[0] + out[1] * s2 + out[2] * s3 + out[3] * s6 - (q1 + q2 * s2 + q3 * s3 + q6 * s6)) == 0
    return out


def literal(q):
    return f'"{q.p}/{q.q}"'


def main():
    print("#pragma once")
    print("// Generated by generate_frozen.py. Do not edit.")
    print()
    print("namespace frozen {")
    print()
    print("struct Entry { const char* q1; const char* q2; const char* q3; const char* q6; };")
    print("struct Gate { int channel; int outcome; Entry m[3][3]; int rank; Entry frobenius_sq; const char* gate_class; };")
    print()
    print("inline constexpr Gate kGates[81] = {")
    for i in range(9):
        for k in range(9):
            g = gate(i, k)
            gram = g.T * g
            tr = sp.nsimplify(sp.expand(gram.trace()))
            rank = g.rank(simplify=True)
            scaled = sp.simplify(gram - tr / 3 * sp.eye(3))
            if rank < 3:
                cls = "singular"
            elif scaled == sp.zeros(3, 3):
                cls = "proportional_to_unitary"
            else:
                cls = "invertible_not_prop_unitary"
            rows = []
            for r in range(3):
                cells = ", ".join("{" + ", ".join(literal(q) for q in components(g[r, col])) + "}" for col in range(3))
                rows.append("{" + cells + "}")
            fro = "{" + ", ".join(literal(q) for q in components(tr)) + "}"
            print(f"    {{{i}, {k}, {{{', '.join(rows)}}}, {rank}, {fro}, \"{cls}\"}},")
    print("};")
    print()
    print("}  // namespace frozen")


if __name__ == "__main__":
    main()
