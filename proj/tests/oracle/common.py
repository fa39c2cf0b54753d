# shared helpers for the sympy oracles; nothing here imports the C++ code
import sympy as sp

U = sp.symbols('u3 u1 u_m1 u_m3')
Y = sp.symbols('y2 y0 y_m2')
Z = sp.symbols('z2 z0 z_m2')
WT6 = [6, 4, 2, 0, -2, -4, -6]


def f_w3(p):
    # f.u3 = 3 u1, f.u1 = 2 u_m1, f.u_m1 = u_m3, extended as a derivation
    img = {U[0]: 3 * U[1], U[1]: 2 * U[2], U[2]: U[3], U[3]: 0}
    return sp.expand(sum(sp.diff(p, v) * img[v] for v in U))


def e_w3(p):
    img = {U[0]: 0, U[1]: U[0], U[2]: 2 * U[1], U[3]: 3 * U[2]}
    return sp.expand(sum(sp.diff(p, v) * img[v] for v in U))


def parse(s):
    return sp.sympify(s.replace('^', '**'))


def read_section(path, name):
    out, cur = [], None
    for line in open(path):
        line = line.strip()
        if line.startswith('['):
            cur = line[1:-1]
            continue
        if cur == name and '=' in line and not line.startswith('#'):
            k, v = line.split('=', 1)
            out.append((k.strip(), v.strip()))
    return out


def eta_matrix():
    # the printed net as three 7x7 matrices
    rows = [v for k, v in read_section(FIX + '/net.txt', 'eta') if k == 'row']
    M = sp.Matrix([[parse(x) for x in r.split(',')] for r in rows])
    return M


import os
FIX = os.path.join(os.path.dirname(__file__), '..', '..', 'fixtures')
