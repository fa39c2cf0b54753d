# Isotropy equations of the net on the charts V12 and V10, and the universal cubic over V12.
import json
import sympy as sp
from common import U, Y, read_section, parse, eta_matrix, FIX

eta = eta_matrix()
etas = [eta.subs({Y[0]: 1 if k == 0 else 0, Y[1]: 1 if k == 1 else 0, Y[2]: 1 if k == 2 else 0}) for k in range(3)]


def chart(pinned, name):
    free_cols = [c for c in range(7) if c not in pinned]
    xs = sp.symbols(' '.join('%s%d' % (name, i) for i in range(1, 13)))
    P = sp.zeros(3, 7)
    for r in range(3):
        P[r, pinned[r]] = 1
        for k, c in enumerate(free_cols):
            P[r, c] = xs[4 * r + k]
    eqs = []
    for M in etas:
        Q = (P * M * P.T).expand()
        eqs += [Q[i, j] for i in range(3) for j in range(i + 1, 3)]
    return P, xs, eqs


P12, a, eq12 = chart([0, 1, 2], 'a')
printed = [parse(v) for k, v in read_section(FIX + '/variety.txt', 'v12_equations') if k == 'gen']
G = sp.groebner(eq12, *a, order='grevlex', domain='QQ')
Gp = sp.groebner(printed, *a, order='grevlex', domain='QQ')
v12_equal = all(G.contains(p) for p in printed) and all(Gp.contains(e) for e in eq12)

# solve for everything but a9, a10, a11
keep = [a[8], a[9], a[10]]
elim = [x for x in a if x not in keep]
L = sp.groebner(eq12, *elim, *keep, order='lex', domain='QQ')
sub = {}
for g in L.exprs:
    lead = sp.Poly(g, *elim, *keep).monoms()[0]
    for i, x in enumerate(elim):
        if lead[i] == 1 and sum(lead) == 1:
            sub[x] = sp.solve(g, x)[0]
affine = len(sub) == 9 and all(set(v.free_symbols) <= set(keep) for v in sub.values())

w = [parse(v) for k, v in read_section(FIX + '/rep.txt', 'u6') if k == 'gen']
Pv = P12.subs(sub)
rows = [sp.expand(sum(Pv[r, c] * w[c] for c in range(7))) for r in range(3)]
um = [v for k, v in read_section(FIX + '/variety.txt', 'v12_universal') if k == 'row']
M = sp.Matrix([[parse(x) for x in r.split(',')] for r in um]).subs(sub)
minors = [sp.expand(M[i, 0] * M[j, 1] - M[i, 1] * M[j, 0]) for i in range(3) for j in range(i + 1, 3)]
quads = [U[i] * U[j] for i in range(4) for j in range(i, 4)]


def cmat(ps):
    return sp.Matrix([[sp.Poly(p, *U).coeff_monomial(m) for m in quads] for p in ps])


rk_rows = cmat(rows).rank(simplify=True)
rk_all = cmat(rows + minors).rank(simplify=True)

# V10: pinned columns 1, 2, 4
P10, b, eq10 = chart([0, 1, 3], 'b')
keep10 = [b[7], b[8], b[9], b[11]]
elim10 = [x for x in b if x not in keep10]
L10 = sp.groebner(eq10, *elim10, *keep10, order='lex', domain='QQ')
resid = [sp.factor(g) for g in L10.exprs if not (set(g.free_symbols) - set(keep10))]

print(json.dumps({
    'v12_equations_equal_printed': bool(v12_equal),
    'v12_solved': {str(k): str(v) for k, v in sorted(sub.items(), key=lambda t: str(t[0]))},
    'v12_affine_in_a9_a10_a11': bool(affine),
    'cubic_rows_span_rank': int(rk_rows),
    'rows_plus_minors_span_rank': int(rk_all),
    'v10_residual': [str(r) for r in resid],
}, indent=1))
