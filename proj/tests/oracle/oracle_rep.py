# U6 as the f-orbit of u3^2, the apolar complement of the net q, and the dual action.
import json
import itertools
import sympy as sp
from common import U, f_w3, e_w3, read_section, parse, FIX

orbit = [U[0] ** 2]
for _ in range(6):
    orbit.append(f_w3(orbit[-1]))
assert f_w3(orbit[-1]) == 0

printed = [parse(v) for k, v in read_section(FIX + '/rep.txt', 'u6') if k == 'gen']
scal = [sp.nsimplify(sp.cancel(p / o)) for p, o in zip(printed, orbit)]
assert all(s.is_number for s in scal)

# apolarity: z-monomial z^a pairs with u^b as delta / multinomial(2; a)
Zs = sp.symbols('z3 z1 z_m1 z_m3')
quads = [U[i] * U[j] for i in range(4) for j in range(i, 4)]
q = [parse(v) for k, v in read_section(FIX + '/rep.txt', 'net_q') if k == 'gen']


def pair(zq, uq):
    zp = sp.Poly(zq, *Zs)
    up = sp.Poly(uq, *U)
    tot = 0
    for mon, c in zp.terms():
        d = up.coeff_monomial(tuple(mon))
        mult = sp.factorial(2) / sp.prod([sp.factorial(x) for x in mon])
        tot += c * d / mult
    return tot


cs = sp.symbols('c0:10')
gen = sum(c * m for c, m in zip(cs, quads))
sol = sp.solve([pair(g, gen) for g in q], cs, dict=True)[0]
perp = sp.expand(gen.subs(sol))
free = [c for c in cs if perp.has(c)]
perp_basis = [sp.expand(perp.subs({d: (1 if d == c else 0) for d in free})) for c in free]


def span_rank(polys):
    M = sp.Matrix([[sp.Poly(p, *U).coeff_monomial(m) for m in quads] for p in polys])
    return M.rank()


same = span_rank(perp_basis) == 7 and span_rank(perp_basis + printed) == 7

# e and f on Sym2 W3 commute to h
brack = all(sp.expand(e_w3(f_w3(m)) - f_w3(e_w3(m)) - sum(sp.Poly(m, *U).monoms()[0][i] * w for i, w in enumerate([3, 1, -1, -3])) * m) == 0 for m in quads)

print(json.dumps({
    'orbit': [str(o) for o in orbit],
    'printed_over_orbit': [str(s) for s in scal],
    'q_perp_dim': len(perp_basis),
    'q_perp_equals_u6': bool(same),
    'bracket_ok': bool(brack),
}, indent=1))
