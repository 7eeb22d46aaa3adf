# Included by gen_manifest.py: four roots with at most one condition, five roots, six or more roots.


def rank(id, citation, matrix, params, expected, solve=None, positive=None, **kw):
    fields = dict(variables=sorted(set(params) | {s["var"] for s in (solve or [])} | {"x"}),
                  matrix=matrix, parameters=params, expected_rank=expected, trials=20, seed=1)
    if solve:
        fields["solve"] = solve
    if positive:
        fields["positive"] = positive
    fields.update(kw)
    return add(id, "RankClaim", citation, **fields)


def coeff_row(p, powers, cols):
    return [a(p, k) if k is not None else "0" for k in powers][:cols]


# --- Four distinct roots, at most one of a1, a5, a6 vanishing ------------------

CITE_4 = "Four distinct roots with at most one vanishing condition: Jacobian rank"
F4 = {"P": "(x+u)^6*(x+v)^2*(x-t)^2*(x-h)", "Q": "(x+u)^5*(x+v)*(x-t)"}
R4 = {"u": ["1/10", "5"], "v": ["1/10", "5"], "t": ["1/10", "5"], "h": ["1/10", "5"]}
for j in (6, 5, 1):
    rank(f"four-roots-J-rank-a{j}", f"{CITE_4}: d(a10,a9,a{j})/d(u,v,t,h) has rank 3",
         [[f"diff({a('P', i)},{z})" for z in ("u", "v", "t", "h")] for i in (10, 9, j)], R4, 3, definitions=F4)
# Q = P_{u,v,t,h} = x^7 + A x^6 + ... + G; rows are the x^10, x^9, x^j coefficients of x^3 Q, x^2 Q, x Q, Q.
JSTAR = {6: ["D", "C", "B", "A"], 5: ["E", "D", "C", "B"], 1: ["0", "0", "G", "F"]}
QC = {"A": a("Q", 6), "B": a("Q", 5), "C": a("Q", 4), "D": a("Q", 3), "E": a("Q", 2), "F": a("Q", 1),
      "G": a("Q", 0)}
for j, row in JSTAR.items():
    rank(f"four-roots-Jstar-rank-a{j}", f"{CITE_4}: J* with last row ({' '.join(row)}) has rank 3",
         [["1", "0", "0", "0"], ["A", "1", "0", "0"], row], R4, 3, definitions={**F4, **QC})
for s, j in [(3, 6), (2, 6), (0, 1)]:
    ident(f"four-roots-Jstar-entry-x{s}Q-a{j}", f"{CITE_4}: x^{s} Q supplies the x^{j} entry of J*",
          a(f"x^{s}*Q", j), a("Q", j - s) if j - s >= 0 else "0", ["x", "u", "v", "t"], definitions=F4)

# --- Five distinct roots ---------------------------------------------------------

CITE_5 = "Five distinct real roots"
FIVE = [  # (case, multiplicities, b, c, a1 at general t, t for b=0, t for c=0, h6, h5)
    (1, (6, 1, 1), "10-5*t", "10-10*t", None, "2", "1",
     "v*w/(5*v*w+v+w)", "v*w/(4*v*w+v+w)"),
    (2, (5, 2, 1), "6+4*v-4*t-t*v", "-2*(-2-3*v+3*t+2*t*v)",
     "-t*v*(-v*w*t-2*v*w*h+t*h*v+5*t*h*v*w+2*t*h*w)", "2*(3+2*v)/(4+v)", "(2+3*v)/(3+2*v)",
     "v*w*(3+2*v)/(9*v^2*w+3*v+2*v^2+15*v*w+6*w)", "v*w*(2+3*v)/(11*v^2*w+2*v+3*v^2+10*v*w+4*w)"),
    (3, (4, 3, 1), "3+6*v+v^2-3*t-2*t*v", "1+6*v+3*v^2-3*t-6*t*v-v^2*t",
     "-t*v^2*(-v*w*t-2*v*w*h+t*h*v+4*t*h*w*v+3*t*h*w)", "(3+6*v+v^2)/(3+2*v)", "(1+6*v+3*v^2)/(3+6*v+v^2)",
     "v*w*(3+6*v+v^2)/(24*v*w+23*v^2*w+3*v+6*v^2+v^3+4*w*v^3+9*w)",
     "v*w*(1+6*v+3*v^2)/(16*v*w+21*v^2*w+10*w*v^3+v+6*v^2+3*v^3+3*w)"),
    (4, (4, 2, 2), "3+3*v+3*w+v*w-3*t-t*v-t*w", "1+3*v+3*w+3*v*w-3*t-3*t*v-3*t*w-v*w*t",
     "-t*v*w*(-v*w*t-2*v*w*h+4*t*h*w*v+2*t*h*v+2*t*h*w)", "(3+3*v+3*w+v*w)/(3+v+w)",
     "(1+3*v+3*w+3*v*w)/(3+3*v+3*w+v*w)",
     "v*w*(3+3*v+3*w+v*w)/(2*(9*v*w+6*v^2*w+6*v*w^2+2*v^2*w^2+3*v+3*v^2+3*w+3*w^2))",
     "(1/2)*v*w*(1+3*v+3*w+3*v*w)/(5*v*w+6*v^2*w+6*v*w^2+5*v^2*w^2+v+3*v^2+w+3*w^2)"),
    (5, (3, 3, 2), "1+4*v+v^2+2*w+2*v*w-2*t-2*t*v-t*w",
     "2*v+2*v^2+w+4*v*w+v^2*w-t-4*t*v-v^2*t-2*t*w-2*v*w*t",
     "-t*v^2*w*(-v*w*t-2*v*w*h+3*t*h*w*v+2*t*h*v+3*t*h*w)", "(1+4*v+v^2+2*w+2*v*w)/(2+2*v+w)",
     "(2*v+2*v^2+w+4*v*w+v^2*w)/(1+4*v+v^2+2*w+2*v*w)",
     "v*w*(1+4*v+v^2+2*w+2*v*w)/(15*v*w+15*v^2*w+10*v*w^2+3*w*v^3+6*v^2*w^2+2*v+8*v^2+2*v^3+3*w+6*w^2)",
     "v*w*(2*v+2*v^2+w+4*v*w+v^2*w)/(6*v*w+12*v^2*w+6*w*v^3+11*v*w^2+11*v^2*w^2+3*w^2*v^3+4*v^2+4*v^3+3*w^2)"),
]
# Lower bounds for a10 after dropping w - h (cases 2, 3) or using h < w/2 (cases 4, 5).
BOUNDS = {
    (2, 6): ("5+2*v-2*t", "(8+5*v+2*v^2)/(4+v)"), (3, 6): ("4+3*v-2*t", "(6+5*v+4*v^2)/(3+2*v)"),
    (4, 6): ("4+2*v+3*w/2-2*t", "(1/2)*(12+8*v+5*w+4*v^2+3*v*w+3*w^2)/(3+v+w)"),
    (5, 6): ("3+3*v+3*w/2-2*t", "(1/2)*(8+8*v+4*w+8*v^2+4*v*w+3*w^2)/(2+2*v+w)"),
    (2, 5): ("5+2*v-2*t", "(11+10*v+4*v^2)/(3+2*v)"), (3, 5): ("4+3*v-2*t", "(10+21*v+16*v^2+3*v^3)/(3+6*v+v^2)"),
    (4, 5): ("4+2*v+3*w/2-2*t", "(20+24*v+21*w+17*v*w+12*v^2+4*v^2*w+9*w^2+3*v*w^2)/(2*(3+3*v+3*w+v*w))"),
    (5, 5): ("3+3*v+3*w/2-2*t", "(6+22*v+22*v^2+11*w+20*v*w+6*v^3+11*v^2*w+6*w^2+6*v*w^2)/(2*(1+4*v+v^2+2*w+2*v*w))"),
}
V5 = ["x", "v", "w", "t", "h"]
for case, (l, m, n), b, c, a1, t6, t5, h6, h5 in FIVE:
    defs = {"P": f"(x+1)^{l}*(x+v)^{m}*(x+w)^{n}*(x-t)^2*(x-h)",
            "Q": f"(x+1)^{l - 1}*(x+v)^{m - 1}*(x+w)^{n - 1}*(x-t)"}
    tag = f"five-roots-case{case}"
    cite = f"{CITE_5}, case {case} ({l},{m},{n})"
    ident(f"{tag}-b", f"{cite}: b = {b}", a("Q", 4), b, ["x", "v", "w", "t"], definitions=defs)
    ident(f"{tag}-c", f"{cite}: c = {c}", a("Q", 3), c, ["x", "v", "w", "t"], definitions=defs)
    if a1:
        ident(f"{tag}-a1", f"{cite}: factored a1", a("P", 1), a1, V5, definitions=defs)
    ident(f"{tag}-a10", f"{cite}: a10 = {8 - l}+... in terms of the roots", a("P", 10),
          f"{l}+{m}*v+{n}*w-2*t-h", V5, definitions=defs)
    for j, tj, hj in [(6, t6, h6), (5, t5, h5)]:
        poly = b if j == 6 else c
        ident(f"{tag}-a{j}-t", f"{cite}, a{j}: t = {tj} solves {'b' if j == 6 else 'c'} = 0",
              f"subs({poly}, t, {tj})", "0", ["v", "w", "t"])
        ident(f"{tag}-a{j}-h", f"{cite}, a{j}: h = {hj} solves a1 = 0 at that t",
              f"subs(subs({a('P', 1)}, t, {tj}), h, {hj})", "0", V5, definitions=defs)
        if case == 1:
            coeffpos(f"{tag}-a{j}-h-bound", f"{cite}, a{j}: h < 1/{5 if j == 6 else 4}",
                     f"1/{5 if j == 6 else 4} - {hj}", ["v", "w"])
        else:
            frac = "w" if case in (2, 3) else "w/2"
            coeffpos(f"{tag}-a{j}-h-bound", f"{cite}, a{j}: h < {frac}", f"{frac} - ({hj})", ["v", "w"])
            lhs, rhs = BOUNDS[(case, j)]
            ident(f"{tag}-a{j}-bound", f"{cite}, a{j}: {lhs} at t = {tj}", f"subs({lhs}, t, {tj})", rhs,
                  ["v", "w", "t"])
            coeffpos(f"{tag}-a{j}-bound-positive", f"{cite}, a{j}: the lower bound for a10 is positive", rhs,
                     ["v", "w"])
        coeffpos(f"{tag}-a{j}-a10-positive", f"{cite}, a{j}: a10 > 0 at these t and h",
                 f"subs(subs({a('P', 10)}, t, {tj}), h, {hj})", ["v", "w"], definitions=defs)

# Rank of J = d(a10,a9,aj,a1)/d(u,v,w,t,h) at points with a1 = 0, and the reduced matrix M.
R5 = {"u": ["1/10", "5"], "v": ["1/10", "5"], "w": ["1/10", "5"], "t": ["1/10", "5"]}
F5 = {"P": "(x+u)^4*(x+v)^2*(x+w)^2*(x-t)^2*(x-h)", "Q": "(x+u)^3*(x+v)*(x+w)*(x-t)"}
QC5 = {"qa": a("Q", 5), "qb": a("Q", 4), "qc": a("Q", 3), "qd": a("Q", 2), "qf": a("Q", 1), "qg": a("Q", 0)}
SOLVE_H = [{"var": "h", "equation": a("P", 1)}]
for j in (6, 5):
    rank(f"five-roots-J-rank-a{j}", f"{CITE_5}: d(a10,a9,a{j},a1)/d(u,v,w,t,h) has rank 4 when a1 = 0",
         [[f"diff({a('P', i)},{z})" for z in ("u", "v", "w", "t", "h")] for i in (10, 9, j, 1)], R5, 4,
         solve=SOLVE_H, positive=["h"], definitions=F5)
    third = ["qd", "qc", "qb", "qa", "1"] if j == 6 else ["qf", "qd", "qc", "qb", "qa"]
    rank(f"five-roots-M-rank-a{j}", f"{CITE_5}: the matrix M for a{j} has rank 4 when a1 = 0",
         [["1", "0", "0", "0", "0"], ["qa", "1", "0", "0", "0"], third, ["0", "0", "0", "qg", "qf"]], R5, 4,
         solve=SOLVE_H, positive=["h"], definitions={**F5, **QC5})

# --- Six or more distinct roots ----------------------------------------------------

CITE_6 = "Six or more distinct real roots"
F6 = {"P": "(x+u)^3*(x+v)^2*(x+w)^2*(x+q)*(x-t)^2*(x-h)", "Q": "(x+u)^2*(x+v)*(x+w)*(x-t)"}
QC6 = {"qa": a("Q", 4), "qb": a("Q", 3), "qc": a("Q", 2), "qd": a("Q", 1), "qf": a("Q", 0)}
R6 = {**R5, "q": ["1/10", "5"]}
for j in (6, 5):
    rank(f"six-roots-J-rank-a{j}", f"{CITE_6}: d(a10,a9,a{j},a1)/d(u,v,w,t,h,q) has rank 4 when a1 = 0",
         [[f"diff({a('P', i)},{z})" for z in ("u", "v", "w", "t", "h", "q")] for i in (10, 9, j, 1)], R6, 4,
         solve=SOLVE_H, positive=["h"], definitions=F6)
    third = ["qd", "qc", "qb", "qa", "1", "0"] if j == 6 else ["qf", "qd", "qc", "qb", "qa", "1"]
    rank(f"six-roots-M-rank-a{j}", f"{CITE_6}: the matrix M for a{j} has rank 4",
         [["1", "0", "0", "0", "0", "0"], ["qa", "1", "0", "0", "0", "0"], third,
          ["0", "0", "0", "0", "qf", "qd"]], R6, 4, solve=SOLVE_H, positive=["h"], definitions={**F6, **QC6})
