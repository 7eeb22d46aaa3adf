# Included by gen_manifest.py: four distinct roots, cases A-D.

# --- Case A: (x+1)^7 (sx+1) (tx-1)^2 (wx-1) -----------------------------------

CA = {"P": "(x+1)^7*(s*x+1)*(t*x-1)^2*(w*x-1)", "Ps": "subs(P, s, w+2*t-7)",
      "a32": "-2*t+7", "a31": "-(2*t-7)^2", "a30": "-2*t^3+28*t^2-98*t+112",
      "a42": "t^2-14*t+21", "a41": "2*t^3-35*t^2+140*t-147", "a40": "-14*t^3+112*t^2-294*t+210",
      "a6s": "21*t^2-70*t+35", "a6d": "-70*t^3+350*t^2-490*t+140"}
CAV = ["x", "s", "t", "w"]
CITE_A = "Four roots, case A (7,1)"
ident("caseA-a1", f"{CITE_A}: a1 = w+2t-s-7", a("P", 1), "w+2*t-s-7", CAV, definitions=CA)
ident("caseA-a3", f"{CITE_A}: a3 = a32 w^2 + a31 w + a30 at s=w+2t-7", a("Ps", 3), "a32*w^2+a31*w+a30", CAV,
      definitions=CA)
ident("caseA-a3-split", f"{CITE_A}: a32 w^2 + a31 w = w(-2t+7)(w+2t-7)", "a32*w^2+a31*w",
      "w*(-2*t+7)*(w+2*t-7)", ["t", "w"], definitions=CA)
roots("caseA-a30-roots", f"{CITE_A}: a30 has the single real root 9.436", "a30", "t", ["9.436"],
      definitions=CA)
boxpos("caseA-a3-fails", f"{CITE_A}: a3 < 0 for t > 9.436 (s, w > 0)", "-(a32*w*s+a30)", ["t", "w", "s"],
       [[{"t": ["9437/1000", "inf"]}, {"w": [0, "inf"]}, {"s": [0, "inf"]}]], definitions=CA,
       note="uses a32 w^2 + a31 w = a32 w s")
ident("caseA-a4", f"{CITE_A}: a4 = a42 w^2 + a41 w + a40 at s=w+2t-7", a("Ps", 4), "a42*w^2+a41*w+a40", CAV,
      definitions=CA)
ident("caseA-a41", f"{CITE_A}: a41 = (2t-7) a42", "a41", "(2*t-7)*a42", ["t"], definitions=CA)
ident("caseA-a4-split", f"{CITE_A}: a4 = (w+2t-7) w a42 + a40", a("Ps", 4), "(w+2*t-7)*w*a42+a40", CAV,
      definitions=CA)
roots("caseA-a42-roots", f"{CITE_A}: real roots of a42", "a42", "t", ["1.708", "12.291"], definitions=CA)
roots("caseA-a40-roots", f"{CITE_A}: real root of a40", "a40", "t", ["1.136"], definitions=CA)
boxpos("caseA-a4-fails", f"{CITE_A}: a4 < 0 for t in [1.708, 12.291] (s, w > 0)", "-(s*w*a42+a40)",
       ["t", "w", "s"], [[{"t": ["1709/1000", "12291/1000"]}, {"w": [0, "inf"]}, {"s": [0, "inf"]}]],
       definitions=CA)
ident("caseA-a10", f"{CITE_A}: a10/t = (7t-2) w (w+2t-7) + t(7-2t)", a("Ps", 10),
      "t*((7*t-2)*w*(w+2*t-7)+t*(7-2*t))", CAV, definitions=CA)
boxpos("caseA-a10-fails", f"{CITE_A}: (7t-2) w s + t(7-2t) >= 0 for t in [2/7, 7/2]", "(7*t-2)*w*s+t*(7-2*t)",
       ["t", "w", "s"], [[{"t": ["2/7", "7/2"]}, {"w": [0, "inf"]}, {"s": [0, "inf"]}]], strict=False)
ident("caseA-a6", f"{CITE_A}: a6 = a6* w (w+2t-7) + a6dagger", a("Ps", 6), "a6s*w*(w+2*t-7)+a6d", CAV,
      definitions=CA)
roots("caseA-a6star-roots", f"{CITE_A}: real roots of a6*", "a6s", "t", ["0.612", "2.720"], definitions=CA)
roots("caseA-a6dagger-roots", f"{CITE_A}: real roots of a6dagger", "a6d", "t", ["0.381", "2", "2.618"],
      definitions=CA)
boxpos("caseA-a6-positive", f"{CITE_A}: a6 > 0 for t in (0, 2/7) (s, w > 0)", "a6s*w*s+a6d", ["t", "w", "s"],
       [[{"t": [0, "2/7"]}, {"w": [0, "inf"]}, {"s": [0, "inf"]}]], definitions=CA)

# --- Case B: (x+1)^6 (T x^2 + S x - 1)^2 (wx-1) --------------------------------

CB = {"P": "(x+1)^6*(T*x^2+Sg*x-1)^2*(w*x-1)", "Ps": "subs(P, Sg, (6-w)/2)",
      "a72": "15*w-20", "a71": "-20*w^2+105*w-78", "a70": "(15*w^3-162*w^2+468*w-192)/4",
      "Ts": "(w^2-6*w)/(6*w-1)",
      "Cb": "40*w^5-444*w^4+1345*w^3-502*w^2+300*w-64",
      "Db": "64*w^5-300*w^4+502*w^3-1345*w^2+444*w-40"}
CBV = ["x", "Sg", "T", "w"]
CITE_B = "Four roots, case B (6,2)"
ident("caseB-a1", f"{CITE_B}: a1 = w+2S-6", a("P", 1), "w+2*Sg-6", CBV, definitions=CB)
ident("caseB-a10", f"{CITE_B}: a10/T = (6w-1)T + 6w - w^2", a("Ps", 10), "T*((6*w-1)*T+6*w-w^2)", CBV,
      definitions=CB)
ident("caseB-a7", f"{CITE_B}: a7 = a72 T^2 + a71 T + a70", a("Ps", 7), "a72*T^2+a71*T+a70", CBV,
      definitions=CB)
roots("caseB-a70-roots", f"{CITE_B}: roots of a70", "a70", "w", ["0.489", "4.504", "5.805"], definitions=CB)
ident("caseB-a7-at-T", f"{CITE_B}: a7 = 3C/4(6w-1)^2 at T=(w^2-6w)/(6w-1)", f"subs({a('Ps', 7)}, T, Ts)",
      "3*Cb/(4*(6*w-1)^2)", CBV, definitions=CB)
roots("caseB-C-roots", f"{CITE_B}: C has the single real root 0.253", "Cb", "w", ["0.253"], definitions=CB)
ident("caseB-da7", f"{CITE_B}: da7/dT = (30w-40)T - 20w^2 + 105w - 78", f"diff({a('Ps', 7)}, T)",
      "(30*w-40)*T-20*w^2+105*w-78", CBV, definitions=CB)
ident("caseB-da7-at-T", f"{CITE_B}: da7/dT at T=(w^2-6w)/(6w-1)", f"subs(diff({a('Ps', 7)}, T), T, Ts)",
      "-(90*w^3-430*w^2+333*w-78)/(6*w-1)", CBV, definitions=CB)
roots("caseB-da7-numerator-roots", f"{CITE_B}: 90w^3-430w^2+333w-78 has the single real root 3.882",
      "90*w^3-430*w^2+333*w-78", "w", ["3.882"])
ident("caseB-w16", f"{CITE_B}: a10 = 35T/36 at w=1/6", f"subs({a('Ps', 10)}, w, 1/6)", "35*T/36", CBV,
      definitions=CB)
ident("caseB-a4-at-T", f"{CITE_B}: a4 = 3D/4(6w-1)^2 at T=(w^2-6w)/(6w-1)", f"subs({a('Ps', 4)}, T, Ts)",
      "3*Db/(4*(6*w-1)^2)", CBV, definitions=CB)
roots("caseB-D-roots", f"{CITE_B}: D has the single real root 3.939", "Db", "w", ["3.939"], definitions=CB)
ident("caseB-da4", f"{CITE_B}: da4/dT = -w^2 - 2T - 6", f"diff({a('Ps', 4)}, T)", "-w^2-2*T-6", CBV,
      definitions=CB)
boxpos("caseB-a7-positive", f"{CITE_B}: a7 > 0 for w > 6 and 0 <= T <= (w^2-6w)/(6w-1)",
       "a72*k^2*(w^2-6*w)^2+a71*k*(w^2-6*w)*(6*w-1)+a70*(6*w-1)^2", ["w", "k"],
       [[{"w": [6, "inf"]}, {"k": [0, 1]}]], definitions=CB,
       note="(6w-1)^2 a7 with T = k (w^2-6w)/(6w-1), k in [0,1]")
boxpos("caseB-D-negative", f"{CITE_B}: D < 0 for w in [0, 1/6]", "-Db", ["w"], [[{"w": [0, "1/6"]}]],
       definitions=CB)

# --- Case C: (x+1)^5 (sx+1)^3 (tx-1)^2 (wx-1) -----------------------------------

CC = {"P": "(x+1)^5*(x*s+1)^3*(x*t-1)^2*(x*w-1)", "Ps": "subs(P, s, (w+2*t-5)/3)",
      "S": "10*w*t^2-2*t^2+5*w^2*t-21*w*t+5*t-2*w^2+10*w",
      "A6": "27*coeff(Ps,x,6)",
      "g": "4*t^4+4*t^3*w+t^2*w^2-35*t^2-20*w*t^2+90*t-10*w^2*t+20*w*t-5-40*w+10*w^2",
      "h4": "t^2-10*t+10", "h3": "6*t^3-35*t^2+50*t-70", "h2": "12*t^4-30*t^3+90*t+90",
      "h1": "8*t^5-20*t^4-70*t^3+355*t^2-460*t+25", "h0": "-40*t^5+100*t^4-50*t^3-50*t^2+50*t+260"}
CCV = ["x", "s", "t", "w"]
CITE_C = "Four roots, case C (5,3)"
ident("caseC-a1", f"{CITE_C}: a1 = w+2t-5-3s", a("P", 1), "w+2*t-5-3*s", CCV, definitions=CC)
ident("caseC-27a10", f"{CITE_C}: 27 a10 = t S (w+2t-5)^2", f"27*{a('Ps', 10)}", "t*S*(w+2*t-5)^2", CCV,
      definitions=CC)
ident("caseC-S-in-w", f"{CITE_C}: S as a polynomial in w", "S", "(5*t-2)*w^2+(10-21*t+10*t^2)*w+5*t-2*t^2",
      ["t", "w"], definitions=CC)
ident("caseC-D1", f"{CITE_C}: discriminant D1 of S in w", "(10-21*t+10*t^2)^2-4*(5*t-2)*(5*t-2*t^2)",
      "5*(t-2)*(2*t-1)*(10*t^2-13*t+10)", ["t"])
roots("caseC-D1-roots", f"{CITE_C}: real roots of D1", "5*(t-2)*(2*t-1)*(10*t^2-13*t+10)", "t", ["0.5", "2"])
ident("caseC-S-in-t", f"{CITE_C}: S as a polynomial in t", "S", "(10*w-2)*t^2+(5*w^2-21*w+5)*t-2*w^2+10*w",
      ["t", "w"], definitions=CC)
ident("caseC-D2", f"{CITE_C}: discriminant D2 of S in t", "(5*w^2-21*w+5)^2-4*(10*w-2)*(-2*w^2+10*w)",
      "5*(w^2-5*w+1)*(5*w^2-w+5)", ["w"])
roots("caseC-D2-roots", f"{CITE_C}: real roots of D2", "5*(w^2-5*w+1)*(5*w^2-w+5)", "w", ["0.208", "4.791"])
ident("caseC-dS", f"{CITE_C}: dS/dt = 5w^2-21w+20wt-4t+5", "diff(S, t)", "5*w^2-21*w+20*w*t-4*t+5",
      ["t", "w"], definitions=CC)
boxpos("caseC-dS-positive", f"{CITE_C}: dS/dt > 0 for t > 2, w > 4.791", "diff(S, t)", ["t", "w"],
       [[{"t": [2, "inf"]}, {"w": ["4791/1000", "inf"]}]], definitions=CC)
ident("caseC-27a4", f"{CITE_C}: 27 a4 = w^4 + s3 w^3 + s2 w^2 + s1 w + s0", f"27*{a('Ps', 4)}",
      "w^4+(-10*t+25)*w^3+(-30*t^2+60*t-120)*w^2+(-22*t^3+75*t^2-120*t+175)*w"
      "+(-20*t^4+110*t^3-300*t^2+350*t-410)", CCV, definitions=CC)
boxpos("caseC-Sigma2", f"{CITE_C}: a4 < 0 on Sigma2 = [2,inf) x (0, 0.208]", f"-27*{a('Ps', 4)}", ["t", "w"],
       [[{"t": [2, "inf"]}, {"w": [0, "2088/10000"]}]], definitions=CC)
ident("caseC-Sigma3-27a6", f"{CITE_C}: 27 a6 at w = 6.75 (printed decimals)", "subs(A6, w, 27/4)",
      "14*t^5+511.75*t^4-44.09375*t^3-6341.949214*t^2-4336.44531*t+3760.50781", ["t", "x", "s", "w"],
      definitions=CC, coeff_tolerance="0.00001")
roots("caseC-Sigma3-27a6-roots", f"{CITE_C}: real roots of 27 a6 at w = 6.75", "subs(A6, w, 27/4)", "t",
      ["-36.303", "-3.058", "-1.324", "0.503", "3.629"], definitions=CC)
ident("caseC-Sigma3-da6", f"{CITE_C}: 27 da6/dw = (4w-5+2t) g", "diff(A6, w)", "(4*w-5+2*t)*g", CCV,
      definitions=CC)
ident("caseC-Sigma3-g", f"{CITE_C}: g at w = 6.75", "subs(g, w, 27/4)",
      "4*t^4+27*t^3-124.4375*t^2-230.625*t+180.625", ["t", "w"], definitions=CC)
roots("caseC-Sigma3-g-roots", f"{CITE_C}: real roots of g at w = 6.75", "subs(g, w, 27/4)", "t",
      ["-9.360", "-1.982", "0.610", "3.982"], definitions=CC)
ident("caseC-Sigma3-dg", f"{CITE_C}: dg/dw", "diff(g, w)", "(2*t^2-20*t+20)*w+4*t^3-20*t^2+20*t-40",
      ["t", "w"], definitions=CC)
boxpos("caseC-Sigma3-dg-positive", f"{CITE_C}: dg/dw > 0 on Sigma3", "diff(g, w)", ["t", "w"],
       [[{"t": [0, "1/2"]}, {"w": ["27/4", "inf"]}]], definitions=CC)
boxpos("caseC-Sigma3-a6", f"{CITE_C}: a6 > 0 on Sigma3 = [0,0.5] x [6.75, inf)", "A6", ["t", "w"],
       [[{"t": [0, "1/2"]}, {"w": ["27/4", "inf"]}]], definitions=CC)
ident("caseC-Sigma4-S", f"{CITE_C}: S at t = 1/4", "subs(S, t, 1/4)", "-0.75*w^2+5.375*w+1.125", ["t", "w"],
      definitions=CC)
boxpos("caseC-Sigma4-dS", f"{CITE_C}: dS/dt > 0 on Sigma4", "diff(S, t)", ["t", "w"],
       [[{"t": ["1/4", "1/2"]}, {"w": ["4791/1000", "27/4"]}]], definitions=CC)
boxpos("caseC-Sigma4", f"{CITE_C}: a10 >= 0 on Sigma4 (S >= 0)", "S", ["t", "w"],
       [[{"t": ["1/4", "1/2"]}, {"w": ["4791/1000", "27/4"]}]], definitions=CC)
ident("caseC-Sigma5-h", f"{CITE_C}: 27 a6 = h4 w^4 + h3 w^3 + h2 w^2 + h1 w + h0", "A6",
      "h4*w^4+h3*w^3+h2*w^2+h1*w+h0", CCV, definitions=CC)
for k, rhs in enumerate(["300*t^4-400*t^3-2025*t^2+135", "8*t^5+100*t^4+80*t^3-1770*t^2-810*t+675",
                         "24*t^4+120*t^3-750*t^2-1320*t+1080", "36*t^3-90*t^2-900*t+780", "24*t^2-240*t+240"]):
    lhs = "subs(A6, w, 5)" if k == 0 else f"subs(diff(A6, w, {k}), w, 5)"
    ident(f"caseC-Sigma5-d{k}", f"{CITE_C}: 27 d^{k}a6/dw^{k} at w = 5", lhs, rhs, CCV, definitions=CC)
    boxpos(f"caseC-Sigma5-d{k}-positive", f"{CITE_C}: 27 d^{k}a6/dw^{k} at w = 5 is positive on [0, 1/4]", rhs,
           ["t"], [[{"t": [0, "1/4"]}]])
boxpos("caseC-Sigma5", f"{CITE_C}: a6 > 0 on Sigma5 = [0,1/4] x [5, 6.75]", "A6", ["t", "w"],
       [[{"t": [0, "1/4"]}, {"w": [5, "27/4"]}]], definitions=CC)
for k, rhs in enumerate(["-2*w^2+10*w", "5*w^2-21*w+5", "20*w-4"]):
    lhs = "subs(S, t, 0)" if k == 0 else f"subs(diff(S, t, {k}), t, 0)"
    ident(f"caseC-Sigma6-d{k}", f"{CITE_C}: d^{k}S/dt^{k} at t = 0", lhs, rhs, ["t", "w"], definitions=CC)
boxpos("caseC-Sigma6", f"{CITE_C}: a10 >= 0 on Sigma6 (S >= 0)", "S", ["t", "w"],
       [[{"t": [0, "1/4"]}, {"w": ["4791/1000", 5]}]], strict=False, definitions=CC)

# --- Case D: (x+1)^4 (sx+1)^4 (tx-1)^2 (wx-1) -----------------------------------

CD = {"P": "(x+1)^4*(s*x+1)^4*(t*x-1)^2*(w*x-1)", "Ps": "subs(P, s, (w+2*t-4)/4)",
      "H": "8*w*t^2-2*t^2+4*w^2*t-5*w*t+4*t+8*w-2*w^2",
      "A5": "1536*t+768*w-1536*t^2-384*w^2-1536*w*t+768*w^2*t+1280*w*t^2-32*w^3*t-416*w^2*t^2-384*w*t^3"
            "-16*t^3*w^2+16*t^4*w-72*t^2*w^3-22*t*w^4-128*w^3+512*t^3+44*w^4-64*t^4-96*t^5+w^5",
      "A6": "1024-768*w-1536*t-576*w^2*t+1920*t^2+864*w^2-352*w^3-1280*t^3+800*t^4-256*t^5+26*w^4+4*w^5"
            "-16*t^6+384*w*t-384*w*t^2+400*w^3*t+720*w^2*t^2+448*w*t^3-352*t^3*w^2-256*t^4*w+40*t^3*w^3"
            "+104*t^4*w^2+64*t^5*w-272*t^2*w^3-t^2*w^4-56*t*w^4-2*t*w^5",
      "R": "(4*w^2+19*w+4)*(4*w^2-13*w+4)",
      "tau": "(-4*w^2+5*w-4+Y)/(4*(4*w-1))",
      "C0": "6144*w^10-6144*w^9-224512*w^8+2284416*w^7-6369192*w^6+6270368*w^5-3922014*w^4+1993629*w^3"
            "-860272*w^2+234384*w-25728",
      "C1": "384*w^7-2496*w^6+632*w^5-4064*w^4+4730*w^3-1355*w^2-136*w+64",
      "C2": "55296*w^12+82944*w^11-1638912*w^10+6310368*w^9-13847224*w^8+10530920*w^7-8336710*w^6"
            "+5520431*w^5-2256796*w^4+758480*w^3-378304*w^2+63488*w+2048"}
CDV = ["x", "s", "t", "w"]
CITE_D = "Four roots, case D (4,4)"
ident("caseD-a1", f"{CITE_D}: a1 = w+2t-4s-4", a("P", 1), "w+2*t-4*s-4", CDV, definitions=CD)
ident("caseD-256a10", f"{CITE_D}: 256 a10 = t (w+2t-4)^3 H*", f"256*{a('Ps', 10)}", "t*(w+2*t-4)^3*H", CDV,
      definitions=CD)
ident("caseD-H-in-w", f"{CITE_D}: H* as a polynomial in w", "H", "(4*t-2)*w^2+(8*t^2-5*t+8)*w-2*t^2+4*t",
      ["t", "w"], definitions=CD)
ident("caseD-H-in-t", f"{CITE_D}: H* as a polynomial in t", "H", "(8*w-2)*t^2+(4*w^2-5*w+4)*t-2*w^2+8*w",
      ["t", "w"], definitions=CD)
for name, box, strict in [("t-half-2", [{"t": ["1/2", 2]}, {"w": [0, "inf"]}], False),
                          ("w-quarter-4", [{"t": [0, "inf"]}, {"w": ["1/4", 4]}], False),
                          ("t2-w4", [{"t": [2, "inf"]}, {"w": [4, "inf"]}], True),
                          ("small", [{"t": [0, "1/2"]}, {"w": [0, "1/4"]}], False),
                          ("strip", [{"t": ["3/10", "1/2"]}, {"w": [4, "671/100"]}], True)]:
    boxpos(f"caseD-H-{name}", f"{CITE_D}: lemma on H* >= 0, box {name}", "H", ["t", "w"], [box], strict=strict,
           definitions=CD)
ident("caseD-H-t03", f"{CITE_D}: H* at t = 0.3", "subs(H, t, 3/10)", "w*(7.22-0.8*w)+1.02", ["t", "w"],
      definitions=CD)
ident("caseD-256a5", f"{CITE_D}: 256 a5 = a5*", f"256*{a('Ps', 5)}", "A5", CDV, definitions=CD)
for k, rhs in enumerate(["-3072-640*w^2-480*w^3+w^5", "-8192-512*w-1088*w^2-320*w^3-22*w^4",
                         "-15360-1280*w-1024*w^2-144*w^3", "-23040-1536*w-96*w^2", "-24576+384*w", "-11520"]):
    lhs = "subs(A5, t, 2)" if k == 0 else f"subs(diff(A5, t, {k}), t, 2)"
    ident(f"caseD-v{k}", f"{CITE_D}: v{k} = d^{k}a5*/dt^{k} at t = 2", lhs, rhs, ["t", "w"], definitions=CD)
boxpos("caseD-a5-negative", f"{CITE_D}: a5 < 0 on [2, inf) x (0, 1/4]", "-A5", ["t", "w"],
       [[{"t": [2, "inf"]}, {"w": [0, "1/4"]}]], definitions=CD)
ident("caseD-256a6", f"{CITE_D}: 256 a6 expansion", f"256*{a('Ps', 6)}", "A6", CDV, definitions=CD)
U671 = ["-16*t^6+173.44*t^5+3764.7464*t^4-2037.93476*t^3-52440.84297*t^2-44774.66948*t+35543.86077",
        "64*t^5+1139.68*t^4+1127.0520*t^3-28669.71244*t^2-41261.71907*t+35244.43996",
        "208*t^4+906.40*t^3-10051.0092*t^2-27388.66364*t+25772.93608",
        "240*t^3-1793.04*t^2-12021.1320*t+12880.8240", "-24*t^2-2954.40*t+3844.80", "240*(2-t)"]
U5 = ["-16*t^6+64*t^5+2120*t^4-2840*t^3-16625*t^2-5266*t+3534",
      "64*t^5+784*t^4-72*t^3-14084*t^2-9626*t+6972", "208*t^4+496*t^3-7020*t^2-10952*t+8968",
      "240*t^3-1752*t^2-7320*t+7008", "-24*t^2-2544*t+3024", "240*(2-t)"]
for label, wv, lst, hi in [("w671", "671/100", U671, "1/2"), ("w5", "5", U5, "3/10")]:
    for k, rhs in enumerate(lst):
        lhs = f"subs(A6, w, {wv})" if k == 0 else f"subs(diff(A6, w, {k}), w, {wv})"
        extra = {"coeff_tolerance": "0.0001"} if label == "w671" and k <= 1 else {}
        ident(f"caseD-u{k}-{label}", f"{CITE_D}: u{k} = 256 d^{k}a6/dw^{k} at w = {wv}", lhs, rhs, ["t", "w"],
              definitions=CD, **extra)
        boxpos(f"caseD-u{k}-{label}-positive", f"{CITE_D}: u{k} at w = {wv} is positive on (0, {hi}]",
               lhs, ["t", "w"], [[{"t": [0, hi]}]], definitions=CD)
boxpos("caseD-a6-Omega2", f"{CITE_D}: a6 > 0 on (0, 1/2] x [6.71, inf)", "A6", ["t", "w"],
       [[{"t": [0, "1/2"]}, {"w": ["671/100", "inf"]}]], definitions=CD)
boxpos("caseD-a6-Omega3plus", f"{CITE_D}: a6 > 0 on (0, 0.3] x [5, inf)", "A6", ["t", "w"],
       [[{"t": [0, "3/10"]}, {"w": [5, "inf"]}]], definitions=CD)
ident("caseD-a6-t0", f"{CITE_D}: 256 a6 at t = 0", "subs(A6, t, 0)", "4*w^5+26*w^4-352*w^3+864*w^2-768*w+1024",
      ["t", "w"], definitions=CD)
roots("caseD-a6-t0-roots", f"{CITE_D}: real roots of 256 a6 at t = 0", "subs(A6, t, 0)", "w",
      ["-13.978", "3.110", "4"], definitions=CD)
ETA = [("-2*w^5-56*w^4+400*w^3-576*w^2+384*w-1536", ["-34.115", "2.782", "4"]),
       ("-2*w^4-544*w^3+1440*w^2-768*w+3840", ["-274.626", "2.948"]),
       ("240*w^3-2112*w^2+2688*w-7680", ["7.894"]),
       ("2496*w^2-6144*w+19200", []),
       ("7680*w-30720", ["4"]),
       ("-11520", None)]
for k, (rhs, rts) in enumerate(ETA, start=1):
    ident(f"caseD-eta{k}", f"{CITE_D}: eta{k} = 256 d^{k}a6/dt^{k} at t = 0", f"subs(diff(A6, t, {k}), t, 0)",
          rhs, ["t", "w"], definitions=CD)
    if rts is not None:
        roots(f"caseD-eta{k}-roots", f"{CITE_D}: real roots of eta{k}", rhs, "w", rts)
ident("caseD-majorant", f"{CITE_D}: eta2 + eta4/24 + eta5/192",
      "(-2*w^4-544*w^3+1440*w^2-768*w+3840)+(2496*w^2-6144*w+19200)/24+(7680*w-30720)/192",
      "-2*w^4-544*w^3+1544*w^2-984*w+4480", ["w"])
roots("caseD-majorant-roots", f"{CITE_D}: real roots of the majorant", "-2*w^4-544*w^3+1544*w^2-984*w+4480", "w",
      ["-274.815", "3.083"])
boxpos("caseD-a6-decreasing", f"{CITE_D}: a6 is decreasing in t on (0, 1/2] x [4, 6.71]", "-diff(A6, t)",
       ["t", "w"], [[{"t": [0, "1/2"]}, {"w": [4, "671/100"]}]], strict=False, definitions=CD)
ident("caseD-H-t0", f"{CITE_D}: H* at t = 0 equals 2w(4-w)", "subs(H, t, 0)", "2*w*(4-w)", ["t", "w"],
      definitions=CD)
add("caseD-tau-chain", "RadicalChain", f"{CITE_D}: a6 at t = tau(w) and the squared inequality",
    variables=["t", "w", "Y", "x", "s"], definitions=CD,
    steps=[
        {"id": "tau-root", "kind": "PolyIdentity", "citation": "tau is a root of H* in t",
         "variables": ["t", "w", "Y"], "expressions": {"lhs": "sqrt_reduce(subs(H, t, tau)*(4*w-1)^2, Y, R)",
                                                       "rhs": "0"}},
        {"id": "tau-at-4", "kind": "PolyIdentity", "citation": "R(4) = 48^2, so tau(4) = 0",
         "variables": ["w", "Y"], "expressions": {"lhs": "subs(subs(tau, Y, 48), w, 4)", "rhs": "0"}},
        {"id": "R-at-4", "kind": "PolyIdentity", "citation": "R(4) = 2304",
         "variables": ["w"], "expressions": {"lhs": "subs(R, w, 4)", "rhs": "2304"}},
        {"id": "a6-at-tau", "kind": "PolyIdentity", "citation": "256 a6(tau, w) (4w-1)^6 = w C0 + (4w^2+19w+4) C1 Y",
         "variables": ["t", "w", "Y"],
         "expressions": {"lhs": "sqrt_reduce(subs(A6, t, tau)*(4*w-1)^6, Y, R)",
                         "rhs": "w*C0+(4*w^2+19*w+4)*C1*Y"}},
        {"id": "squared", "kind": "PolyIdentity", "citation": "w^2 C0^2 - (4w^2+19w+4)^2 C1^2 Y^2 = 128 (w-4) C2 (4w-1)^6",
         "variables": ["w"], "expressions": {"lhs": "w^2*C0^2-(4*w^2+19*w+4)^2*C1^2*R",
                                             "rhs": "128*(w-4)*C2*(4*w-1)^6"}},
    ])
boxpos("caseD-C0-positive", f"{CITE_D}: C0 > 0 on [4, 5]", "C0", ["w"], [[{"w": [4, 5]}]], definitions=CD)
roots("caseD-C0-roots-below-4", f"{CITE_D}: all real roots of C0 are smaller than 4", "C0", "w", [], count=0,
      rng=[4, None], definitions=CD)
boxpos("caseD-C1-negative", f"{CITE_D}: C1 < 0 on [4, 5]", "-C1", ["w"], [[{"w": [4, 5]}]], definitions=CD)
roots("caseD-C1-roots", f"{CITE_D}: real roots of C1", "C1", "w", ["-0.192", "0.269", "6.455"], definitions=CD)
roots("caseD-C2-largest-root", f"{CITE_D}: the largest real root of C2 is 3.045", "C2", "w", ["3.045"], count=1,
      rng=["3", None], definitions=CD)
boxpos("caseD-C2-positive", f"{CITE_D}: C2 > 0 on [4, 5]", "C2", ["w"], [[{"w": [4, 5]}]], definitions=CD)
