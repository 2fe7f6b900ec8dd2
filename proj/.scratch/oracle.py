#!/usr/bin/env python3
"""Naive oracle for freezing expected values (test-only, independent of C++ impl)."""
import csv, itertools, math
from fractions import Fraction

rows = []
with open('/root/proj/.scratch/table1.csv') as f:
    for r in csv.reader(f):
        rows.append([float(x) for x in r[1:]])
n = len(rows); m = len(rows[0])
print(f"n={n} m={m}")

def col(j): return [rows[i][j] for i in range(n)]

def sorted_col(j):
    # tie-break by ascending original index
    order = sorted(range(n), key=lambda i: (rows[i][j], i))
    vals = [rows[i][j] for i in order]
    return order, vals

def median(j):
    v = sorted(col(j))
    if n % 2 == 0: return (v[n//2-1] + v[n//2]) / 2
    return v[n//2]

meds = [median(j) for j in range(m)]
print("medians:", meds)

def crossings(c):
    # >= convention
    return [sum(1 for j in range(m) if rows[i][j] >= c[j]) for i in range(n)]

def hist_count(c):
    h = [0]*(m+1)
    for b in crossings(c): h[b] += 1
    return h

def hist_subset(c):
    h = [0]*(2**m)
    for i in range(n):
        bid = sum((1 << j) for j in range(m) if rows[i][j] >= c[j])
        h[bid] += 1
    return h

def sumsq(h): return sum(x*x for x in h)
def d_of(h): return Fraction(n*n - sumsq(h), n*(n-1))

h_med = hist_count(meds)
print("median hist:", h_med, "sumsq:", sumsq(h_med), "d:", float(d_of(h_med)))

# valid cut indices per column
def valid_indices(j):
    _, vals = sorted_col(j)
    ks = [0]
    for k in range(1, n):
        if vals[k-1] < vals[k]: ks.append(k)
    ks.append(n)
    return ks

vi = [valid_indices(j) for j in range(m)]
print("valid counts per col:", [len(v) for v in vi], "product:", math.prod(len(v) for v in vi))

svals = [sorted_col(j)[1] for j in range(m)]
print("col1 v25,v26 (1-based):", svals[0][24], svals[0][25])

def realize(kvec):
    c = []
    for j, k in enumerate(kvec):
        if k == 0: c.append(float('-inf'))
        elif k == n: c.append(float('inf'))
        else: c.append((svals[j][k-1] + svals[j][k]) / 2)
    return c

# exact count solve: minimize sumsq, lexicographically smallest k among optima
best = None
best_k = None
range_best = None  # (range, sumsq) lexicographic
range_k = None
for kvec in itertools.product(*vi):
    c = realize(kvec)
    h = hist_count(c)
    s = sumsq(h)
    if best is None or s < best:
        best = s; best_k = kvec
    rg = max(h) - min(h)
    key = (rg, s)
    if range_best is None or key < range_best:
        range_best = key; range_k = kvec
print("exact count: sumsq=", best, "k=", best_k, "cutoffs=", realize(best_k),
      "hist=", hist_count(realize(best_k)), "d=", float(d_of(hist_count(realize(best_k)))))
print("min range: (range,sumsq)=", range_best, "k=", range_k, "cutoffs=", realize(range_k),
      "hist=", hist_count(realize(range_k)), "d=", float(d_of(hist_count(realize(range_k)))))

# paper's ILP solution check
paper_ilp_c = (0.575, -0.705, -0.015)
h_ilp = hist_count(paper_ilp_c)
print("paper ILP point: hist=", h_ilp, "range=", max(h_ilp)-min(h_ilp), "d=", float(d_of(h_ilp)))

# greedy, both modes
def greedy(mode):
    # init: k_j = floor(n/2) adjusted downward to nearest valid
    kvec = []
    for j in range(m):
        k = n // 2
        while k not in vi[j]: k -= 1
        kvec.append(k)
    kvec = list(kvec)
    cur = sumsq(hist_count(realize(kvec)))
    sweeps = 0
    print(f"  greedy[{mode}] init k={kvec} cutoffs={realize(kvec)} sumsq={cur}")
    while True:
        sweeps += 1
        improved = False
        best_move = None  # (sumsq, j, k)
        for j in range(m):
            for k in vi[j]:
                if k == kvec[j]: continue
                trial = list(kvec); trial[j] = k
                s = sumsq(hist_count(realize(trial)))
                if s < cur:
                    if mode == 'first':
                        kvec = trial; cur = s; improved = True
                    else:
                        if best_move is None or (s, j, k) < best_move:
                            best_move = (s, j, k)
        if mode == 'best' and best_move is not None:
            s, j, k = best_move
            kvec[j] = k; cur = s; improved = True
        if not improved: break
    h = hist_count(realize(kvec))
    print(f"  greedy[{mode}] final k={kvec} cutoffs={realize(kvec)} hist={h} d={float(d_of(h))} sweeps={sweeps}")
    return kvec

greedy('best')
greedy('first')

# set function
def f_set(E, base):  # E: paper indices, base: 0 or 1
    idx = [e - base for e in E]
    c = [min(rows[i][j] for i in idx) for j in range(m)]
    return sumsq(hist_count(c))

A1 = [32, 37, 5, 10, 43, 12, 46, 48, 49, 22, 29]
B1 = [32, 1, 37, 5, 10, 11, 43, 12, 46, 45, 48, 49, 22, 29]
x1 = 24
A2 = [23, 46, 47]
B2 = [2, 3, 5, 7, 10, 14, 17, 18, 20, 23, 24, 25, 26, 27, 29, 30, 32, 36, 41, 43, 44, 45, 46, 47, 48, 49]
x2 = 34
for base in (1, 0):
    mA = f_set(A1 + [x1], base) - f_set(A1, base)
    mB = f_set(B1 + [x1], base) - f_set(B1, base)
    print(f"ex1 base={base}: marginal_A={mA} marginal_B={mB} sub_viol={mA<mB}")
    mA2 = f_set(A2 + [x2], base) - f_set(A2, base)
    mB2 = f_set(B2 + [x2], base) - f_set(B2, base)
    print(f"ex2 base={base}: marginal_A={mA2} marginal_B={mB2} super_viol={mA2>mB2}")

# induced cutoffs of {23,46,47} (1-based)
E = [23, 46, 47]
print("induced cutoffs {23,46,47} 1-based:", [min(rows[e-1][j] for e in E) for j in range(m)])

# subset-scheme exact on Table I (reference)
bestS = None; bestS_k = None
for kvec in itertools.product(*vi):
    h = hist_subset(realize(kvec))
    s = sumsq(h)
    if bestS is None or s < bestS:
        bestS = s; bestS_k = kvec
hs = hist_subset(realize(bestS_k))
ds = float(Fraction(n*n - bestS, n*(n-1)))
print("exact subset: sumsq=", bestS, "k=", bestS_k, "cutoffs=", realize(bestS_k), "d=", ds)
