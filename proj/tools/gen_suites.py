"""Regenerate data/easy.txt, medium.txt and hard.txt.

Usage: python3 tools/gen_suites.py SEED OUTDIR   (the bundled files use seed 2014)

Each puzzle comes from a random solved grid by removing clues in random order while the solution
stays unique, down to a clue count drawn from the category's band. Puzzles that naked singles
alone can finish are thrown away.
"""
import os
import random
import sys


def units_of(c):
    r, k = divmod(c, 9)
    b = (r // 3) * 3 + k // 3
    return r, k, b

def count_solutions(g, cap):
    g = g[:]
    rows = [0]*9; cols = [0]*9; boxes = [0]*9
    for c, d in enumerate(g):
        if d:
            r, k, b = units_of(c); m = 1 << d
            rows[r] |= m; cols[k] |= m; boxes[b] |= m
    empties = [c for c in range(81) if g[c] == 0]
    n = [0]
    def rec():
        best = None; bestm = 0; bestc = 10
        for c in empties:
            if g[c]: continue
            r, k, b = units_of(c)
            m = ~(rows[r] | cols[k] | boxes[b]) & 0x3FE
            cnt = bin(m).count('1')
            if cnt < bestc:
                best, bestm, bestc = c, m, cnt
                if cnt == 0: break
        if best is None:
            n[0] += 1
            return n[0] >= cap
        if bestc == 0: return False
        r, k, b = units_of(best)
        for d in range(1, 10):
            if bestm >> d & 1:
                bit = 1 << d
                g[best] = d; rows[r] |= bit; cols[k] |= bit; boxes[b] |= bit
                if rec(): return True
                g[best] = 0; rows[r] &= ~bit; cols[k] &= ~bit; boxes[b] &= ~bit
        return False
    rec()
    return n[0]

def random_solution(rng):
    base = [((r * 3 + r // 3 + c) % 9) + 1 for r in range(9) for c in range(9)]
    bands = rng.sample(range(3), 3); stacks = rng.sample(range(3), 3)
    rows = [b * 3 + i for b in bands for i in rng.sample(range(3), 3)]
    cols = [s * 3 + i for s in stacks for i in rng.sample(range(3), 3)]
    digits = rng.sample(range(1, 10), 9)
    g = [digits[base[rows[r] * 9 + cols[c]] - 1] for r in range(9) for c in range(9)]
    if rng.random() < 0.5:
        g = [g[c * 9 + r] for r in range(9) for c in range(9)]
    return g

def singles_only(g):
    g = g[:]
    while True:
        progress = False
        for c in range(81):
            if g[c]: continue
            r, k, b = units_of(c)
            used = set()
            for o in range(81):
                if g[o] and o != c:
                    rr, kk, bb = units_of(o)
                    if rr == r or kk == k or bb == b: used.add(g[o])
            cand = set(range(1, 10)) - used
            if len(cand) == 1:
                g[c] = cand.pop(); progress = True
        if not progress: break
    return all(g)

def make(rng, lo, hi):
    target = rng.randint(lo, hi)
    while True:
        sol = random_solution(rng)
        g = sol[:]
        order = list(range(81)); rng.shuffle(order)
        for c in order:
            if sum(1 for x in g if x) <= target: break
            d = g[c]; g[c] = 0
            if count_solutions(g, 2) != 1: g[c] = d
        if sum(1 for x in g if x) == target and not singles_only(g):
            return g

rng = random.Random(int(sys.argv[1]))
outdir = sys.argv[2]
for name, lo, hi, n in [("easy", 36, 49, 10), ("medium", 32, 35, 10), ("hard", 28, 31, 10)]:
    with open(os.path.join(outdir, f"{name}.txt"), "w") as f:
        f.write(f"# {name}: {n} puzzles with {lo}-{hi} clues, unique solutions, not solvable by naked singles alone\n")
        for _ in range(n):
            f.write(''.join(str(x) if x else '.' for x in make(rng, lo, hi)) + "\n")
