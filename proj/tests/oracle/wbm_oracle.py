"""Independent reference values for the hand-oracle fixture.

Everything here is written from the metric definitions, without looking at
the C++ sources, and favours brute force over cleverness: TER searches every
shift sequence up to a depth, METEOR enumerates every alignment, ICC uses
explicit sums of squares.

    python3 tests/oracle/wbm_oracle.py   # rewrites tests/fixtures/oracle_pairs.json
"""
import itertools
import json
import math
from collections import Counter
from pathlib import Path

import numpy as np
from nltk.stem.porter import PorterStemmer
from scipy import stats

OUT = Path(__file__).resolve().parent.parent / "fixtures" / "oracle_pairs.json"
STEMMER = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)

# (candidate, references); all lowercase with no punctuation so the token
# lists are just str.split().
PAIRS = [
    ("the the the the the the the", ["the cat is on the mat"]),
    ("c a b", ["a b c"]),
    ("a b c d", ["a c b d"]),
    ("hello", ["hello"]),
    ("a b", ["a x b y"]),
    ("x is a moderately priced restaurant in x",
     ["x is a moderately priced restaurant in x",
      "x is a restaurant in x with moderate prices"]),
    ("x is a restaurant restaurant in x",
     ["x is a moderately priced restaurant in x",
      "x is a restaurant in x with moderate prices"]),
    ("there are no expensive hotels in embarcadero that allow kids",
     ["there is no expensive hotel in the embarcadero area allowing children"]),
    ("the hotel serves cheap food",
     ["cheap food is served at the hotel", "the hotel has cheap food"]),
    ("a b", ["a b"]),
]


def grams(toks, n):
    return Counter(tuple(toks[i:i + n]) for i in range(len(toks) - n + 1))


# --- BLEU --------------------------------------------------------------------

def bleu(cand, refs, max_n):
    if not cand:
        return 0.0
    logs = 0.0
    for n in range(1, max_n + 1):
        cg = grams(cand, n)
        total = sum(cg.values())
        clip = 0
        for g, c in cg.items():
            clip += min(c, max(grams(r, n)[g] for r in refs))
        p = clip / total if clip else 1e-9
        logs += math.log(p)
    c = len(cand)
    r = sorted((abs(len(x) - c), len(x)) for x in refs)[0][1]
    bp = 1.0 if c > r else math.exp(1 - r / c)
    return bp * math.exp(logs / max_n)


# --- NIST --------------------------------------------------------------------

def nist(cand, refs, max_n=5):
    pooled = Counter()
    for r in refs:
        for n in range(1, max_n + 1):
            pooled.update(grams(r, n))
    words = sum(len(r) for r in refs)

    def info(g):
        prefix = words if len(g) == 1 else pooled[g[:-1]]
        return math.log2(prefix / pooled[g])

    score = 0.0
    for n in range(1, max_n + 1):
        cg = grams(cand, n)
        if not cg:
            continue
        num = 0.0
        for g, c in cg.items():
            m = min(c, max(grams(r, n)[g] for r in refs))
            if m:
                num += m * info(g)
        score += num / sum(cg.values())
    beta = math.log(0.5) / math.log(2 / 3) ** 2
    ratio = min(len(cand) / (words / len(refs)), 1.0)
    return score * math.exp(beta * math.log(ratio) ** 2)


# --- TER ---------------------------------------------------------------------

def lev(a, b):
    d = list(range(len(b) + 1))
    for i in range(1, len(a) + 1):
        prev, d[0] = d[0], i
        for j in range(1, len(b) + 1):
            cur = min(d[j] + 1, d[j - 1] + 1, prev + (a[i - 1] != b[j - 1]))
            prev, d[j] = d[j], cur
    return d[len(b)]


def moves(seq):
    n = len(seq)
    for start in range(n):
        for length in range(1, n - start + 1):
            block = seq[start:start + length]
            rest = seq[:start] + seq[start + length:]
            for dest in range(len(rest) + 1):
                if dest == start:
                    continue
                yield rest[:dest] + block + rest[dest:]


def ter_single(cand, ref, depth):
    """min over shift sequences of length <= depth of shifts + edit distance."""
    best = lev(cand, ref)
    frontier = {tuple(cand)}
    seen = set(frontier)
    for d in range(1, depth + 1):
        if d >= best:
            break
        nxt = set()
        for s in frontier:
            for m in moves(list(s)):
                t = tuple(m)
                if t in seen:
                    continue
                seen.add(t)
                nxt.add(t)
                best = min(best, d + lev(list(t), ref))
        frontier = nxt
    return best


def ter(cand, refs):
    depth = 3 if len(cand) <= 6 else 2
    return min(ter_single(cand, r, depth) / len(r) for r in refs)


# --- ROUGE-L -----------------------------------------------------------------

def lcs(a, b):
    t = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(len(a)):
        for j in range(len(b)):
            t[i + 1][j + 1] = t[i][j] + 1 if a[i] == b[j] else max(t[i][j + 1], t[i + 1][j])
    return t[-1][-1]


def rouge(cand, refs):
    best = 0.0
    for r in refs:
        l = lcs(cand, r)
        if l:
            p, q = l / len(cand), l / len(r)
            best = max(best, 2 * p * q / (p + q))
    return best


# --- METEOR ------------------------------------------------------------------

def crossings(links):
    return sum(1 for (a, b), (c, d) in itertools.combinations(links, 2) if (a < c) != (b < d))


def stage_alignments(cand, ref, base, key):
    """The maximum stage matching with the fewest total crossings; ties go to
    the leftmost one (smallest sorted link list)."""
    used_c = {a for a, _ in base}
    used_r = {b for _, b in base}
    edges = [(i, j) for i in range(len(cand)) for j in range(len(ref))
             if i not in used_c and j not in used_r and key(cand[i]) == key(ref[j])]
    best, out = None, []
    for size in range(len(edges), -1, -1):
        for subset in itertools.combinations(edges, size):
            if len({a for a, _ in subset}) < size or len({b for _, b in subset}) < size:
                continue
            links = base + list(subset)
            c = crossings(links)
            if best is None or c < best:
                best, out = c, [links]
            elif c == best:
                out.append(links)
        if out:
            return [min(out, key=sorted)]
    return [base]


def chunks(links):
    links = sorted(links)
    ch = 0
    for k, (a, b) in enumerate(links):
        if k == 0 or not (a == links[k - 1][0] + 1 and b == links[k - 1][1] + 1):
            ch += 1
    return ch


def meteor_single(cand, ref):
    scores = set()
    for exact in stage_alignments(cand, ref, [], lambda w: w):
        for full in stage_alignments(cand, ref, exact, STEMMER.stem):
            m = len(full)
            if m == 0:
                scores.add(0.0)
                continue
            p, r = m / len(cand), m / len(ref)
            fmean = p * r / (0.9 * p + 0.1 * r)
            scores.add(round(fmean * (1 - 0.5 * (chunks(full) / m) ** 3), 12))
    if len(scores) != 1:
        raise ValueError(f"ambiguous alignment for {cand} / {ref}: {scores}")
    return scores.pop()


def meteor(cand, refs):
    return max(meteor_single(cand, r) for r in refs)


# --- LEPOR -------------------------------------------------------------------

def lepor_single(cand, ref):
    c, r = len(cand), len(ref)
    free = list(range(r))
    matched, pd = 0, 0.0
    for i, w in enumerate(cand, start=1):
        options = [(abs(i / c - (j + 1) / r), j) for j in free if ref[j] == w]
        if options:
            d, j = min(options)
            free.remove(j)
            matched += 1
            pd += d
    if not matched:
        return 0.0
    lp = math.exp(1 - r / c) if c < r else math.exp(1 - c / r) if c > r else 1.0
    p, rec = matched / c, matched / r
    return lp * math.exp(-pd / c) * 2 / (1 / rec + 1 / p)


def lepor(cand, refs):
    return max(lepor_single(cand, r) for r in refs)


# --- CIDEr -------------------------------------------------------------------

def cider_all(items):
    n_docs = len(items)
    df = Counter()
    for _, refs in items:
        seen = set()
        for r in refs:
            for n in range(1, 5):
                seen.update(grams(r, n))
        df.update(seen)

    def vec(toks, n):
        return {g: c * math.log(n_docs / max(1, df[g])) for g, c in grams(toks, n).items()}

    def cos(a, b):
        na = math.sqrt(sum(v * v for v in a.values()))
        nb = math.sqrt(sum(v * v for v in b.values()))
        if na == 0 or nb == 0:
            return 0.0
        return sum(v * b.get(g, 0.0) for g, v in a.items()) / (na * nb)

    out = []
    for cand, refs in items:
        total = 0.0
        for n in range(1, 5):
            total += sum(cos(vec(cand, n), vec(r, n)) for r in refs) / len(refs)
        out.append(10 * total / 4)
    return out


# --- stats fixtures ----------------------------------------------------------

def icc_oracle(x):
    x = np.asarray(x, dtype=float)
    n, k = x.shape
    grand = x.mean()
    ss_total = ((x - grand) ** 2).sum()
    ss_rows = k * ((x.mean(axis=1) - grand) ** 2).sum()
    ss_cols = n * ((x.mean(axis=0) - grand) ** 2).sum()
    ss_err = ss_total - ss_rows - ss_cols
    msr, msc = ss_rows / (n - 1), ss_cols / (k - 1)
    mse = ss_err / ((n - 1) * (k - 1))
    msw = (ss_total - ss_rows) / (n * (k - 1))
    return {
        "one_way": {"icc": (msr - msw) / (msr + (k - 1) * msw),
                    "p": float(stats.f.sf(msr / msw, n - 1, n * (k - 1)))},
        "two_way_single": {"icc": (msr - mse) / (msr + (k - 1) * mse + k * (msc - mse) / n),
                           "p": float(stats.f.sf(msr / mse, n - 1, (n - 1) * (k - 1)))},
        "two_way_average": {"icc": (msr - mse) / (msr + (msc - mse) / n),
                            "p": float(stats.f.sf(msr / mse, n - 1, (n - 1) * (k - 1)))},
    }


def williams_oracle(r12, r13, r23, n):
    k = 1 - r12 ** 2 - r13 ** 2 - r23 ** 2 + 2 * r12 * r13 * r23
    rbar = (r12 + r13) / 2
    t = (r12 - r13) * math.sqrt((n - 1) * (1 + r23) /
                                (2 * k * (n - 1) / (n - 3) + rbar ** 2 * (1 - r23) ** 3))
    return {"t": t, "p": float(2 * stats.t.sf(abs(t), n - 3))}


def wilcoxon_exact_oracle(a, b):
    d = [x - y for x, y in zip(a, b) if x != y]
    ranks = stats.rankdata([abs(v) for v in d])
    w_plus = sum(r for r, v in zip(ranks, d) if v > 0)
    w_minus = sum(r for r, v in zip(ranks, d) if v < 0)
    w = min(w_plus, w_minus)
    hits = 0
    for signs in itertools.product([1, -1], repeat=len(d)):
        wp = sum(r for r, s in zip(ranks, signs) if s > 0)
        if min(wp, ranks.sum() - wp) <= w + 1e-9:
            hits += 1
    return {"w_plus": float(w_plus), "w_minus": float(w_minus), "w": float(w),
            "p": hits / 2 ** len(d)}


def main():
    toks = [(c.split(), [r.split() for r in refs]) for c, refs in PAIRS]
    ciders = cider_all(toks)
    pairs = []
    for (c_text, r_texts), (cand, refs), cid in zip(PAIRS, toks, ciders):
        pairs.append({
            "candidate": c_text,
            "references": r_texts,
            "bleu1": bleu(cand, refs, 1), "bleu2": bleu(cand, refs, 2),
            "bleu3": bleu(cand, refs, 3), "bleu4": bleu(cand, refs, 4),
            "nist": nist(cand, refs), "ter": ter(cand, refs), "rouge": rouge(cand, refs),
            "meteor": meteor(cand, refs), "lepor": lepor(cand, refs), "cider": cid,
        })
    stems = ["restaurants", "priced", "moderately", "prices", "hotels", "allowing",
             "serves", "served", "generalizations", "relational", "happy", "sky",
             "conditional", "rational", "hopefulness", "electricity", "adjustable",
             "caresses", "ponies", "agreed", "hopping", "filing", "controll", "roll"]
    icc_matrix = [[1, 2, 1], [4, 5, 4], [2, 2, 3], [6, 6, 5]]
    doc = {
        "pairs": pairs,
        "porter": {w: STEMMER.stem(w) for w in stems},
        "icc": {"matrix": icc_matrix, "models": icc_oracle(icc_matrix)},
        "williams": {"r12": 0.5, "r13": 0.3, "r23": 0.6, "n": 100,
                     **williams_oracle(0.5, 0.3, 0.6, 100)},
        "wilcoxon": {"a": [1, 3, 2, 5], "b": [2, 1, 1, 4],
                     **wilcoxon_exact_oracle([1, 3, 2, 5], [2, 1, 1, 4])},
    }
    OUT.write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
