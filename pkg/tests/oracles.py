"""Independent brute-force reference implementations used to cross-check the library.

Everything here works on plain Python structures, never on kostylo's own types:

    doc      = [sentence, ...]
    sentence = [(surface, tag, eojeol_index), ...]
    mapping  = {raw_tag: category_string}          (default category "OTHER")
    rules    = [{"prev_category": ..., "prev_surface_suffixes": [...],
                 "curr_category": ..., "curr_surfaces": [...]}, ...]

The point is independence: these functions recount from first principles with
flat loops, so agreement with the library is evidence, not tautology.
"""

import math

SYMBOL_CATS = ("COMMA", "SYMBOL")


def cat(mapping, tag):
    return mapping.get(tag, "OTHER")


def spaced(sent, i):
    """True iff token i starts a new eojeol (i > 0)."""
    return sent[i][2] > sent[i - 1][2]


def excluded(rules, mapping, prev, curr):
    for r in rules:
        if cat(mapping, prev[1]) != r["prev_category"]:
            continue
        if cat(mapping, curr[1]) != r["curr_category"]:
            continue
        if curr[0] not in r["curr_surfaces"]:
            continue
        if any(prev[0].endswith(s) for s in r["prev_surface_suffixes"]):
            return True
    return False


# ---------------------------------------------------------------- spacing

def mmn_bn_space_ratio(doc, mapping):
    total = 0
    with_space = 0
    for sent in doc:
        for i in range(1, len(sent)):
            if cat(mapping, sent[i - 1][1]) == "MMN" and cat(mapping, sent[i][1]) == "BN":
                total += 1
                if spaced(sent, i):
                    with_space += 1
    return with_space / total if total else 0.0


def bn_space_ratio(doc, mapping, trivial_surfaces=()):
    total = 0
    with_space = 0
    for sent in doc:
        for i in range(1, len(sent)):
            if cat(mapping, sent[i][1]) == "BN" and sent[i][0] not in trivial_surfaces:
                total += 1
                if spaced(sent, i):
                    with_space += 1
    return with_space / total if total else 0.0


def vx_space_ratio(doc, mapping, rules=()):
    total = 0
    with_space = 0
    for sent in doc:
        for i in range(1, len(sent)):
            if cat(mapping, sent[i][1]) != "VX":
                continue
            if excluded(rules, mapping, sent[i - 1], sent[i]):
                continue
            total += 1
            if spaced(sent, i):
                with_space += 1
    return with_space / total if total else 0.0


def eojeol_signatures(doc):
    sigs = []
    for sent in doc:
        current = []
        current_idx = sent[0][2]
        for surface, tag, idx in sent:
            if idx != current_idx:
                sigs.append(tuple(current))
                current = []
                current_idx = idx
            current.append(tag)
        sigs.append(tuple(current))
    return sigs


def eojeol_pos_diversity(doc):
    sigs = eojeol_signatures(doc)
    return len(set(sigs)) / len(sigs)


def unspaced_vx_diversity(doc, mapping, rules=()):
    surfaces = []
    for sent in doc:
        for i in range(1, len(sent)):
            if cat(mapping, sent[i][1]) != "VX":
                continue
            if spaced(sent, i):
                continue
            if excluded(rules, mapping, sent[i - 1], sent[i]):
                continue
            surfaces.append(sent[i][0])
    return len(set(surfaces)) / len(surfaces) if surfaces else 0.0


# ---------------------------------------------------------------- POS n-grams

def pos_ngram_diversity(doc, n):
    windows = []
    for sent in doc:
        tags = [t[1] for t in sent]
        for i in range(len(tags) - n + 1):
            windows.append(tuple(tags[i:i + n]))
    return len(set(windows)) / len(windows) if windows else 0.0


# ---------------------------------------------------------------- commas

def is_symbol(mapping, tag):
    return cat(mapping, tag) in SYMBOL_CATS


def comma_inclusion_rate(doc, mapping):
    with_comma = sum(
        1 for sent in doc if any(cat(mapping, t[1]) == "COMMA" for t in sent)
    )
    return with_comma / len(doc)


def comma_usage_rate(sent, mapping):
    commas = sum(1 for t in sent if cat(mapping, t[1]) == "COMMA")
    morphemes = sum(1 for t in sent if not is_symbol(mapping, t[1]))
    return commas / morphemes if morphemes else 0.0


def comma_relative_positions(sent, mapping):
    morphemes = sum(1 for t in sent if not is_symbol(mapping, t[1]))
    positions = []
    before = 0
    for t in sent:
        if cat(mapping, t[1]) == "COMMA":
            positions.append(before / morphemes if morphemes else 0.0)
        elif not is_symbol(mapping, t[1]):
            before += 1
    if not positions:
        raise ValueError("sentence has no comma")
    return sum(positions) / len(positions)


def comma_segment_lengths(sent, mapping):
    segments = []
    current = 0
    saw_comma = False
    for t in sent:
        c = cat(mapping, t[1])
        if c == "COMMA":
            saw_comma = True
            segments.append(current)
            current = 0
        elif c not in SYMBOL_CATS:
            current += 1
    segments.append(current)
    if not saw_comma:
        return float(segments[0])
    kept = [s for s in segments if s > 0]
    return sum(kept) / len(kept) if kept else 0.0


def comma_pos_pairs(doc, mapping):
    pairs = []
    for sent in doc:
        for i, t in enumerate(sent):
            if cat(mapping, t[1]) != "COMMA":
                continue
            if 0 < i < len(sent) - 1:
                pairs.append((sent[i - 1][1], sent[i + 1][1]))
    return pairs


def comma_pos_pair_diversity(doc, mapping):
    pairs = comma_pos_pairs(doc, mapping)
    return len(set(pairs)) / len(pairs) if pairs else 0.0


def comma_feature_vector(doc, mapping):
    """(inclusion, usage, rel_position, segment_length, pair_diversity)."""
    usage = [comma_usage_rate(s, mapping) for s in doc]
    seglen = [comma_segment_lengths(s, mapping) for s in doc]
    rel = [
        comma_relative_positions(s, mapping)
        for s in doc
        if any(cat(mapping, t[1]) == "COMMA" for t in s)
    ]
    return (
        comma_inclusion_rate(doc, mapping),
        sum(usage) / len(usage),
        sum(rel) / len(rel) if rel else 0.0,
        sum(seglen) / len(seglen),
        comma_pos_pair_diversity(doc, mapping),
    )


# ---------------------------------------------------------------- analysis

WORD_TYPE_FOLD = {"BN": "NOMINAL", "MMN": "MODIFIER", "VX": "PREDICATE", "COMMA": "SYMBOL"}


def pos_before_comma_ratios(docs, mapping):
    totals = {}
    before = {}
    for doc in docs:
        for sent in doc:
            for i, t in enumerate(sent):
                totals[t[1]] = totals.get(t[1], 0) + 1
                if i + 1 < len(sent) and cat(mapping, sent[i + 1][1]) == "COMMA":
                    before[t[1]] = before.get(t[1], 0) + 1
    return {tag: before.get(tag, 0) / n for tag, n in totals.items()}


def comma_pos_pair_distribution(docs, mapping):
    counts = {}
    for doc in docs:
        for pair in comma_pos_pairs(doc, mapping):
            counts[pair] = counts.get(pair, 0) + 1
    total = sum(counts.values())
    if total == 0:
        raise ValueError("no comma pairs in corpus")
    return {pair: n / total for pair, n in counts.items()}


def pos_distribution(docs, mapping):
    counts = {}
    total = 0
    for doc in docs:
        for sent in doc:
            for t in sent:
                c = cat(mapping, t[1])
                c = WORD_TYPE_FOLD.get(c, c)
                counts[c] = counts.get(c, 0) + 1
                total += 1
    return {c: n / total for c, n in counts.items()}


def eojeol_words(docs):
    words = []
    for doc in docs:
        for sent in doc:
            current = []
            current_idx = sent[0][2]
            for surface, tag, idx in sent:
                if idx != current_idx:
                    words.append("".join(current))
                    current = []
                    current_idx = idx
                current.append(surface)
            words.append("".join(current))
    return words


def zipf_points(docs):
    freqs = {}
    for w in eojeol_words(docs):
        freqs[w] = freqs.get(w, 0) + 1
    ordered = sorted(freqs.items(), key=lambda kv: (-kv[1], kv[0]))
    return [(rank, f) for rank, (w, f) in enumerate(ordered, start=1)]


def heaps_points(docs):
    seen = set()
    points = []
    for i, w in enumerate(eojeol_words(docs), start=1):
        seen.add(w)
        points.append((i, len(seen)))
    return points


# ---------------------------------------------------------------- AUC

def auc_pairwise(scores, labels):
    """O(P*N) comparison count: wins + half ties over all pos/neg pairs."""
    pos = [s for s, y in zip(scores, labels) if y == 1]
    neg = [s for s, y in zip(scores, labels) if y == 0]
    total = 0.0
    for p in pos:
        for q in neg:
            if p > q:
                total += 1.0
            elif p == q:
                total += 0.5
    return total / (len(pos) * len(neg))


# ---------------------------------------------------------------- classifier

def logloss(X, y, w, b, l2_lambda):
    """Mean cross-entropy + (lambda / 2N) * ||w||^2, plain loops, stable."""
    n = len(X)
    total = 0.0
    for row, yi in zip(X, y):
        z = b + sum(xj * wj for xj, wj in zip(row, w))
        # log(1 + exp(z)) - y*z, computed without overflow
        total += max(z, 0.0) - yi * z + math.log1p(math.exp(-abs(z)))
    penalty = l2_lambda / (2.0 * n) * sum(wj * wj for wj in w)
    return total / n + penalty


def numeric_gradient(X, y, w, b, l2_lambda, h=1e-5):
    """Central finite differences of logloss in (w, b)."""
    gw = []
    for j in range(len(w)):
        wp = list(w)
        wm = list(w)
        wp[j] += h
        wm[j] -= h
        gw.append((logloss(X, y, wp, b, l2_lambda) - logloss(X, y, wm, b, l2_lambda)) / (2 * h))
    gb = (logloss(X, y, w, b + h, l2_lambda) - logloss(X, y, w, b - h, l2_lambda)) / (2 * h)
    return gw, gb


def mean_std_columns(X, floor=1e-8):
    """Two-pass population mean / std per column."""
    n = len(X)
    d = len(X[0])
    means = [sum(row[j] for row in X) / n for j in range(d)]
    stds = []
    for j in range(d):
        var = sum((row[j] - means[j]) ** 2 for row in X) / n
        stds.append(max(math.sqrt(var), floor))
    return means, stds


# ---------------------------------------------------------------- misc

def token_count(doc):
    return sum(len(sent) for sent in doc)
