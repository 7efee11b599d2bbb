"""Zipf and Heaps curves plus POS distributions per author group.

These descriptive statistics back the stylometric features: if two groups
already differ in word-frequency shape or tag mix, the classifier has
something to latch on to. Words here are eojeols (space-delimited units),
rebuilt by concatenating morpheme surfaces within each eojeol index.
"""

import kostylo as k

tm = k.synthetic_tagmap()
human, machine = k.contrast_profiles()
corpus = k.generate_corpus(human, machine, 30)

for author in corpus.authors():
    group = corpus.filter(author=author)
    zipf = k.zipf_curve(group)
    heaps = k.heaps_curve(group)
    total_tokens = heaps.points[-1][0]
    vocab = heaps.points[-1][1]
    print(f"{author}: {total_tokens} eojeol tokens, {vocab} distinct")
    print("  top 5 by frequency:",
          [(word, freq) for (rank, freq), word in zip(zipf.points, zipf.words)][:5])
    # Heaps: vocabulary growth flattens as the text reuses old words.
    quarter = total_tokens // 4
    marks = [heaps.points[i][1] for i in (quarter, 2 * quarter, 3 * quarter, -1)]
    print("  vocab at 25/50/75/100% of the stream:", marks)

print("\ncanonical POS distribution (top categories):")
for author in corpus.authors():
    shares = k.pos_distribution(corpus.filter(author=author), tm)
    top = sorted(shares.items(), key=lambda kv: -kv[1])[:4]
    print(f"  {author}:", ", ".join(f"{c.value}={v:.3f}" for c, v in top))
