"""POS n-gram diversity: unique tag windows / total tag windows.

Repetitive syntax reuses the same tag sequences over and over, pulling the
ratio toward 0; varied syntax pushes it toward 1. Windows never cross
sentence boundaries and use the raw tagger tags, not canonical categories.
"""

import kostylo as k


def doc_from_tags(doc_id, tag_sentences):
    record = {
        "id": doc_id,
        "genre": "essay",
        "author": "human",
        "label": 0,
        "sentences": [
            [{"surface": f"w{i}", "tag": t, "eojeol": i} for i, t in enumerate(tags)]
            for tags in tag_sentences
        ],
    }
    return k.parse_document(record)


repetitive = doc_from_tags("repetitive", [
    ["NNG", "JKS", "VV", "EF"],
    ["NNG", "JKS", "VV", "EF"],
    ["NNG", "JKS", "VV", "EF"],
])
varied = doc_from_tags("varied", [
    ["NNG", "JKS", "VV", "EF"],
    ["MAG", "VA", "ETM", "NNB"],
    ["NP", "JX", "NNG", "XSV"],
])

print("n   repetitive   varied")
for n in range(1, 6):
    r = k.pos_ngram_diversity(repetitive, n)
    v = k.pos_ngram_diversity(varied, n)
    print(f"{n}   {r:10.4f}   {v:.4f}")

# The full vector is what the pos_ngram feature set feeds the classifier.
print("\nfeature vector (varied):", k.pos_ngram_feature_vector(varied).diversity)

# Degenerate case: windows longer than every sentence -> 0 by definition.
short = doc_from_tags("short", [["NNG", "JKS"]])
print("bigram diversity of a 2-token text:", k.pos_ngram_diversity(short, 2))
print("5-gram diversity of a 2-token text:", k.pos_ngram_diversity(short, 5))
