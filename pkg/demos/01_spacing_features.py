"""Word-spacing ratios on hand-built tagged sentences.

Korean orthography requires a space before bound nouns and (normatively)
before auxiliary predicates, but human writers drop those spaces all the
time. The spacing feature set measures how often the space is actually
written. This demo builds a few documents by hand and prints the ratios.
"""

import kostylo as k

tm = k.load_preset("sejong")


def doc(doc_id, sentences):
    record = {
        "id": doc_id,
        "genre": "essay",
        "author": "human",
        "label": 0,
        "sentences": [
            [
                {"surface": s, "tag": t, "eojeol": e}
                for s, t, e in sent
            ]
            for sent in sentences
        ],
    }
    return k.parse_document(record)


# "할 수 있다" with the bound noun 수 spaced (eojeol changes 0 -> 1),
# then "할수 있다" with the space dropped (수 stays in eojeol 0).
spaced = doc("spaced", [[
    ("하", "VV", 0), ("ㄹ", "ETM", 0),
    ("수", "NNB", 1),
    ("있", "VV", 2), ("다", "EF", 2),
]])
fused = doc("fused", [[
    ("하", "VV", 0), ("ㄹ", "ETM", 0),
    ("수", "NNB", 0),
    ("있", "VV", 1), ("다", "EF", 1),
]])

for d in (spaced, fused):
    vec = k.spacing_feature_vector(d, tm)
    print(f"{d.id:>7}: bn_space_ratio={vec.bn_space_ratio}")

# MMN + BN pair: "두 배" (two times) with and without the space.
pair = doc("pair", [[
    ("두", "MMN", 0), ("배", "NNB", 1),
    ("두", "MMN", 2), ("배", "NNB", 2),
]])
print("mmn_bn_space_ratio (one spaced of two):",
      k.mmn_bn_space_ratio(pair, tm))

# The -아/-어 + 지 passive construction never counts: 지 here is not the
# auxiliary the feature is after, so an exclusion rule removes the pair.
excluded = doc("excluded", [[
    ("만들", "VV", 0), ("어", "EC", 0),
    ("지", "VX", 0), ("ㄴ다", "EF", 0),
    ("잡", "VV", 1), ("아", "EC", 1),
    ("보", "VX", 2), ("았다", "EP", 2),
]])
vec = k.spacing_feature_vector(excluded, tm)
print("vx_space_ratio with 어+지 excluded:", vec.vx_space_ratio)
print("unspaced_vx_diversity:", k.unspaced_vx_diversity(excluded, tm))
