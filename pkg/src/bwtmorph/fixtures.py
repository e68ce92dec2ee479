"""Committed reference outputs that `reproduce` regenerates and checks."""

# Length-5 run-count table for the period-doubling morphism: one row per
# non-constant necklace, columns w, bwt(w), r(w), image, bwt(image), r(image).
TABLE1 = (
    ("aaaab", "baaaa", 2, "ababababaa", "babbbaaaaa", 4),
    ("aaabb", "baaba", 4, "abababaaaa", "baaabbaaaa", 4),
    ("aabab", "bbaaa", 2, "ababaaabaa", "bbaabaaaaa", 4),
    ("aabbb", "babba", 4, "ababaaaaaa", "baaaaabaaa", 4),
    ("ababb", "bbbaa", 2, "abaaabaaaa", "babaaaaaaa", 4),
    ("abbbb", "bbbba", 2, "abaaaaaaaa", "baaaaaaaaa", 2),
)

TABLE1_SUMMARY = "AS_pi(5)=2 MS_pi(5)=2"

# Circular-factorization counts for the recognizability figures:
# (morphism text, word, expected count).
FIGURE_FACTORIZATIONS = (
    ("a=baa,b=abb", "baaabbabbbaa", 1),
    ("a=baa,b=aba", "baabaabaabaa", 2),
    ("a=ab,b=ba", "abababababab", 2),
)
