"""
Enumerating split classes over CP^m
===================================

All bounded pairs ``(c, lines)`` for which the lines split off some bundle
with total class ``c``.
"""

from linesplit import enumerate_split_chern

found = enumerate_split_chern(m=3, r=1, coeff_bound=6, line_bound=6)
print(len(found), "classes with a line split off")
for s in found:
    if s.chern == (4, 6, 4):
        print("tangent class:", s.chern, "line", s.lines, "quotient", s.certificate.quotient)

# Every entry carries a certificate that can be checked independently
assert all(s.verify() for s in found)

# Output is the same whatever the number of worker processes
assert enumerate_split_chern(5, 2, 2, 2, workers=2) == enumerate_split_chern(5, 2, 2, 2)
