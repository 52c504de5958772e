"""How stable is the recommendation across everything the judgments allow?

Two quarry criteria admit several precise tables (7 for SERVI, 8 for
ENVIR), hence 56 complete evaluation combinations.  Evaluating all of them
gives frequencies instead of a single verdict: the rank acceptability index
b_k(a) and the pairwise winning index p(a_i, a_j).  Dropping the whole-card
assumption makes the family continuous; hit-and-run sampling then plays the
role of enumeration.
"""

import numpy as np

from cardtable.quarry import quarry_project


def show(result, alternatives):
    print(f"  combinations: {result.combination_count}")
    print("  rank acceptability b_k(a) [%]:")
    print("        " + "  ".join(f"b{k}".rjust(6) for k in range(1, 6)))
    for alt, row in zip(alternatives, result.b):
        print(f"    {alt}  " + "  ".join(f"{x:6.2f}" for x in row))
    print("  pairwise winning p(row beats column) [%]:")
    print("        " + "  ".join(a.rjust(6) for a in alternatives))
    for alt, row in zip(alternatives, result.p):
        print(f"    {alt}  " + "  ".join(f"{x:6.2f}" for x in row))


project = quarry_project()
alternatives = [a.id for a in project.alternatives]

print("== enumerating the 7 x 8 integer table combinations ==")
show(project.smaa(mode="enum"), alternatives)

print("\n== continuous cards for SERVI: 10,000 hit-and-run samples x 8 ENVIR tables ==")
result = project.smaa(mode="sample", n_samples=10_000, seed=20_240, sample_criteria=("g3",))
show(result, alternatives)

b1 = {a: result.b[i, 0] for i, a in enumerate(alternatives)}
front = sorted((a for a in b1 if b1[a] > 0), key=b1.get, reverse=True)
print(f"\nonly {' and '.join(front)} ever reach the first rank "
      f"({', '.join(f'{a}: {b1[a]:.1f}%' for a in front)}); "
      "the worst place is certain, which is exactly the kind of statement "
      "a single deterministic ranking cannot make.")
print("(identical seeds reproduce identical tables:",
      np.array_equal(result.b, project.smaa(mode='sample', n_samples=10_000,
                                            seed=20_240, sample_criteria=('g3',)).b), ")")
