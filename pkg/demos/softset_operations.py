"""Building soft sets and combining them.

Two physicians describe the same four patients against overlapping symptom
sets; the combination operators merge their tables.  Run:

    python demos/softset_operations.py
"""

from phisoft import (
    build,
    equals,
    extended_intersection,
    extended_union,
    is_subset,
    null_set,
    restricted_union,
    whole_set,
)

PATIENTS = ("p1", "p2", "p3", "p4")

# Physician X scores symptoms s1/s3/s5/s6; the importance pair after each
# name is that physician's weight on the symptom.
expert_x = build(
    PATIENTS,
    [("s1", (0.5, 0.4)), ("s3", (0.7, 0.2)), ("s5", (0.3, 0.6)), ("s6", (0.6, 0.3))],
    {
        ("p1", "s1"): (0.7, 0.7), ("p1", "s3"): (0.6, 0.6), ("p1", "s5"): (0.8, 0.6), ("p1", "s6"): (0.4, 0.7),
        ("p2", "s1"): (0.5, 0.6), ("p2", "s3"): (0.4, 0.5), ("p2", "s5"): (0.8, 0.3), ("p2", "s6"): (0.5, 0.6),
        ("p3", "s1"): (0.5, 0.4), ("p3", "s3"): (0.9, 0.2), ("p3", "s5"): (0.6, 0.4), ("p3", "s6"): (0.6, 0.5),
        ("p4", "s1"): (0.7, 0.5), ("p4", "s3"): (0.6, 0.2), ("p4", "s5"): (0.5, 0.4), ("p4", "s6"): (0.8, 0.4),
    },
)

# Physician Y covers s2/s3/s5/s6: s1 is theirs alone to X, s2 new.
expert_y = build(
    PATIENTS,
    [("s2", (0.1, 0.6)), ("s3", (0.7, 0.2)), ("s5", (0.4, 0.5)), ("s6", (0.6, 0.3))],
    {
        ("p1", "s2"): (0.6, 0.6), ("p1", "s3"): (0.4, 0.2), ("p1", "s5"): (0.6, 0.4), ("p1", "s6"): (0.1, 0.5),
        ("p2", "s2"): (0.1, 0.7), ("p2", "s3"): (0.3, 0.5), ("p2", "s5"): (0.5, 0.1), ("p2", "s6"): (0.2, 0.5),
        ("p3", "s2"): (0.3, 0.4), ("p3", "s3"): (0.7, 0.4), ("p3", "s5"): (0.2, 0.5), ("p3", "s6"): (0.4, 0.2),
        ("p4", "s2"): (0.5, 0.4), ("p4", "s3"): (0.5, 0.2), ("p4", "s5"): (0.6, 0.4), ("p4", "s6"): (0.5, 0.5),
    },
)


def show(softset, title):
    print(f"\n{title}")
    names = softset.parameter_names
    print("     " + "  ".join(f"{n:^10}" for n in names))
    for alt in softset.universe:
        row = "  ".join(f"({c.m:.1f}, {c.n:.1f})" for c in softset.row(alt))
        print(f"{alt:<4} {row}")
    imps = "  ".join(f"({p.importance.m:.1f}, {p.importance.n:.1f})" for p in softset.parameters)
    print(f"f    {imps}")


show(expert_x, "expert X")
show(expert_y, "expert Y")

# ---------------------------------------------------------------------------
# Extended operators keep every symptom either expert mentions; shared
# symptoms take the componentwise optimistic (union) or pessimistic
# (intersection) reading.  Restricted operators keep only shared symptoms.

show(extended_union(expert_x, expert_y), "extended union")
show(extended_intersection(expert_x, expert_y), "extended intersection")
show(restricted_union(expert_x, expert_y), "restricted union (shared symptoms only)")

# ---------------------------------------------------------------------------
# Subset and the absorbing elements.

print("\nX subset of X:", is_subset(expert_x, expert_x))
print("X subset of Y:", is_subset(expert_x, expert_y), "(different symptom sets)")

names = expert_x.parameter_names
empty = null_set(PATIENTS, names)
full = whole_set(PATIENTS, names)
print("X union null equals X:", equals(extended_union(expert_x, empty), expert_x))
print("X intersect whole equals X:", equals(extended_intersection(expert_x, full), expert_x))
print("X union whole equals whole:", equals(extended_union(expert_x, full), full))
