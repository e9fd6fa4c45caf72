"""Tour of the Pythagorean fuzzy number algebra.

Run from the repository root after `pip install -e .`:

    python demos/pfn_algebra.py
"""

from phisoft import (
    PFN,
    OrderKind,
    accuracy,
    add_p,
    compare,
    complement,
    expectation_score,
    indeterminacy,
    join,
    meet,
    mul_p,
    power,
    scalar_mul,
    score,
)

# ---------------------------------------------------------------------------
# Values: a PFN holds a membership and a non-membership degree whose squares
# sum to at most 1.  That quadratic budget is what makes pairs like
# (0.7, 0.7) expressible, which an intuitionistic pair (m + n <= 1) is not.

x = PFN(0.7, 0.7)
print("x =", x, " indeterminacy:", round(indeterminacy(x), 6))

try:
    PFN(0.9, 0.9)
except Exception as exc:
    print("rejected (0.9, 0.9):", exc)

# ---------------------------------------------------------------------------
# Lattice structure and the basic unary operation.

a, b = PFN(0.5, 0.4), PFN(0.7, 0.2)
print("\ncomplement(a) =", complement(a))
print("join(a, b)    =", join(a, b))
print("meet(a, b)    =", meet(a, b))

# ---------------------------------------------------------------------------
# The Pythagorean sum/product and their scalar forms.  (0, 1) is the
# additive identity, (1, 0) the multiplicative one; doubling equals adding
# a value to itself.

print("\nadd_p(a, b) =", add_p(a, b))
print("mul_p(a, b) =", mul_p(a, b))
print("2a          =", scalar_mul(2.0, a))
print("a + a       =", add_p(a, a))
print("a^2         =", power(a, 2.0))
print("a * a       =", mul_p(a, a))

# ---------------------------------------------------------------------------
# Score-type functions.  The classic score cannot separate some visibly
# different values; accuracy breaks those ties, and the expectation score
# rescales the score onto [0, 1].

n, m = PFN(0.481, 0.402), PFN(0.527, 0.456)
print("\nscore(n)  =", round(score(n), 6), " score(m) =", round(score(m), 6))
print("accuracy(n) =", round(accuracy(n), 6), " accuracy(m) =", round(accuracy(m), 6))
print("expectation_score(n) =", round(expectation_score(n), 6))

# ---------------------------------------------------------------------------
# Orders.  The lattice order is partial; the three lexicographic orders are
# total and disagree with each other by design.

u, v = PFN(0.5, 0.2), PFN(0.2, 0.1)
print("\nlattice:", compare(u, v, OrderKind.LATTICE).name)         # INCOMPARABLE
print("score/accuracy:", compare(n, m, OrderKind.SCORE_ACCURACY).name)
print("membership-first:", compare(PFN(0.5, 0.86), PFN(0.4, 0.1),
                                   OrderKind.MEMBERSHIP_THEN_ES).name)
print("expectation-first:", compare(PFN(0.5, 0.86), PFN(0.4, 0.1),
                                    OrderKind.ES_THEN_MEMBERSHIP).name)
