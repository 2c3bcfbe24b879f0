"""Hand-built instances, one per result, each failing a named hypothesis."""

from starcore.lab.report import TheoremId
from starcore.matrix import Matrix

D = Matrix.diag
M = Matrix
I2 = Matrix.identity(2)
NIL2 = M([[0, 1], [0, 0]])
ONE = M([[1]])

NEGATIVE_CONTROLS = [
    (TheoremId.L2_1, {"p": D([1, 0]), "a": M([[1, 1], [0, 1]])}, "p a p^pi = 0"),
    (TheoremId.L2_2, {"p": D([1, 0]), "a": M([[1, 1], [0, 1]])}, "p x p^pi = 0"),
    (TheoremId.L2_3, {"p": D([1, 1, 0]), "a": M([[0, 1, 0], [0, 0, 0], [0, 0, 1]])}, "pap in R^core"),
    (TheoremId.L2_4, {"a": NIL2, "b": I2}, "a is EP"),
    (TheoremId.T3_1, {"a": D([1, 0]), "b": NIL2}, "b is EP"),
    (TheoremId.C3_2, {"a": D([1, 0]), "b": M([[1, 1], [1, 1]])}, "a a^# b = b b^# a"),
    (TheoremId.C3_3, {"a": D([1, 0]), "b": M([[1, 1], [1, 1]])}, "ab = ba"),
    (TheoremId.L4_1, {"a": ONE, "c": M([[0], [1]]), "d": D([1, 0])}, "D^pi C = 0"),
    (TheoremId.L4_2, {"a": D([1, 0]), "b": M([[1, 1], [1, 1]]), "lambda": 1}, "AB = lambda BA"),
    (TheoremId.T4_3, {"a": ONE, "b": ONE, "c": ONE, "d": ONE, "lambda": 2}, "AB = lambda BD"),
    (TheoremId.C4_4, {"a": ONE, "b": M([[0]]), "c": ONE, "d": ONE, "lambda": 1}, "BC is invertible"),
]
