import sys, time
sys.path.insert(0, "src")

from hochschild.linalg import QQ, GF
from hochschild.algebras import dual_numbers, random_algebra
from hochschild.hopf import group_algebra, cyclic_group, taft, taft_r_matrix
from hochschild.verify import (
    gerstenhaber_suite, retakh_suite, schwede_suite, braided_vanish_suite,
)

t0 = time.time()
rep = gerstenhaber_suite(dual_numbers(QQ), seed=7, trials=50)
print("gerstenhaber dual/QQ:", rep["pass"], rep["identities"], "%.1fs" % (time.time() - t0))
assert rep["pass"], rep["failures"][:3]

t0 = time.time()
a3 = random_algebra(QQ, 3, 11)
rep = gerstenhaber_suite(a3, seed=7, trials=50)
print("gerstenhaber random3/QQ:", rep["pass"], "%.1fs" % (time.time() - t0))
assert rep["pass"], rep["failures"][:3]

t0 = time.time()
rep = gerstenhaber_suite(dual_numbers(GF(5)), seed=3, trials=25)
print("gerstenhaber dual/GF5:", rep["pass"], "%.1fs" % (time.time() - t0))
assert rep["pass"], rep["failures"][:3]

t0 = time.time()
rep = retakh_suite(dual_numbers(GF(2)), seed=5, pairs=20)
print("retakh dual/GF2:", rep, "%.1fs" % (time.time() - t0))
assert rep["pass"] and rep["additivity_pairs"] >= 20

t0 = time.time()
rep = schwede_suite(dual_numbers(GF(2)))
print("schwede dual/GF2:", rep, "%.1fs" % (time.time() - t0))
assert rep["pass"]

t0 = time.time()
b = group_algebra(GF(2), cyclic_group(2))
rep = braided_vanish_suite(b)
print("braided kZ2/GF2:", rep, "%.1fs" % (time.time() - t0))
assert rep["pass"] and rep["pairs"] >= 1

t0 = time.time()
tb = taft(GF(5))
rep = braided_vanish_suite(tb, taft_r_matrix(tb, GF(5).one))
print("braided taft (no degree-1 classes):", rep["pass"], rep["pairs"],
      "%.1fs" % (time.time() - t0))

print("ALL OK")
