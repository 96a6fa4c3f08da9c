import sys
import time

sys.path.insert(0, "src")

from hochschild.linalg import Field
from hochschild.algebras import dual_numbers
from hochschild.cochains import Cochain, HochschildRing, bracket, cup, sq
from hochschild.extensions import cocycles_cohomologous
from hochschild.hopf import taft

t0 = time.time()
gf2 = Field("prime-field", 2)
a = dual_numbers(gf2)
ring2 = HochschildRing(a, 7)
print("kZ2 top-7 ring: dims %s  %.1fs" % (ring2.dims(), time.time() - t0))

t0 = time.time()
gf5 = Field("prime-field", 5)
tb = taft(gf5)
ta = tb.algebra
ring5 = HochschildRing(ta, 3)
print("taft top-3 ring: dims %s  %.1fs" % (ring5.dims(), time.time() - t0))

# Degree-4 equality: is a single solve against d: C^3 -> C^4 affordable?
b2 = ring5.basis_cochains(2)
if b2:
    c = b2[0]
    t0 = time.time()
    s = sq(c)             # degree 3
    lhs = bracket(c, s)   # degree 4
    br = bracket(c, c)    # degree 3
    rhs = bracket(br, c)  # degree 4
    print("cochain ops for G9 (2,2): %.1fs" % (time.time() - t0))
    t0 = time.time()
    bar = ring5.resolution
    reg = bar.target
    same = cocycles_cohomologous(bar, reg, lhs.mat, rhs.mat, 4)
    print("degree-4 solve: equal=%s  %.1fs" % (same, time.time() - t0))
