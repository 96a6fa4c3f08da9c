import subprocess
import sys

sys.path.insert(0, "src")

from hochschild.linalg import Field
from hochschild.algebras import dual_numbers
from hochschild.hopf import Bialgebra, taft, taft_r_matrix
from hochschild.io import parse_algebra_file, serialize_algebra

gf2 = Field("prime-field", 2)
gf5 = Field("prime-field", 5)

a = dual_numbers(gf2)
with open("fixtures/dual2.json", "w") as fh:
    fh.write(serialize_algebra(a))

tb = taft(gf5)
tb_with_r = Bialgebra(
    tb.algebra, tb.comul, tb.counit,
    antipode=tb.antipode, r=taft_r_matrix(tb, gf5.of(1)),
)
with open("fixtures/taft4.json", "w") as fh:
    fh.write(serialize_algebra(tb_with_r))

# parse -> serialize -> parse identity
for path in ("fixtures/dual2.json", "fixtures/taft4.json"):
    text = open(path).read()
    v = parse_algebra_file(text)
    assert serialize_algebra(v) == text, path
print("fixtures written, roundtrip exact")


def run(args):
    p = subprocess.run(["hh"] + args, capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


rc, out, err = run(["dims", "fixtures/dual2.json", "--max", "4"])
print("dims:", rc, out.strip())
assert rc == 0 and out == '{"dims":[2,2,2,2,2]}\n', (rc, out, err)

rc, out, err = run(["hopf", "check-r", "fixtures/taft4.json", "--alpha", "1"])
print("check-r alpha=1:", rc, out.strip()[:120])
assert rc == 0 and '"pass":true' in out, (rc, out, err)

rc, out, err = run(["hopf", "check-r", "fixtures/taft4.json"])
print("check-r file r:", rc, out.strip()[:80])
assert rc == 0, (rc, out, err)

rc, out, err = run(["verify", "fixtures/dual2.json", "--suite", "gerstenhaber",
                    "--seed", "7", "--trials", "50"])
print("verify gerstenhaber:", rc, out.strip()[:120])
assert rc == 0 and '"pass":true' in out, (rc, out, err)
rc2, out2, _ = run(["verify", "fixtures/dual2.json", "--suite", "gerstenhaber",
                    "--seed", "7", "--trials", "50"])
assert out2 == out, "verify output not deterministic"

rc, out, err = run(["check", "fixtures/dual2.json"])
print("check algebra:", rc, out.strip())
assert rc == 0

rc, out, err = run(["check", "fixtures/taft4.json"])
print("check bialgebra:", rc, out.strip()[:100])
assert rc == 0

rc, out, err = run(["cup", "fixtures/dual2.json", "--deg", "1", "1",
                    "--class", "1", "1"])
print("cup:", rc, out.strip())
assert rc == 0

rc, out, err = run(["bracket", "fixtures/dual2.json", "--deg", "1", "1",
                    "--class", "1", "1"])
print("bracket:", rc, out.strip())
assert rc == 0

rc, out, err = run(["sq", "fixtures/dual2.json", "--deg", "1", "--class", "1"])
print("sq:", rc, out.strip())
assert rc == 0

rc, out, err = run(["loop-bracket", "fixtures/dual2.json", "--deg", "1", "1",
                    "--class", "1", "1"])
print("loop-bracket:", rc, out.strip())
assert rc == 0

rcb, outb, errb = run(["bracket", "fixtures/dual2.json", "--deg", "1", "1",
                       "--class", "1", "1"])
print("  bar bracket same degree:", outb.strip())

rc, out, err = run(["ext", "convert", "fixtures/dual2.json", "--deg", "2",
                    "--class", "0"])
print("ext convert:", rc, out.strip())
assert rc == 0

rc, out, err = run(["ext", "compare", "fixtures/dual2.json", "--deg", "1",
                    "--class", "0", "1"])
print("ext compare distinct:", rc, out.strip())
assert rc == 1 and '"equal":false' in out

rc, out, err = run(["ext", "compare", "fixtures/dual2.json", "--deg", "1",
                    "--class", "1", "1"])
print("ext compare same:", rc, out.strip())
assert rc == 0 and '"equal":true' in out

rc, out, err = run(["hopf", "embed", "fixtures/taft4.json", "--n", "2"])
print("hopf embed n=2:", rc, out.strip())
assert rc == 0 and '"nonzero":[true]' in out

rc, out, err = run(["hopf", "vanish", "fixtures/taft4.json", "--max", "4"])
print("hopf vanish:", rc, out.strip())
assert rc == 0 and '"all_vanish":true' in out

rc, out, err = run(["morita", "fixtures/dual2.json", "--n", "2", "--max", "2"])
print("morita:", rc, out.strip())
assert rc == 0 and '"equal":true' in out

rc, out, err = run(["verify", "fixtures/dual2.json", "--suite", "retakh",
                    "--seed", "5", "--trials", "8"])
print("verify retakh:", rc, out.strip()[:120])
assert rc == 0

rc, out, err = run(["verify", "fixtures/dual2.json", "--suite", "schwede"])
print("verify schwede:", rc, out.strip()[:140])
assert rc == 0

rc, out, err = run(["verify", "fixtures/taft4.json", "--suite", "braided-vanish"])
print("verify braided:", rc, out.strip()[:140])
assert rc == 0

rc, out, err = run(["roundtrip", "fixtures/taft4.json"])
assert rc == 0 and out == open("fixtures/taft4.json").read()
print("roundtrip byte-exact")

# usage errors exit 2
rc, out, err = run(["dims", "fixtures/nope.json"])
assert rc == 2, rc
rc, out, err = run(["cup", "fixtures/dual2.json", "--deg", "1", "--class", "0"])
assert rc == 2, rc
rc, out, err = run(["frobnicate"])
assert rc == 2, rc
rc, out, err = run(["hopf", "check-r", "fixtures/dual2.json", "--alpha", "1"])
assert rc == 2, rc
print("usage errors -> 2")

print("ALL OK")
