#!/usr/bin/env python3
"""Smoke test for the trisphere Python extension.

Builds nothing itself: it locates the compiled cdylib under target/ (built
with `cargo build --release -p trisphere-py`), stages it under the name
Python expects, imports it, and exercises the main surface end to end.
"""

import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def stage_module() -> pathlib.Path:
    candidates = [
        ROOT / "target" / "release" / "libtrisphere_py.so",
        ROOT / "target" / "debug" / "libtrisphere_py.so",
        ROOT / "target" / "release" / "libtrisphere_py.dylib",
        ROOT / "target" / "debug" / "libtrisphere_py.dylib",
    ]
    for built in candidates:
        if built.exists():
            stage = pathlib.Path(tempfile.mkdtemp(prefix="trisphere-py-"))
            shutil.copy2(built, stage / "trisphere.so")
            return stage
    sys.exit(
        "extension not found; run `cargo build --release -p trisphere-py` first"
    )


sys.path.insert(0, str(stage_module()))
import trisphere  # noqa: E402


def check(label, condition):
    status = "ok" if condition else "FAIL"
    print(f"{status:4} {label}")
    if not condition:
        sys.exit(1)


# exact field arithmetic
i = trisphere.CycloNum.i()
check("i * i == -1", i * i == trisphere.CycloNum.integer(-1))
s2 = trisphere.CycloNum.sqrt2()
check("sqrt2^2 == 2", s2 * s2 == trisphere.CycloNum.integer(2))
half = trisphere.CycloNum.rational(1, 2)
check("inv(2) == 1/2", trisphere.CycloNum.integer(2).inv() == half)
check("conj(i) == -i", i.conj() == -i)
re, im = trisphere.CycloNum.sqrt5().approx()
check("approx(sqrt5)", abs(re - 5 ** 0.5) < 1e-12 and abs(im) < 1e-12)

# binary forms and covariants
one = trisphere.CycloNum.one()
st = trisphere.BinaryForm.monomial(one, 1, 1)
h = trisphere.hessian(st)
check(
    "hessian(st) == -1/2",
    h == trisphere.BinaryForm.monomial(trisphere.CycloNum.rational(-1, 2), 0, 0),
)
e5 = trisphere.BinaryForm.power_sum(5)
check("(st, s^5+t^5)^2 == 0", trisphere.transvectant(st, e5, 2).is_zero())
t1 = trisphere.transvectant(st, e5, 1)
ratio = trisphere.BinaryForm.power_difference(5).proportionality_to(t1)
check(
    "(st, s^5+t^5)^1 = -1/2 (s^5 - t^5)",
    ratio == trisphere.CycloNum.rational(-1, 2),
)

# multiplets and the sphere side of the correspondence
m_st = trisphere.Multiplet.from_highest_weight(st)
check("multiplet of st has 3 components", m_st.dim() == 3)
paired = trisphere.cg_highest(m_st, m_st, 2)
minus_half = trisphere.SphereFunction.monomial(
    trisphere.CycloNum.rational(-1, 2), 0, 0, 0, 0
)
check("full contraction is the constant -1/2", paired == minus_half)
sphere_h = trisphere.SphereFunction.from_binary_form(h)
check("sphere pairing equals the transvectant", paired == sphere_h)

# generator actions
s = trisphere.SphereFunction.monomial(one, 1, 0, 0, 0)
lowered = trisphere.apply_generator("RightLower", s)
minus_tbar = trisphere.SphereFunction.monomial(-one, 0, 0, 0, 1)
check("J-^R(s) == -tbar", lowered == minus_tbar)

# groups, invariants, Molien
tetra = trisphere.build_group("binary-tetrahedral")
check("binary tetrahedral group has order 24", tetra.order() == 24)
icosa = trisphere.build_group("binary-icosahedral")
check("binary icosahedral group has order 120", icosa.order() == 120)
check("icosahedral molien(12) == 1", icosa.molien_dim(12) == 1)
check("icosahedral molien(4) == 0", icosa.molien_dim(4) == 0)

sys_tetra = trisphere.fundamental(tetra)
check("tetrahedral invariant degrees", sys_tetra.invariant_degrees() == [6, 8, 12])
check("seed is invariant", tetra.is_invariant(sys_tetra.seed()))
degree, monomials, coeffs = sys_tetra.syzygy()
check("tetrahedral syzygy at degree 24", degree == 24)
check("syzygy involves R^2", (0, 0, 2) in monomials)

cyc = trisphere.build_group("cyclic", 5)
check("cyclic(5) has order 5", cyc.order() == 5)
try:
    trisphere.build_group("cyclic", 7)
    check("cyclic(7) rejected", False)
except ValueError:
    check("cyclic(7) rejected", True)

# one full verification battery through the bindings
rep = json.loads(trisphere.verify_json("cyclic", 5))
check(
    "verify cyclic(5) passes",
    rep["passed"] and all(c["status"] == "pass" for c in rep["claims"]),
)

print("smoke test passed")
