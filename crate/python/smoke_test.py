#!/usr/bin/env python3
"""Smoke test for the konno_py extension module.

Build the module first:

    cargo build -p konno-py --release

then run this script; it loads the cdylib straight out of target/.
"""

import importlib.machinery
import importlib.util
import json
import pathlib
import sys


def load_module():
    root = pathlib.Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libkonno_py.so", "konno_py.so", "konno_py.pyd")
    ]
    for path in candidates:
        if path.exists():
            loader = importlib.machinery.ExtensionFileLoader("konno_py", str(path))
            spec = importlib.util.spec_from_loader("konno_py", loader)
            module = importlib.util.module_from_spec(spec)
            loader.exec_module(module)
            return module
    sys.exit(
        "konno_py cdylib not found; run `cargo build -p konno-py` (or --release) first"
    )


def main():
    k = load_module()
    checks = 0

    def check(label, actual, expected):
        nonlocal checks
        assert actual == expected, f"{label}: expected {expected!r}, got {actual!r}"
        checks += 1

    # Monomial ideal invariants.
    ideal = k.MonomialIdeal("x^3, y^2")
    check("colength", ideal.colength(), 6)
    check("order", ideal.order(), 2)
    check("samuel multiplicity", ideal.samuel_multiplicity(), 6)
    check("integrally closed", ideal.is_integrally_closed(), False)
    closure = ideal.integral_closure()
    check("closure generators", closure.generators(), [(0, 2), (2, 1), (3, 0)])
    check("closure is closed", closure.is_integrally_closed(), True)
    check("closure cluster", closure.cluster_multiplicities(), [2, 1, 1])
    check("membership (2,1)", ideal.membership_in_closure(2, 1), True)
    check("membership (1,1)", ideal.membership_in_closure(1, 1), False)
    check("square", ideal.power(2).generators(), [(0, 4), (3, 2), (6, 0)])

    hd = json.loads(ideal.hoskin_deligne_json())
    check("hd verdict", hd["verdict"], "strict")
    check("hd sum", hd["hd_sum"], 5)
    lech = json.loads(ideal.lech_json())
    check("lech holds", lech["lhs_holds"], True)
    check("lech slack", lech["slack"], "3.5505")

    # Typed errors surface as ValueError.
    try:
        k.MonomialIdeal("x^2, x*y").colength()
    except ValueError as e:
        check("infinite colength error", "finite colength" in str(e), True)
    else:
        sys.exit("expected ValueError for infinite colength")

    # Pencils.
    conic = k.Pencil("x*y", "z^2")
    check("conic degree", conic.degree(), 2)
    check("conic genus", conic.genus(), 0)
    check("conic sums", conic.sums(), (4, 4, 0, 4))
    report = json.loads(conic.resolve_json())
    check("conic checks", all(report["checks"].values()), True)

    cubic = k.Pencil.affine("x^3 - x", "y^3 - y")
    check("cubic genus", cubic.genus(), 1)
    check("cubic sum m^2", cubic.sums()[1], 9)

    # Bound calculators.
    check("hypersurface (2,5)", k.hypersurface_bounds(2, 5), (3, 6))
    check("hypersurface (2,4)", k.hypersurface_bounds(2, 4), (1, 3))
    hs = json.loads(k.hypersurface_bounds_json(2, 5))
    check("hypersurface h0(K)", hs["h0_k"], 4)
    check("k3 d=51", k.k3_bounds(51), (9, 6, 15))
    check("k3 d=3", k.k3_bounds(3), (1, 2, 3))

    # Parser canonical form.
    check(
        "canonical form",
        k.canonical_polynomial("y^2 + x^2 - 2 x y", "xy"),
        "x^2 - 2*x*y + y^2",
    )

    print(f"smoke test passed: {checks} checks")


if __name__ == "__main__":
    main()
