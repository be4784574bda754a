"""Smoke test for the qmax_py extension module.

Build it with `maturin develop -m crates/qmax-py/Cargo.toml`, or copy
target/release/libqmax_py.so next to this file as qmax_py.so after
`cargo build -p qmax-py --release --features extension-module`.
"""

import qmax_py as q


def main():
    z8 = q.Ring("Z/8")
    assert len(z8) == 8 and z8.size == 8
    assert z8.ideal("4") == [0, 4]
    c = z8.classify("4")
    assert c["classification"]["type"] == "ramified"
    assert c["absorbing"]["two_absorbing"]

    z30 = q.classify("Z/30", "0")
    assert z30["classification"]["type"] == "none"
    assert z30["absorbing"]["violating_triple"] == [2, 3, 5]

    cube = q.Ring("poly(Z/2, x^3)")
    assert cube.element("x") == 2
    built = cube.construct("x^2")
    assert built["built"] and built["subring"] == [0, 1, 4, 5]
    assert q.construct("Z/8", "4")["failure"] == "characteristic-mismatch"

    assert len(q.lattice("Z/12")["ideals"]) == 6
    assert q.analyze("ext([], GF(4))")["minimal"]["type"] == "inert"
    assert q.z_ideal(49)["tag"] == "ramified"

    rep = q.verify("qmax-equivalence", max_size=16)
    assert rep["passed"] and rep["suites"][0]["checked"] > 0
    assert "transfer" in q.suite_names()

    for bad in (lambda: q.Ring("Z/1"), lambda: q.z_ideal(0), lambda: q.verify("transfer", props=["nope"])):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        q.Ring("Z/5000")
    except RuntimeError:
        pass
    else:
        raise AssertionError("expected the size cap to trip")

    print("qmax_py smoke test: ok")


if __name__ == "__main__":
    main()
