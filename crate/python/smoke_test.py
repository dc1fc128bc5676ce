"""Smoke test for the `dendri` extension module.

Build and install it first:
    pip install --no-build-isolation ./crates/python
"""

import dendri


def main() -> None:
    corpus = dendri.corpus()
    assert len(corpus) == 12
    for name, c in corpus:
        assert c.is_valid(), name
        assert all(holds for _, holds in c.check()), name

    zero = dendri.DendCoalgebra.zero(2)
    assert zero.cohomology_dims(3) == [4, 16, 48]

    # JSON round trip
    c = corpus[4][1]
    again = dendri.DendCoalgebra.from_json(c.to_json())
    assert again.to_json() == c.to_json()
    assert dendri.kind_of(c.to_json()) == "dendriform_coalgebra"

    # an algebra and its dual have the same cohomology
    a = dendri.DendAlgebra.truncated_polynomial(3)
    assert a.cohomology_dims(3) == a.dual().cohomology_dims(3)

    t = dendri.RelRBO.divided_power(4)
    assert t.check_rbo()
    assert t.induced_dendriform().is_valid()
    assert all(isinstance(v, str) for _, _, v in t.operator())

    d = dendri.Deformation.transformed_trivial(c, 2, seed=7)
    assert all(holds for _, holds in d.check())
    assert d.infinitesimal_is_cocycle()
    ext = d.extend()
    assert ext is not None and ext.order == 3

    h = dendri.DendInfCoalgebra.from_dendriform(c, 4)
    assert all(holds for _, holds in h.check(4))
    assert all(holds for _, holds in h.check_split(4))
    assert all(holds for _, holds in h.check_d_squared(4))

    try:
        dendri.DendCoalgebra.from_json('{"kind": "coalgebra", "dim": 1, "delta": []}')
    except dendri.DendriError as e:
        assert "dendriform_coalgebra" in str(e)
    else:
        raise AssertionError("wrong document kind accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
