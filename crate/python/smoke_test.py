"""Smoke test for the kcore extension module.

Install the module with `maturin build --release -m crates/py/Cargo.toml`
followed by `pip install` of the wheel, or build it with
`cargo build --release -p kcore-py --features extension-module` and copy
`target/release/libkcore_py.so` to `kcore.so` somewhere on the Python path.
"""

import json

import kcore


def main():
    assert kcore.partition_to_core([4, 2, 1, 1], 4) == [6, 2, 1, 1]
    assert kcore.core_to_partition([9, 5, 3, 2, 1, 1], 4) == [4, 3, 2, 2, 1, 1]
    assert kcore.k_conjugate([4, 3, 2, 2, 1, 1], 4) == [3, 2, 2, 1, 1, 1, 1, 1, 1]
    assert kcore.k_skew([4, 3, 2, 2, 1, 1], 4) == ([9, 5, 3, 2, 1, 1], [5, 2, 1])
    assert not kcore.is_core([2, 1], 2)

    assert kcore.up_covers([4, 2, 1, 1], 4) == [[4, 2, 2, 1], [4, 2, 1, 1, 1]]
    assert kcore.down_covers([4, 2, 1, 1], 4) == [[4, 1, 1, 1], [4, 2, 1]]
    assert not kcore.leq([2, 2], [3, 2, 1, 1, 1, 1], 3)

    tabs = kcore.standard_tableaux([3, 2, 1, 1], 3)
    assert len(tabs) == kcore.count_saturated_chains([3, 2, 1, 1], 3) == 4
    for t in tabs:
        w = t.to_reduced_word()
        assert kcore.KTableau.from_reduced_word(w, 3) == t
        assert kcore.KTableau.from_json(t.to_json()) == t
        assert t.chain()[-1] == [3, 2, 1, 1]

    semi = kcore.semistandard_tableaux([3, 3, 2, 1], [1, 3, 1, 2, 1, 1], 3)
    assert len(semi) == 3
    for t in semi:
        assert t.standardize().is_standard()
        assert json.loads(t.to_json())["evaluation"] == [1, 3, 1, 2, 1, 1]

    sigma = kcore.phi([3, 2, 2, 1], 3)
    assert kcore.w_lambda([3, 2, 2, 1], 3) == [1, 3, 2, 0, 3, 2, 1, 0]
    assert kcore.AffinePermutation.from_word(sigma.reduced_word(), 3) == sigma
    assert sigma.length() == 8 and sigma.is_min_coset_rep()
    assert sigma.to_partition() == [3, 2, 2, 1]
    assert (sigma * sigma.inverse()).length() == 0

    m = kcore.kostka_matrix(6, 3)
    inv = m.inverse()
    assert all(m.entries[i][i] == 1 for i in range(len(m.index)))
    assert kcore.k_schur_in_h(6, 3).entries == inv.entries
    assert m.entry([3, 3], [3, 3]) == 1

    try:
        kcore.partition_to_core([4, 1], 3)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
