"""Smoke test for the compiled extension.

Build with `cargo build --release -p tppa-py`, then copy
target/release/libtppa.so to python/tppa.so (or install with maturin).
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import tppa  # noqa: E402


def main():
    d1 = tppa.Diagram("[[1,3],[2,-1],[4],[-2,-3],[-4]]")
    d2 = tppa.Diagram("[[1,-4],[2],[3],[4],[-1],[-2,-3]]")
    d, l = d1.compose(d2)
    assert str(d) == "[[1,3],[2,-4],[4],[-1],[-2,-3]]" and l == 2

    assert dict(tppa.rook_dims(2)) == {"∅": 1, "(1)": 2, "(2)": 1, "(1,1)": 1}
    assert tppa.mult("2", 3, 3) == (3, 3, 3)
    assert tppa.path_to_tableau([[1], [2], [1, 1]], 3) == [[[1]], [[2, 3]]]
    assert tppa.tableau_to_path([[[1, 2]], [[3]]]) == [[1], [1], [1, 1]]
    assert tppa.chi_star("1", 2, [(1, 1), (2, 2)]) == "2"

    report = json.loads(tppa.schur_weyl(2, 3))
    assert report["ok"] and report["kernel_dim"] == 6

    gt = json.loads(tppa.gt_decompose("3/2", 2))
    assert gt["ok"] and [r["eigenvalues"][2][0] for r in gt["rows"]] == ["-1", "0"]

    assert all(ok for _, _, ok in tppa.verify("bratteli"))
    print("python smoke test ok")


if __name__ == "__main__":
    main()
