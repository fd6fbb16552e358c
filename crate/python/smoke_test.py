"""Smoke test for the compiled extension.

Build first:
    cargo build -p dunkl-slice-py --features extension-module
then run:
    python3 python/smoke_test.py [path/to/libdunkl_slice_py.so]
"""

import importlib.util
import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load(lib_path):
    tmp = pathlib.Path(tempfile.mkdtemp())
    target = tmp / "dunkl_slice.so"
    shutil.copy(lib_path, target)
    spec = importlib.util.spec_from_file_location("dunkl_slice", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def find_library():
    if len(sys.argv) > 1:
        return pathlib.Path(sys.argv[1])
    for profile in ("release", "debug"):
        candidate = ROOT / "target" / profile / "libdunkl_slice_py.so"
        if candidate.exists():
            return candidate
    sys.exit("extension not built; see the docstring")


def main():
    ds = load(find_library())
    roots = json.dumps({
        "m": 3,
        "positive_roots": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        "kappa": ["0", "0", "-1"],
    })
    x3 = json.dumps({"m": 3, "terms": [{"exp": [0, 0, 0, 1], "blade": [], "coeff": "1"}]})
    out = json.loads(ds.apply("dunkl:3", x3, roots))
    assert out["terms"] == [{"exp": [0, 0, 0, 0], "blade": [], "coeff": "-1"}], out

    x = {"m": 3, "terms": [{"exp": [1, 0, 0, 0], "blade": [], "coeff": "1"}]}
    for j in (1, 2, 3):
        e = [0, 0, 0, 0]
        e[j] = 1
        x["terms"].append({"exp": e, "blade": [j], "coeff": "1"})
    t = json.loads(ds.intertwine(json.dumps(x), roots))
    assert {"exp": [0, 0, 0, 1], "blade": [3], "coeff": "-1"} in t["terms"], t

    ok, report = ds.run_suite("intertwine", roots=roots, samples=3)
    assert ok, report
    assert json.loads(report)["summary"]["fail"] == 0

    basis = json.loads(ds.basis(1, m=2))
    assert len(basis["generators"]) == 1

    singular = json.dumps({"m": 1, "positive_roots": [["1"]], "kappa": ["-1/2"]})
    try:
        ds.basis(1, roots=singular)
    except ValueError as err:
        assert "singular" in str(err)
    else:
        raise AssertionError("singular kappa accepted")

    assert "fueter" in ds.operator_names()
    print("python smoke test passed, version", ds.version())


if __name__ == "__main__":
    main()
