"""Smoke test for the Python extension.

Build first:  cargo build -p zalcman-py --release --features extension-module
Then run:     python3 python/smoke_test.py
"""

import importlib.machinery
import importlib.util
import json
import math
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    try:
        import zalcman  # installed wheel, if any

        return zalcman
    except ImportError:
        pass
    for profile in ("release", "debug"):
        for name in ("libzalcman.so", "libzalcman.dylib", "zalcman.dll"):
            path = ROOT / "target" / profile / name
            if path.exists():
                loader = importlib.machinery.ExtensionFileLoader("zalcman", str(path))
                spec = importlib.util.spec_from_file_location("zalcman", path, loader=loader)
                module = importlib.util.module_from_spec(spec)
                loader.exec_module(module)
                return module
    sys.exit("zalcman extension not found; build it with cargo first")


def main():
    z = load()

    koebe = z.TruncatedSeries.koebe(8)
    assert koebe.coeff(5) == 5
    assert z.zalcman(koebe, 1.0, 2, 2) == 1

    hull = z.ClassSpec("hull_convex")
    assert z.sharp_bound(hull, 3, 2, 2) == 2.0
    f = hull.sample(8, seed=7, index=3)
    assert hull.membership_residual(f) <= 1e-9
    assert z.sum_form_check(hull, f, 2, 3) >= -1e-9

    star = z.ClassSpec("hull_starlike")
    ext = star.extremal(2, 2, "resonant")
    assert abs(abs(z.zalcman(ext, 0, 2, 2)) - 3) < 1e-12

    mu = z.HerglotzMeasure.roots_of_unity(2)
    back = z.HerglotzMeasure.from_json(mu.to_json())
    assert back.thetas == mu.thetas
    p = mu.caratheodory_coefficients(4)
    assert abs(p[1] - 2) < 1e-12 and abs(p[0]) < 1e-12

    res = z.maximize_functional(hull, 3, 2, 2, restarts=5, seed=1, target=2.0)
    assert res.gap <= 1e-6, res.gap
    assert "atoms" in json.loads(res.params_json)

    sum_holds, max_holds, worst = z.lemma_equivalence(0, 1, 2.0, 1.0)
    assert sum_holds and max_holds and abs(abs(worst) - 2) < 1e-12

    alpha_hat, radii, values = z.hayman_index("koebe", 20)
    assert alpha_hat >= 0.999 and len(radii) == 20
    assert z.ratio_convergence("koebe", 2, [(100, 100)]) == [1.0]
    assert z.zalcman_equivalence_audit(5, 9, 5) == (True, True, True, True)
    seq = z.bieberbach_iterate(math.e, 1.0, 7)
    assert seq[7] < 1.01 < seq[6]

    try:
        z.sharp_bound(z.ClassSpec("koebe"), 1, 2, 2)
    except NotImplementedError:
        pass
    else:
        raise AssertionError("koebe bound should be unsupported")
    try:
        z.zalcman_equivalence_audit(0, 10, 5)
    except ValueError:
        pass
    else:
        raise AssertionError("inadmissible pair accepted")

    assert z.run_cli(["--command", "verify", "--class", "nw", "--samples", "0"]) == 2
    print("python smoke test: ok")


if __name__ == "__main__":
    main()
