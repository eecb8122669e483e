"""Smoke test for the Python extension module.

Build and install first:
    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/jacobi_moments-*.whl
"""

from fractions import Fraction

import jacobi_moments as jm


def main():
    assert jm.ik(1, 1, 1, 2) == 1
    assert jm.ik(2, 1, 1, 1) == Fraction(1, 3)
    assert jm.ik(4, "5/3", Fraction(1, 4), 6) == jm.ik_via_schur(4, "5/3", "1/4", 6)
    assert jm.ik(3, 2, 3, 4) == jm.density_ik(3, 2, 3, 4) == jm.brute_force_ik(3, 4, 2, 3)

    sp = jm.ScalingParams(0, 0)
    assert jm.ik_limit(2, sp) == Fraction(3, 8)
    assert jm.special_cases(0, 0)[0] == "central-binomial"
    rf = jm.ik_rf(3, jm.ScalingParams(1, "1/2", a0=2, b0=0))
    assert rf.limit_at_infinity() == jm.ik_limit(3, jm.ScalingParams(1, "1/2"))
    l1, l2 = jm.l1l2_from_slopes(1, "1/2")
    assert jm.ik_limit_l1l2(3, l1, l2) == rf.limit_at_infinity()

    n, a, b = 4, Fraction(3, 2), 2
    terms = jm.power_sum_to_schur(jm.Partition([3]))
    assert sum(c * jm.schur_average(mu, a, b, n) for mu, c in terms) == jm.ik(3, a, b, n)
    lam = jm.Partition([2, 1])
    print("p_(2,1) limit at a1=b1=1:", jm.plambda_limit(lam, jm.ScalingParams(1, 1)))

    est = jm.mc_estimate(1, 10, 1.0, 1.0, seed=42)
    z = (est["mean"] - float(jm.ik(1, 1, 1, 10))) / est["std_error"]
    assert abs(z) <= 4, est
    assert jm.mc_estimate(1, 10, 1.0, 1.0, seed=42) == est

    try:
        jm.ik(2, -1, 0, 1)
    except jm.JacobiError as e:
        print("domain error as expected:", e)
    else:
        raise AssertionError("vanishing factor was accepted")

    results = jm.run_checks("identities")
    assert results and all(passed for _, _, passed, _ in results)
    print(f"ok: {len(results)} identity checks passed, mc z = {z:.2f}")


if __name__ == "__main__":
    main()
