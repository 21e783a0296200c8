"""The named suites: registry, determinism, and spot checks of their content."""

import pytest

from octoweyl.lattice import octopus_lattice
from octoweyl.quiver import Weights, default_lambda
from octoweyl.suites import (
    DEFAULT_CATALOG,
    SUITE_NAMES,
    SuiteConfig,
    run_suite,
    witness_root,
)

REQUIRED_SUITES = {
    "presentations",
    "semidirect",
    "artin",
    "vanderlek",
    "prop44",
    "translations",
    "roots-decomposition",
    "mutations",
    "twists",
    "cone",
}


def test_registry_covers_required_names():
    assert REQUIRED_SUITES == set(SUITE_NAMES)


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_each_suite_passes_on_affine_and_elliptic(name):
    for a in [(2, 2, 2), (3, 3, 3)]:
        rep = run_suite(name, a)
        assert rep["pass"], [d for d in rep["details"] if not d["holds"]]
        assert rep["details"]
        assert rep["weights"] == list(a)


def test_suite_reports_are_deterministic():
    cfg = SuiteConfig(seed=42, samples=20)
    a = run_suite("translations", (2, 2, 3), cfg=cfg)
    b = run_suite("translations", (2, 2, 3), cfg=cfg)
    assert a == b
    c = run_suite("cone", (2, 2, 3), cfg=cfg)
    d = run_suite("cone", (2, 2, 3), cfg=cfg)
    assert c == d


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("nope", (2, 2, 2))


def test_witness_root_all_five_cases():
    # hub with even and odd shifts, first arm slot, deeper arm slot
    octo = octopus_lattice(Weights((2, 2, 3)))
    delta = octo.delta
    for v in octo.star_vertices():
        for n in range(-4, 5):
            built = witness_root(octo, v, n)
            expected = tuple(
                b + n * d for b, d in zip(octo.basis_vector(v), delta)
            )
            assert built == expected, (v, n)


def test_roots_window_complete_for_affine_example():
    rep = run_suite("roots-decomposition", (2, 2, 2))
    by_check = {d["check"]: d for d in rep["details"] if "check" in d}
    assert by_check["star-count"]["count"] == 24
    assert by_check["window-count"]["count"] == 168
    assert by_check["window-set-equality"]["holds"]


def test_catalog_spans_all_signs():
    from octoweyl.lattice import euler_characteristic

    signs = {
        (euler_characteristic(Weights(a)) > 0)
        - (euler_characteristic(Weights(a)) < 0)
        for a in DEFAULT_CATALOG
    }
    assert signs == {-1, 0, 1}


def test_cone_suite_detects_short_budget():
    rep = run_suite("cone", (2, 2, 2), cfg=SuiteConfig(budget=1, samples=10))
    assert not rep["pass"]


def test_lambda_is_threaded_through_reports():
    w = Weights((2, 2, 2, 2))
    lam = default_lambda(4)
    rep = run_suite("presentations", w, lam)
    assert rep["lambda"] == "inf,0,1,2"
