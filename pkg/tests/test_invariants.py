import pytest

from scarfkit.invariants import MUTATIONS, SUITES, check_invariants

TARGETS = {"boundary-drop-face": "chains", "pivot-drop-down": "pivot_parity", "lex-flip-p": "lex_extension"}


@pytest.mark.parametrize("suite", list(SUITES))
def test_small_suite_passes(suite):
    rep = check_invariants(seed=3, sizes="small", only=[suite])
    assert rep["ok"], rep
    assert all(s["cases"] > 0 for s in rep["suites"])


@pytest.mark.parametrize("mutation", MUTATIONS)
def test_mutation_is_caught(mutation):
    rep = check_invariants(seed=0, sizes="small", mutate=mutation, only=[TARGETS[mutation]])
    assert not rep["ok"]
    failing = [s for s in rep["suites"] if s["failures"]]
    assert failing and all(s["witness"] is not None for s in failing)


def test_custom_sizes_and_determinism():
    sizes = {name: 2 for name in SUITES}
    assert check_invariants(5, sizes) == check_invariants(5, sizes)


def test_unknown_mutation():
    with pytest.raises(ValueError):
        check_invariants(mutate="nope")
