import pytest

from fcplat.corpus import CorpusConfig, generate_corpus
from fcplat.ring import galois_field, product_ring
from fcplat.lattice import ExtensionLattice
from fcplat.spectrum import Extension
from fcplat.submodule import subring_generated
from fcplat.verify import (
    ExtContext,
    SUITES,
    check_multi_complement_blocks_cosub,
    run_suite,
    suite_checks,
)


def small_corpus():
    return generate_corpus(CorpusConfig(seed=11, count=12))


def test_all_suites_pass_on_small_corpus():
    entries = small_corpus()
    report, ok = run_suite(entries, "all")
    assert ok
    names = {name for suite in SUITES.values() for name, _ in suite}
    assert set(report) == names
    # every check ran on every entry
    for st in report.values():
        assert st["pass"] + st["fail"] + st["not_applicable"] == len(entries)
        assert st["fail"] == 0 and st["failures"] == []


def test_suite_selection():
    assert len(suite_checks("all")) == sum(len(v) for v in SUITES.values())
    assert suite_checks("identities") == SUITES["identities"]
    with pytest.raises(KeyError):
        suite_checks("nonsense")


def test_multi_complement_guard_on_twisted_diagonals():
    # F2 inside F8 x F8: the t-closure F2 x F2 has three complements (the
    # Galois-twisted diagonal F8 copies), none of them ramified co-atoms,
    # yet the co-subintegral closure exists trivially.  The blocking check
    # must therefore report not-applicable, not a violation.
    F8 = galois_field(8)
    S, _ = product_ring([F8, F8])
    ext = Extension(S, subring_generated(S, []))
    lat = ExtensionLattice(ext)
    ctx = ExtContext("f8xf8", ext, lat)
    assert len(ctx.lat.complements(ctx.t)) == 3
    assert ctx.co["co_subintegral"].exists
    assert check_multi_complement_blocks_cosub(ctx) is None
