import doctest

import peakpoly.permutations
import peakpoly.polynomial


def test_polynomial_doctests():
    results = doctest.testmod(peakpoly.polynomial)
    assert results.failed == 0 and results.attempted > 0


def test_permutations_doctests():
    results = doctest.testmod(peakpoly.permutations)
    assert results.failed == 0 and results.attempted > 0
