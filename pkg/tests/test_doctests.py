"""Run the doctests embedded in the library modules."""

import doctest

import pytest

from btb import coeff, coxeter, partitions


@pytest.mark.parametrize("module", [coeff, partitions, coxeter])
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
    assert result.attempted > 0
