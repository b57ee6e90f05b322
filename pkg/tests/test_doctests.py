"""Every docstring example in the package must execute as written."""

from __future__ import annotations

import doctest

import pytest

import qmmp132.analysis
import qmmp132.dist_engine
import qmmp132.gf_formulas
import qmmp132.mmp_stat
import qmmp132.perm_core
import qmmp132.poly_series

MODULES = [
    qmmp132.perm_core,
    qmmp132.mmp_stat,
    qmmp132.poly_series,
    qmmp132.dist_engine,
    qmmp132.gf_formulas,
    qmmp132.analysis,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
    assert result.attempted > 0  # every module carries at least one worked example
