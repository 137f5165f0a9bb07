import importlib
import pkgutil

import pytest

import gmft

MODULES = [m.name for m in pkgutil.walk_packages(gmft.__path__, "gmft.") if not m.ispkg and not m.name.endswith("__main__")]

def test_modules_are_found():
    assert "gmft.torchutils" in MODULES
    assert "gmft.gutzwiller.solver" in MODULES

@pytest.mark.parametrize("name", MODULES)
def test_module_header(name):
    module = importlib.import_module(name)
    assert module.__author__ == "Benedict Wilkins"
    assert module.__status__ == "Development"
    assert module.__doc__.lstrip().startswith("Created on")
    assert "2026" in module.__doc__.lstrip().splitlines()[0]
