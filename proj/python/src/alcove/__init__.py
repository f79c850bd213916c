"""Python access to the alcove verifier.

Reports come back as plain dicts decoded from the JSON the C++ side emits,
so rationals stay exact strings like "1/2".
"""

import json
from pathlib import Path

from . import _alcove
from ._alcove import example_names, example_pair, root_system

__all__ = ["check", "check_file", "catalog", "default_catalog_path", "example_names", "example_pair",
           "run_example", "root_system"]


_SHIPPED = Path(__file__).resolve().parent / "data" / "catalog.txt"


def default_catalog_path():
    """The catalog installed with the package, else the one in the source tree."""
    return str(_SHIPPED) if _SHIPPED.exists() else _alcove.default_catalog_path()


def check(pair_text, catalog=None):
    """Verify a pair given in the text format; returns the report as a dict."""
    return json.loads(_alcove.check_json(pair_text, catalog or default_catalog_path()))


def check_file(path, catalog=None):
    return check(Path(path).read_text(), catalog)


def catalog(path=None):
    return json.loads(_alcove.catalog_json(path or default_catalog_path()))


def run_example(name, catalog=None):
    """Returns (passed, detail) for a builtin example."""
    return _alcove.run_example(name, catalog or default_catalog_path())
