import os
import sys

import pytest


@pytest.fixture(scope="session")
def lab():
    """The compiled extension, located via KPZLAB_MODULE_DIR (build tree)."""
    module_dir = os.environ.get("KPZLAB_MODULE_DIR")
    if module_dir:
        sys.path.insert(0, module_dir)
    import _kpzlab

    return _kpzlab


@pytest.fixture(scope="session")
def cli_path():
    path = os.environ.get("KPZLAB_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("KPZLAB_CLI not set")
    return path
