import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kclass.verifier import CatalogSession


@pytest.fixture(scope="session")
def session():
    """One realized-catalog cache shared by every test that needs groups."""
    return CatalogSession()
