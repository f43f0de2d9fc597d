from __future__ import annotations

import pytest

from centering import LanguageConfig
from checks import CORPUS


@pytest.fixture
def ja():
    return LanguageConfig.japanese()


@pytest.fixture
def corpus_dir():
    return CORPUS
