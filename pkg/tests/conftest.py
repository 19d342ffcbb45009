import pathlib

import pytest
from hypothesis import settings

from rulemine.transactions import load_basket_file, load_matrix_file

settings.register_profile("rulemine", deadline=None)
settings.load_profile("rulemine")

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def basket_path() -> pathlib.Path:
    return DATA_DIR / "attendance.basket"


@pytest.fixture(scope="session")
def matrix_path() -> pathlib.Path:
    return DATA_DIR / "attendance.matrix"


@pytest.fixture(scope="session")
def attendance(basket_path):
    """The 60-student attendance fixture, loaded once per session."""
    return load_basket_file(basket_path)


@pytest.fixture(scope="session")
def attendance_matrix(matrix_path):
    return load_matrix_file(matrix_path)
