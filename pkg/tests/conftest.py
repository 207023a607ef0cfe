import pytest

from ontosim import annotate_weights, load_graph
from ontosim.data import fixture_path

FIG2_EDGES = [
    ("A", "FC"), ("FC", "B"), ("FC", "C"), ("FC", "D"), ("FC", "E"),
    ("D", "F"), ("C", "G"), ("F", "G"), ("E", "H"), ("G", "H"),
]
FIG6_EDGES = [
    ("Vehicle", "Bus"), ("Vehicle", "Car"), ("Vehicle", "Truck"),
    ("Car", "FamilyCar"), ("Car", "LuxuryCar"), ("Car", "SportCar"),
]
TABLE5_NODES = ["Vehicle", "Truck", "Car", "FamilyCar", "SportCar"]


@pytest.fixture(scope="session")
def fig2():
    return load_graph(fixture_path("fig2.onto"))


@pytest.fixture(scope="session")
def fig6():
    return load_graph(fixture_path("fig6.onto"))


@pytest.fixture(scope="session")
def wg2(fig2):
    return annotate_weights(fig2)


@pytest.fixture(scope="session")
def wg6(fig6):
    return annotate_weights(fig6)
