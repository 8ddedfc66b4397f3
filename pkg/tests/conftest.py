import json
import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from heptaknot.geometry import general_position_check
from heptaknot.radon import PenetrationTable, penetration_counts

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name):
    return [tuple(p) for p in json.loads((DATA / name).read_text())["points"]]


@pytest.fixture(scope="session")
def figure8s():
    return {k: load(f"figure8_{k.lower()}.json") for k in ("RS1", "RS2", "RS3")}


@pytest.fixture(scope="session")
def trefoil_hexagon():
    return load("trefoil_hexagon.json")


@pytest.fixture(scope="session")
def trefoil_heptagon():
    return load("trefoil_heptagon.json")


@pytest.fixture(scope="session")
def moment_curve():
    return [(t, t * t, t ** 3) for t in range(1, 8)]


coords = st.integers(min_value=-30, max_value=30)
points3 = st.tuples(coords, coords, coords)


def point_lists(n):
    return st.lists(points3, min_size=n, max_size=n)


def constraint_violations(t: PenetrationTable) -> list[str]:
    """Conclusions any figure-8 table must satisfy, as a list of broken ones."""
    out = []
    counts = penetration_counts(t)
    for i in range(7):
        if not 1 <= counts[i] <= 2:
            out.append(f"I({i + 1}) = {counts[i]}")
        if counts[i] >= 2 and counts[(i + 1) % 7] >= 2:
            out.append(f"I({i + 1}) and I({i + 2}) both >= 2")
        if counts[i] == 2 and t[i, 1] == 0:
            out.append(f"I({i + 1}) = 2 without the middle edge")
    return out


def perturbed_figure8_sample(figure8s, count, seed):
    """Integer jitters of the stored figure-8 heptagons at three noise levels."""
    rng = random.Random(seed)
    bases = list(figure8s.values())
    out = []
    while len(out) < count:
        b = bases[len(out) % 3]
        noise = rng.choice((300, 1000, 2500))
        pts = [tuple(c * 1000 + rng.randint(-noise, noise) for c in p) for p in b]
        if general_position_check(pts) is None:
            out.append(pts)
    return out


# acceptance results collected for the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
