"""Shared fixtures: the reference suite of surfaces exercised everywhere."""

import pytest

from lawson import Case, InvalidTripleError, Triple, validate

# Candidate parameters; the builder drops anything inadmissible.
_GENERALIZED_CANDIDATES = [
    (0, 0, 1),
    (0, 1, 2),
    (1, 1, 2),
    (1, 2, 3),
    (1, 1, 4),
    (1, 2, 4),
    (0, 1, 3),
    (1, 3, 4),
    (2, 3, 6),
    (1, 2, 5),
    (3, 4, 6),
]
_LAWSON_CANDIDATES = [(1, 1), (2, 1), (3, 1)]


def build_suite() -> list[Triple]:
    suite = []
    for a, b, c in _GENERALIZED_CANDIDATES:
        try:
            suite.append(validate(Case.GENERALIZED, a, b, c))
        except InvalidTripleError:
            continue
    for a, b in _LAWSON_CANDIDATES:
        try:
            suite.append(validate(Case.LAWSON, a, b))
        except InvalidTripleError:
            continue
    return suite


SUITE = build_suite()
SUITE_IDS = [t.label() for t in SUITE]


@pytest.fixture(scope="session")
def suite():
    return SUITE
