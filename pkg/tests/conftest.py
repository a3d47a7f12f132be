"""Shared fixtures: adjacency-list text for the six bundled critical graphs."""

import pytest

from vcrit.formats import parse_adjacency_list

# One adjacency-list record per member, exactly as the compiled-in fixtures.
FAMILY_TEXT = {
    "K5": "{0: 1 2 3 4; 1: 0 2 3 4; 2: 0 1 3 4; 3: 0 1 2 4; 4: 0 1 2 3}",
    "W": "{0: 1 4 5 6; 1: 0 2 5 6; 2: 1 3 5 6; 3: 2 4 5 6; 4: 0 3 5 6; "
         "5: 0 1 2 3 4 6; 6: 0 1 2 3 4 5}",
    "P": "{0: 1 4 5 6; 1: 0 2 7 8; 2: 1 3 5 6 7 8; 3: 2 4 5 6 7 8; 4: 0 3 7 8; "
         "5: 0 2 3 7; 6: 0 2 3 8; 7: 1 2 3 4 5 8; 8: 1 2 3 4 6 7}",
    "Q1": "{0: 1 4 5 6; 1: 0 2 5 6 7 8; 2: 1 3 5 6 7 8; 3: 2 4 7 8; 4: 0 3 7 8; "
          "5: 0 1 2 6 7; 6: 0 1 2 5 8; 7: 1 2 3 4 5 8; 8: 1 2 3 4 6 7}",
    "Q2": "{0: 1 4 5 6; 1: 0 2 5 6 7 8; 2: 1 3 5 6 7 8; 3: 2 4 5 6 7 8; 4: 0 3 7 8; "
          "5: 0 1 2 3 6 7; 6: 0 1 2 3 5 8; 7: 1 2 3 4 5; 8: 1 2 3 4 6}",
    "Q3": "{0: 1 4 5 6; 1: 0 2 5 7 8; 2: 1 3 5 7 8; 3: 2 4 6 7 8; 4: 0 3 6 7 8; "
          "5: 0 1 2 6; 6: 0 3 4 5 8; 7: 1 2 3 4 8; 8: 1 2 3 4 6 7}",
}


@pytest.fixture(scope="session")
def family_graphs():
    return {name: parse_adjacency_list(text) for name, text in FAMILY_TEXT.items()}
