"""Shared fixtures: the two worked instances used across the suite.

The value tables are frozen literals so every test checks the library
against independently written data rather than against other library calls.
"""
import pytest

from lsubgroups import builtin_group, chain_lattice, l_subset

FIVE_CHAIN = ["0", "a", "b", "c", "1"]

# D8 with centre C = {e, r2} and Klein subgroup K = {e, r2, s, sr2}
D8_MU = {
    "e": "1", "r2": "c",
    "s": "b", "sr2": "b",
    "r": "a", "r3": "a", "sr": "a", "sr3": "a",
}
D8_ETA1 = {
    "e": "1", "r2": "b", "s": "b", "sr2": "b",
    "r": "a", "r3": "a", "sr": "a", "sr3": "a",
}
D8_ETA2 = {
    "e": "1", "r2": "c",
    "s": "a", "sr2": "a", "r": "a", "r3": "a", "sr": "a", "sr3": "a",
}
D8_ETA3 = {
    "e": "1", "r2": "c", "s": "b", "sr2": "b",
    "r": "0", "r3": "0", "sr": "0", "sr3": "0",
}
D8_ETA4 = {
    "e": "c", "r2": "c", "s": "b", "sr2": "b",
    "r": "a", "r3": "a", "sr": "a", "sr3": "a",
}
D8_PHI = {
    "e": "c", "r2": "b", "s": "a", "sr2": "a",
    "r": "0", "r3": "0", "sr": "0", "sr3": "0",
}

# Q8 with centre C = {1, -1} and H = {1, -1, i, -i}
Q8_MU_MAXIMAL = {
    "1": "1", "-1": "1",
    "i": "b", "-i": "b",
    "j": "a", "-j": "a", "k": "a", "-k": "a",
}
Q8_ETA_MAXIMAL = {
    "1": "1", "-1": "c",
    "i": "b", "-i": "b",
    "j": "a", "-j": "a", "k": "a", "-k": "a",
}

# the level pattern holds for this pair yet eta is not maximal in mu
Q8_MU_CONVERSE = {
    "1": "1", "-1": "1",
    "i": "c", "-i": "c",
    "j": "a", "-j": "a", "k": "a", "-k": "a",
}
Q8_ETA_CONVERSE = {
    "1": "1", "-1": "1",
    "i": "a", "-i": "a", "j": "a", "-j": "a", "k": "a", "-k": "a",
}
Q8_THETA_WITNESS = {
    "1": "1", "-1": "1",
    "i": "b", "-i": "b",
    "j": "a", "-j": "a", "k": "a", "-k": "a",
}


@pytest.fixture(scope="session")
def five_chain():
    return chain_lattice(FIVE_CHAIN)


@pytest.fixture(scope="session")
def d8():
    return builtin_group("D8")


@pytest.fixture(scope="session")
def q8():
    return builtin_group("Q8")


@pytest.fixture(scope="session")
def d8_case(d8, five_chain):
    """The dihedral worked instance: mu plus its four maximal L-subgroups."""
    build = lambda table: l_subset(d8, five_chain, table)
    return {
        "group": d8,
        "lattice": five_chain,
        "mu": build(D8_MU),
        "eta1": build(D8_ETA1),
        "eta2": build(D8_ETA2),
        "eta3": build(D8_ETA3),
        "eta4": build(D8_ETA4),
        "phi": build(D8_PHI),
    }


@pytest.fixture(scope="session")
def q8_maximal_case(q8, five_chain):
    return {
        "group": q8,
        "lattice": five_chain,
        "mu": l_subset(q8, five_chain, Q8_MU_MAXIMAL),
        "eta": l_subset(q8, five_chain, Q8_ETA_MAXIMAL),
    }


@pytest.fixture(scope="session")
def q8_converse_case(q8, five_chain):
    return {
        "group": q8,
        "lattice": five_chain,
        "mu": l_subset(q8, five_chain, Q8_MU_CONVERSE),
        "eta": l_subset(q8, five_chain, Q8_ETA_CONVERSE),
        "theta": l_subset(q8, five_chain, Q8_THETA_WITNESS),
    }
