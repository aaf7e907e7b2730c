import pytest

import builders


@pytest.fixture
def five_swap():
    return builders.five_swap()


@pytest.fixture
def two_phase():
    return builders.two_phase()


@pytest.fixture
def four_phase():
    return builders.four_phase()


@pytest.fixture
def banach_chain():
    return builders.banach_chain()


@pytest.fixture
def four_cycle():
    return builders.four_cycle()
