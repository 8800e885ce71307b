import pytest

from charprec.claims import ClaimContext


@pytest.fixture(scope="session")
def ctx():
    """Shared group/table cache across the whole test session."""
    return ClaimContext(seed=12345)


@pytest.fixture(scope="session")
def s3_table(ctx):
    return ctx.table("sym:3")


@pytest.fixture(scope="session")
def sl2f5_table(ctx):
    return ctx.table("sl2:5")


@pytest.fixture(scope="session")
def gl2f5_table(ctx):
    return ctx.closed_form(5)


@pytest.fixture(scope="session")
def pgl2f5_table(ctx):
    return ctx.table("pgl2:5")
