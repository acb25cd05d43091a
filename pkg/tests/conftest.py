import pytest

from decodonkit import build_table, save_table


@pytest.fixture(scope="session")
def table():
    """One shared rank table; building takes ~10 s."""
    return build_table()


@pytest.fixture(scope="session")
def table_file(table, tmp_path_factory):
    path = tmp_path_factory.mktemp("table") / "decodon_table.bin"
    save_table(table, path)
    return path
