import pytest

CONFIG_VARS = (
    "APP_ENV",
    "OUTPUT_DIR",
    "VERIFY_SIZE",
    "VERIFY_SEED",
    "VERIFY_INSTANCES",
    "ENUM_MAX_VERTICES",
)


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """Run in an empty directory with no configuration variables set.

    Each variable is set before it is deleted so monkeypatch also undoes
    values loaded from a .env file.
    """
    for name in CONFIG_VARS:
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)
    return tmp_path
