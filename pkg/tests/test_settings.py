import pytest
from pydantic import ValidationError

from helpers.settings import Settings, get_settings, load_settings


def test_defaults(monkeypatch):
    for var in (
        "LOG_LEVEL",
        "QMARGINAL_ENUMERATION_CAP",
        "QMARGINAL_MAX_QUBITS",
        "QMARGINAL_TOLERANCE",
        "QMARGINAL_AMPLITUDE_TOLERANCE",
        "QMARGINAL_CORPUS_MAX_WIDTH",
    ):
        monkeypatch.delenv(var, raising=False)
    monkeypatch.setattr("helpers.settings.load_dotenv", lambda: None)
    assert load_settings() == Settings()
    assert Settings().max_qubits == 26 and Settings().enumeration_cap == 20


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "debug")
    monkeypatch.setenv("QMARGINAL_MAX_QUBITS", "12")
    monkeypatch.setenv("QMARGINAL_TOLERANCE", "1e-6")
    settings = load_settings()
    assert settings.log_level == "DEBUG"
    assert settings.max_qubits == 12
    assert settings.tolerance == 1e-6


def test_invalid_values_raise(monkeypatch):
    monkeypatch.setenv("QMARGINAL_TOLERANCE", "-1")
    with pytest.raises(ValidationError):
        load_settings()


def test_get_settings_is_cached():
    get_settings.cache_clear()
    assert get_settings() is get_settings()
    get_settings.cache_clear()
