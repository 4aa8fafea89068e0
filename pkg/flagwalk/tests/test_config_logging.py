"""Tests for settings, logging, the worker pool and exception payloads."""

import logging

import pytest
from pydantic import ValidationError

from flagwalk.config import Settings, settings
from flagwalk.core.exceptions import (
    EXIT_INTERNAL,
    EXIT_INVALID_MAP,
    EXIT_THEOREM_VIOLATION,
    EXIT_USAGE,
    MapfileFormatException,
    MapValidationException,
    NotDartTransitiveException,
    TheoremViolationException,
    UsageException,
    WalkParameterException,
    exception_to_payload,
    exit_code_for,
)
from flagwalk.core.logging import get_logger, setup_logging
from flagwalk.core.parallel import parallel_map, worker_count


def test_settings_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("FLAGWALK_THREADS", "3")
    monkeypatch.setenv("FLAGWALK_LOG_LEVEL", "INFO")
    loaded = Settings()
    assert loaded.THREADS == 3
    assert loaded.LOG_LEVEL == "INFO"
    assert loaded.APP_NAME == "flagwalk"


def test_settings_reject_negative_threads() -> None:
    with pytest.raises(ValidationError):
        Settings(THREADS=-1)


def test_worker_count(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(settings, "THREADS", 2)
    assert worker_count() == 2
    monkeypatch.setattr(settings, "THREADS", 0)
    assert worker_count() >= 1


@pytest.mark.parametrize("threads", [1, 4])
def test_parallel_map_keeps_order(monkeypatch: pytest.MonkeyPatch, threads: int) -> None:
    monkeypatch.setattr(settings, "THREADS", threads)
    assert parallel_map(lambda x: x * x, range(20)) == [x * x for x in range(20)]
    assert parallel_map(lambda x: x, []) == []


def test_setup_logging_levels(monkeypatch: pytest.MonkeyPatch) -> None:
    setup_logging("debug")
    assert logging.getLogger().level == logging.DEBUG
    setup_logging("not-a-level")
    assert logging.getLogger().level == logging.WARNING
    monkeypatch.setattr(settings, "DEBUG", True)
    setup_logging()
    assert logging.getLogger().level == logging.DEBUG
    monkeypatch.setattr(settings, "DEBUG", False)
    setup_logging()
    assert logging.getLogger().level == logging.getLevelName(settings.LOG_LEVEL)
    assert get_logger("flagwalk.x").name == "flagwalk.x"


def test_exception_payloads() -> None:
    payload = exception_to_payload(WalkParameterException(0, 3))
    assert payload == {
        "success": False,
        "message": "j must satisfy 1 <= j <= 2, got 0",
        "details": {"j": 0, "valence": 3},
    }
    assert exception_to_payload(NotDartTransitiveException(2))["details"] == {"dart_orbits": 2}
    assert exception_to_payload(RuntimeError("boom")) == {
        "success": False,
        "message": "Internal error",
        "detail": "boom",
    }


def test_validation_error_payload() -> None:
    with pytest.raises(ValidationError) as exc_info:
        Settings(THREADS=-1)
    payload = exception_to_payload(exc_info.value)
    assert payload["message"] == "Validation error"
    assert payload["errors"][0]["field"] == "THREADS"


def test_exit_codes() -> None:
    assert exit_code_for(UsageException()) == EXIT_USAGE
    assert exit_code_for(MapfileFormatException()) == EXIT_USAGE
    assert exit_code_for(TheoremViolationException("count")) == EXIT_THEOREM_VIOLATION
    assert exit_code_for(ValueError("bad n")) == EXIT_USAGE
    assert exit_code_for(RuntimeError()) == EXIT_INTERNAL
    assert exit_code_for(MapValidationException()) == EXIT_INVALID_MAP
    assert TheoremViolationException("x", witness={"j": 1}).details == {"witness": {"j": 1}}
