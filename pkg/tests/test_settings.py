# -*- coding: utf-8 -*-

"""
Tests for mibelastic.settings.
"""




import logging

import pytest

import mib_config as config
from mibelastic.errors import ConfigError
from mibelastic.settings import OptionHolder, Settings


class _Options(OptionHolder):
    _option_defaults = {"flag": "off", "count": "3", "name": "base"}


class _MoreOptions(_Options):
    _option_defaults = {"name": "derived"}


def test_defaults_come_from_config():
    settings = Settings()
    assert settings.get_option_float("tolerance") == config.TOLERANCE
    assert settings.get_option_int("max_iterations") is None
    assert (settings.get_option_int("parallel_threads")
            == config.PARALLEL_THREADS)
    assert settings.get_option_vector("bounds_min") is None


def test_options_override_defaults():
    settings = Settings(options={"Tolerance": "1e-8", "max_iterations": 50,
                                 "log_level": None})
    assert settings.get_option_float("tolerance") == 1e-8
    assert settings.get_option_int("max_iterations") == 50
    assert settings.get_log_level() == config.LOG_LEVEL


def test_unknown_key_is_rejected():
    with pytest.raises(ConfigError):
        Settings(options={"tolerence": "1e-8"})


def test_lenient_holder_accepts_unknown_keys():
    assert _Options(options={"extra": "x"}).get_option("extra") == "x"


def test_defaults_are_merged_along_the_mro():
    options = _MoreOptions().get_options()
    assert options == {"flag": "off", "count": "3", "name": "derived"}


@pytest.mark.parametrize("value,expected", [
    ("off", False), ("No", False), ("0", False), ("", False),
    ("on", True), ("yes", True), ("True", True),
    ])
def test_bool_option(value, expected):
    assert _Options(options={"flag": value}).get_option_bool("flag") is expected


def test_invalid_number_raises():
    with pytest.raises(ConfigError):
        Settings(options={"tolerance": "tiny"}).get_option_float("tolerance")


@pytest.mark.parametrize("value", ["1,2", "1,2,3,4", "a,b,c"])
def test_invalid_vector_raises(value):
    with pytest.raises(ConfigError):
        Settings(options={"bounds_min": value}).get_option_vector(
            "bounds_min")


def test_from_file(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# solver\n\nTolerance = 1e-6\n"
                    "bounds_min = -1, -1, -2\nlog_level=debug\n")
    settings = Settings.from_file(str(path), max_iterations=20,
                                  tolerance=None)
    assert settings.get_option_float("tolerance") == 1e-6
    assert settings.get_option_int("max_iterations") == 20
    assert settings.get_option_vector("bounds_min") == (-1.0, -1.0, -2.0)
    assert settings.get_log_level() == logging.DEBUG


def test_from_file_rejects_malformed_line(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("tolerance 1e-6\n")
    with pytest.raises(ConfigError):
        Settings.from_file(str(path))


def test_from_file_missing(tmp_path):
    with pytest.raises(ConfigError):
        Settings.from_file(str(tmp_path / "missing.cfg"))


def test_unknown_log_level():
    with pytest.raises(ConfigError):
        Settings(options={"log_level": "chatty"}).get_log_level()
