import os
import tempfile

import pytest
import yaml

import ncposet.constants as const
from ncposet.utils.config import Config, load_config
from ncposet.utils.misc import parse_int_list


def _write(content) -> str:
    _, file_path = tempfile.mkstemp(suffix=".yaml")
    with open(file_path, "w") as handle:
        yaml.dump(content, handle)
    return file_path


def test_defaults():
    config = load_config(environ={})
    assert config == Config()
    assert config.element_budget == const.DEFAULT_ELEMENT_BUDGET
    assert config.default_format == const.TEXT


def test_yaml_then_environment():
    file_path = _write({"element_budget": 500, "chain_budget": 900, "default_format": "json", "seed": 7})
    config = load_config(file_path, environ={const.ENV_CHAIN_BUDGET: "40"})
    os.remove(file_path)
    assert config.element_budget == 500
    assert config.chain_budget == 40
    assert config.default_format == "json"
    assert config.seed == 7


def test_config_path_from_environment():
    file_path = _write({"log_level": "DEBUG"})
    config = load_config(environ={const.ENV_CONFIG: file_path, const.ENV_ELEMENT_BUDGET: "12"})
    os.remove(file_path)
    assert config.log_level == "DEBUG"
    assert config.element_budget == 12


def test_empty_yaml():
    file_path = _write(None)
    assert load_config(file_path, environ={}) == Config()
    os.remove(file_path)


@pytest.mark.parametrize(
    "content,environ,error",
    [
        ([1, 2], {}, TypeError),
        ({"element_budget": 0}, {}, ValueError),
        ({"default_format": "xml"}, {}, ValueError),
        ({"unknown": 1}, {}, TypeError),
        ({}, {const.ENV_ELEMENT_BUDGET: "many"}, ValueError),
        ({}, {const.ENV_CHAIN_BUDGET: "-3"}, ValueError),
    ],
)
def test_invalid_config(content, environ, error):
    file_path = _write(content)
    with pytest.raises(error):
        load_config(file_path, environ=environ)
    os.remove(file_path)


def test_parse_int_list():
    assert parse_int_list("2,1,3,1,3") == (2, 1, 3, 1, 3)
    assert parse_int_list(" 1, 2 ,") == (1, 2)
    assert parse_int_list("") == ()
    with pytest.raises(ValueError):
        parse_int_list("1,x")
