"""
Runtime configuration.

Values resolve in this order, later wins: defaults, a YAML file, environment
variables, command line flags.

.. code-block:: yaml

    element_budget: 1000000
    chain_budget: 10000000
    default_format: json
    seed: 7
    log_level: DEBUG
"""
import os
from typing import Any, Mapping, Optional

import attr
import yaml

import ncposet.constants as const
from ncposet.utils.file_handler import load_file


def _positive(instance: Any, attribute: "attr.Attribute[int]", value: int) -> None:
    if value < 1:
        raise ValueError(f"{attribute.name} must be positive, got {value}.")


@attr.s
class Config:
    element_budget = attr.ib(
        type=int,
        default=const.DEFAULT_ELEMENT_BUDGET,
        kw_only=True,
        validator=[attr.validators.instance_of(int), _positive],
    )
    chain_budget = attr.ib(
        type=int,
        default=const.DEFAULT_CHAIN_BUDGET,
        kw_only=True,
        validator=[attr.validators.instance_of(int), _positive],
    )
    default_format = attr.ib(
        type=str,
        default=const.TEXT,
        kw_only=True,
        validator=attr.validators.in_(const.FORMATS),
    )
    seed = attr.ib(
        type=int,
        default=const.DEFAULT_SEED,
        kw_only=True,
        validator=attr.validators.instance_of(int),
    )
    log_level = attr.ib(
        type=str,
        default=const.DEFAULT_LOG_LEVEL,
        kw_only=True,
        validator=attr.validators.instance_of(str),
    )
    log_file = attr.ib(
        type=Optional[str],
        default=None,
        kw_only=True,
        validator=attr.validators.optional(attr.validators.instance_of(str)),
    )

    def with_environment(self, environ: Optional[Mapping[str, str]] = None) -> "Config":
        """
        Apply budget overrides from the environment.

        :raises ValueError: If a budget variable is not an integer.
        """
        environ = os.environ if environ is None else environ
        changes = {}
        for key, field in (
            (const.ENV_ELEMENT_BUDGET, "element_budget"),
            (const.ENV_CHAIN_BUDGET, "chain_budget"),
        ):
            if key in environ:
                try:
                    changes[field] = int(environ[key])
                except ValueError as error:
                    raise ValueError(
                        f"{key} should be an integer, got {environ[key]!r}."
                    ) from error
        return attr.evolve(self, **changes)


def load_config(
    path: Optional[str] = None, environ: Optional[Mapping[str, str]] = None
) -> Config:
    """
    Read a YAML configuration (if any) and apply environment overrides.

    :param path: A YAML file, falls back to the NCPOSET_CONFIG variable.
    :type path: Optional[str]
    :return: The resolved configuration.
    :rtype: Config
    """
    environ = os.environ if environ is None else environ
    path = path or environ.get(const.ENV_CONFIG)
    values = {}
    if path:
        values = load_file(path, loader=yaml.safe_load) or {}
        if not isinstance(values, dict):
            raise TypeError(f"Configuration in {path} should be a mapping.")
    return Config(**values).with_environment(environ)
