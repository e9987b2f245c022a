# src/utils/config_util.py
import json
import os
from dataclasses import fields
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from models.settings import SpectraSettings
from utils.exceptions import ConfigError


def load_config_file(path: Optional[Union[str, Path]]) -> Dict[str, Any]:
    """
    Read an optional JSON config file whose keys are flag names (dashes or underscores).

    Returns:
        Dict keyed by setting name, empty when no path is given

    Raises:
        ConfigError: unreadable file, non-object JSON or unknown keys
    """
    if path is None:
        return {}
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read config file {path}: {e}")
    if not isinstance(raw, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")

    known = set(SpectraSettings.option_names())
    config = {}
    for key, value in raw.items():
        name = key.replace("-", "_")
        if name not in known:
            raise ConfigError(f"unknown config key {key!r}")
        config[name] = value
    return config


def get_layered_option(name: str, flags: Mapping[str, Any], config: Mapping[str, Any],
                       environ: Optional[Mapping[str, str]] = None) -> Optional[Any]:
    """
    Value of one setting with fallback options.

    Tries the explicit command-line flag first, then the environment variable
    registered for the setting, then the config file. None means "use the default".
    """
    environ = os.environ if environ is None else environ
    if (value := flags.get(name)) is not None:
        return value
    env_var = SpectraSettings.ENV_VARS.get(name)
    if env_var and (value := environ.get(env_var)):
        return value
    return config.get(name)


def resolve_settings(flags: Mapping[str, Any], config_path: Optional[Union[str, Path]] = None,
                     environ: Optional[Mapping[str, str]] = None) -> SpectraSettings:
    """
    Build SpectraSettings from flags, environment, config file and defaults, in that order.

    Raises:
        ConfigError: a value cannot be converted to the setting's type
    """
    config = load_config_file(config_path)
    defaults = SpectraSettings()
    overrides = {}
    for f in fields(SpectraSettings):
        value = get_layered_option(f.name, flags, config, environ)
        if value is None:
            continue
        overrides[f.name] = _coerce(f.name, value, type(getattr(defaults, f.name)))
    settings = defaults.with_overrides(**overrides)
    if settings.enumeration_cap < 1 or settings.jobs < 1 or settings.tol <= 0:
        raise ConfigError("enumeration_cap and jobs must be >= 1 and tol must be positive")
    return settings


def _coerce(name: str, value: Any, target: type) -> Any:
    try:
        if target is bool:
            if isinstance(value, str):
                return value.strip().lower() in ("1", "true", "yes", "on")
            return bool(value)
        if issubclass(target, Path):
            return Path(value).expanduser()
        if target is int and isinstance(value, float) and not value.is_integer():
            raise ValueError(f"{value} is not an integer")
        return target(value)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid value for {name}: {value!r} ({e})")
