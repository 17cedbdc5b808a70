"""Option validation and the line-oriented spec file format.

    # comments are allowed
    k = 3
    w2 = "a1"
    w3 = "a2"
    r = [1, 1, 1]

Values are JSON. `c<i>` keys give the same data in commutator form, [a_i, t] = w_i.
"""
from __future__ import annotations

import json
import logging
import os
import re
from typing import Any, Mapping

import voluptuous as vol

from .const import (
    CONF_RANK,
    CONF_POWERS,
    CONF_TWIST_PREFIX,
    CONF_COMMUTATOR_PREFIX,
    CONF_MAX_LENGTH,
    CONF_MAX_EXPONENT,
    CONF_WINDOW,
    CONF_MAX_DEGREE,
    CONF_MAX_ENTRIES,
    CONF_MAX_CANDIDATES,
    DEFAULT_OPTIONS,
    PRESET_PREFIX,
)
from .expressions import parse_word
from .groups import GroupSpec, preset, validate_spec
from .membership import SubgroupSpec, validate_subgroup
from .utils import Limits, SpecError
from .words import EMPTY, format_word

_LOGGER = logging.getLogger(__name__)

_POSITIVE = vol.All(vol.Coerce(int), vol.Range(min=1))

OPTIONS_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_MAX_LENGTH, default=DEFAULT_OPTIONS[CONF_MAX_LENGTH]): _POSITIVE,
        vol.Optional(CONF_MAX_EXPONENT, default=DEFAULT_OPTIONS[CONF_MAX_EXPONENT]): _POSITIVE,
        vol.Optional(CONF_WINDOW, default=DEFAULT_OPTIONS[CONF_WINDOW]): vol.All(vol.Coerce(int), vol.Range(min=0)),
        vol.Optional(CONF_MAX_DEGREE, default=DEFAULT_OPTIONS[CONF_MAX_DEGREE]): _POSITIVE,
        vol.Optional(CONF_MAX_ENTRIES, default=DEFAULT_OPTIONS[CONF_MAX_ENTRIES]): _POSITIVE,
        vol.Optional(CONF_MAX_CANDIDATES, default=DEFAULT_OPTIONS[CONF_MAX_CANDIDATES]): _POSITIVE,
    }
)

SPEC_FILE_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_RANK): vol.All(int, vol.Range(min=1)),
        vol.Optional(CONF_POWERS): [vol.All(int, vol.Range(min=0))],
    },
    extra=vol.ALLOW_EXTRA,
)

_TWIST_KEY = re.compile(rf"^([{CONF_TWIST_PREFIX}{CONF_COMMUTATOR_PREFIX}])(\d+)$")
_INLINE_POWERS = re.compile(r"^\s*r\s*=\s*\[?\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]?\s*$")


def limits_from_options(options: Mapping[str, Any]) -> Limits:
    try:
        options = OPTIONS_SCHEMA(dict(options))
    except vol.Invalid as err:
        raise SpecError(f"invalid option: {err}") from err
    return Limits(**options)


def _parse_lines(text: str) -> dict[str, Any]:
    values: dict[str, Any] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise SpecError(f"line {number}: expected 'key = value'")
        if key in values:
            raise SpecError(f"line {number}: duplicate key '{key}'")
        try:
            values[key] = json.loads(raw.strip())
        except json.JSONDecodeError as err:
            raise SpecError(f"line {number}: invalid value for '{key}': {err.msg}") from err
    return values


def parse_spec_text(text: str) -> tuple[GroupSpec, SubgroupSpec | None]:
    values = _parse_lines(text)
    try:
        values = SPEC_FILE_SCHEMA(values)
    except vol.Invalid as err:
        raise SpecError(f"invalid spec file: {err}") from err

    k = values[CONF_RANK]
    twists = [EMPTY] * k
    seen: set[int] = set()
    for key, value in values.items():
        if key in (CONF_RANK, CONF_POWERS):
            continue
        match = _TWIST_KEY.match(key)
        if not match:
            raise SpecError(f"unknown key '{key}'")
        i = int(match.group(2))
        if not 1 <= i <= k:
            raise SpecError(f"'{key}' is outside 1..{k}")
        if i in seen:
            raise SpecError(f"twisting word {i} given twice")
        if not isinstance(value, str):
            raise SpecError(f"'{key}' must be a quoted word")
        seen.add(i)
        twists[i - 1] = parse_word(value)

    spec = validate_spec(k, twists)
    sub = validate_subgroup(spec, values[CONF_POWERS]) if CONF_POWERS in values else None
    return spec, sub


def dump_spec_text(spec: GroupSpec, sub: SubgroupSpec | None = None) -> str:
    lines = [f"{CONF_RANK} = {spec.k}"]
    for i in range(2, spec.k + 1):
        lines.append(f"{CONF_TWIST_PREFIX}{i} = {json.dumps(format_word(spec.twist(i)))}")
    if sub is not None:
        lines.append(f"{CONF_POWERS} = {json.dumps(list(sub.r))}")
    return "\n".join(lines) + "\n"


def load_spec_file(path: str) -> tuple[GroupSpec, SubgroupSpec | None]:
    with open(path) as f:
        return parse_spec_text(f.read())


def resolve_group(value: str) -> tuple[GroupSpec, SubgroupSpec | None]:
    """A preset name such as hydra3, or a spec file path"""
    if os.path.isfile(value):
        return load_spec_file(value)
    if value.startswith(PRESET_PREFIX):
        return preset(value), None
    raise SpecError(f"'{value}' is neither a preset nor a spec file")


def resolve_subgroup(spec: GroupSpec, value: str | None, default: SubgroupSpec | None = None) -> SubgroupSpec:
    """Inline powers ('r=1,0'), a spec file carrying r, or the default"""
    if value is None:
        return default if default is not None else validate_subgroup(spec, (1,) * spec.k)
    match = _INLINE_POWERS.match(value)
    if match:
        return validate_subgroup(spec, [int(part) for part in match.group(1).split(",")])
    if os.path.isfile(value):
        file_spec, sub = load_spec_file(value)
        if sub is None:
            raise SpecError(f"{value} does not define r")
        if file_spec != spec:
            raise SpecError(f"{value} describes {file_spec.name}, not {spec.name}")
        return sub
    raise SpecError(f"cannot read subgroup '{value}'")
