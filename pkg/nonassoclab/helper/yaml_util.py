import logging
import os
from collections import OrderedDict
from typing import Any, Mapping

from cerberus import Validator
from yaml import MarkedYAMLError, SafeLoader, YAMLError, load

from nonassoclab.const import (
    BASE,
    CAYLEY_DICKSON,
    GAMMAS,
    INVOL,
    INVOLUTION,
    LABELS,
    LEFT,
    MUL,
    NAME,
    NAMED,
    RIGHT,
    TABLE,
    TENSOR,
    UNIT,
)
from nonassoclab.helper.exceptions import ConfigurationException, ParseError
from nonassoclab.scalar import parse_rational, parse_scalar

schema_file = os.path.join(os.path.dirname(__file__), "../schema/schema.yaml")
_LOGGER = logging.getLogger(__name__)

RING_KEYS = {
    NAMED: {NAMED, INVOLUTION},
    CAYLEY_DICKSON: {CAYLEY_DICKSON},
    TENSOR: {TENSOR},
    TABLE: {TABLE},
}


class LabLoader(SafeLoader):
    """Loader which support for include in yaml files."""

    def __init__(self, stream):
        self._root = os.path.split(getattr(stream, "name", ""))[0] or os.getcwd()
        super().__init__(stream)

    def include(self, node):
        filename = os.path.join(self._root, self.construct_scalar(node))
        with open(filename, "r") as f:
            return load(f, LabLoader)


LabLoader.add_constructor("!include", LabLoader.include)


def _yaml_error(exception: YAMLError) -> str:
    mark = getattr(exception, "problem_mark", None)
    if mark is None:
        return ""
    return f" at line {mark.line + 1} column {mark.column + 1}"


def load_yaml_file(filename: str) -> Any:
    with open(filename, "r") as stream:
        try:
            return load(stream, Loader=LabLoader) or OrderedDict()
        except MarkedYAMLError as exception:
            raise ParseError(f"Error loading yaml{_yaml_error(exception)}", filename) from exception
        except YAMLError as exception:
            raise ParseError("Error loading yaml", filename) from exception


class CustomValidator(Validator):
    """Custom validator of cerberus"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.allow_unknown = False

    def _normalize_coerce_str(self, value):
        """Convert value to string."""
        return str(value)

    def _normalize_coerce_upper(self, value):
        """Convert string to uppercase."""
        if isinstance(value, str):
            return value.upper()
        return value

    def _check_with_scalar(self, field, value):
        try:
            parse_scalar(value, str(field))
        except ParseError as err:
            self._error(field, str(err))

    def _check_with_one_key(self, field, value):
        if isinstance(value, Mapping) and len(value) != 1:
            self._error(field, f"needs exactly one kind, got {sorted(value) or 'none'}")

    def _check_with_ring_spec(self, field, value):
        for location, message in ring_spec_errors(value, str(field)):
            self._error(field, f"{location}: {message}")


def ring_spec_errors(value: Any, location: str = "ring") -> list:
    """Structural problems in a (possibly nested) ring spec."""
    if isinstance(value, str):
        return []
    if not isinstance(value, Mapping):
        return [(location, "must be a ring name or a mapping")]
    kinds = [k for k in RING_KEYS if k in value]
    if len(kinds) != 1:
        return [(location, f"needs exactly one of {', '.join(RING_KEYS)}")]
    kind = kinds[0]
    extra = set(value) - RING_KEYS[kind]
    if extra:
        return [(location, f"unknown keys {sorted(extra)}")]
    body = value[kind]
    where = f"{location}.{kind}"
    if kind == NAMED:
        return [] if isinstance(body, str) else [(where, "must be a ring name")]
    if not isinstance(body, Mapping):
        return [(where, "must be a mapping")]
    if kind == CAYLEY_DICKSON:
        errors = ring_spec_errors(body.get(BASE, "reals"), f"{where}.{BASE}")
        if not all(isinstance(g, int) and g in (-1, 1) for g in body.get(GAMMAS, [])):
            errors.append((f"{where}.{GAMMAS}", "entries must be -1 or 1"))
        return errors
    if kind == TENSOR:
        return ring_spec_errors(body.get(LEFT), f"{where}.{LEFT}") + ring_spec_errors(
            body.get(RIGHT), f"{where}.{RIGHT}"
        )
    return _table_errors(body, where)


def _table_errors(body: Mapping, where: str) -> list:
    if not isinstance(body.get(LABELS), list) or not body[LABELS]:
        return [(f"{where}.{LABELS}", "must be a non-empty list")]
    errors = []
    for section in (MUL, INVOL):
        for key, image in (body.get(section) or {}).items():
            for label, raw in (image or {}).items():
                try:
                    parse_rational(raw)
                except ParseError as err:
                    errors.append((f"{where}.{section}[{key}].{label}", str(err)))
    unknown = set(body) - {NAME, LABELS, UNIT, MUL, INVOL}
    if unknown:
        errors.append((where, f"unknown keys {sorted(unknown)}"))
    return errors


def _first_error(errors: Any, path: str = "") -> ParseError:
    """Flatten the nested cerberus error tree to its first leaf."""
    if isinstance(errors, Mapping):
        field, value = next(iter(errors.items()))
        return _first_error(value, f"{path}.{field}" if path else str(field))
    if isinstance(errors, list):
        for item in errors:
            if isinstance(item, Mapping):
                return _first_error(item, path)
        return ParseError(str(errors[0]) if errors else "invalid", path)
    return ParseError(str(errors), path)


def load_spec_from_string(document: Any) -> dict:
    """Normalise and validate an already parsed spec document."""
    if not isinstance(document, Mapping):
        raise ParseError("Spec document must be a mapping", "<root>")
    schema = load_yaml_file(schema_file)
    v = CustomValidator(schema)
    doc = v.normalized(document, always_return_document=True)
    if not v.validate(doc):
        _LOGGER.debug("Spec validation errors: %s", v.errors)
        raise _first_error(v.errors)
    return v.document


def load_spec_from_file(spec_file: str) -> dict:
    try:
        spec_yaml = load_yaml_file(spec_file)
    except FileNotFoundError as err:
        raise ConfigurationException(f"Spec file {spec_file} not found") from err
    if not spec_yaml:
        raise ParseError("Empty spec file", spec_file)
    return load_spec_from_string(spec_yaml)

