import logging
import os

import pytest

import nonassoclab
from nonassoclab.algebra import build_algebra
from nonassoclab.helper.exceptions import ConfigurationException, ParseError
from nonassoclab.helper.logger import configure_logger
from nonassoclab.helper.util import parse_expectations, resolve_seed
from nonassoclab.helper.yaml_util import load_spec_from_file, load_spec_from_string, ring_spec_errors

EXAMPLES = os.path.join(os.path.dirname(nonassoclab.__file__), "example_config")


def example(name):
    return os.path.join(EXAMPLES, name)


def test_include_resolves_relative_to_the_spec():
    spec = load_spec_from_file(example("h2_split_complex.yaml"))
    ring = spec["algebra"]["hermitian"]["ring"]
    assert ring["cayley_dickson"]["gammas"] == [1]
    algebra = build_algebra(spec["algebra"])
    assert algebra.dim == 4
    assert algebra.info["ring"].name == "split-complex"


def test_logger_level_is_normalised():
    spec = load_spec_from_file(example("custom_not_power_associative.yaml"))
    assert spec["logger"]["default"] == "WARNING"
    assert spec["element"] == {"a": 1}


@pytest.mark.parametrize(
    "name",
    [
        "bioctonions_right.yaml",
        "h2_reals_pair.yaml",
        "h3_octonions.yaml",
        "h3_reals.yaml",
        "h4_octonions.yaml",
        "spin5.yaml",
    ],
)
def test_examples_validate(name):
    assert load_spec_from_file(example(name))


def test_unknown_key_rejected():
    with pytest.raises(ParseError) as err:
        load_spec_from_string({"algebra": {"spin": {"dim": 5}}, "bogus": 1})
    assert err.value.location == "bogus"


def test_division_by_zero_in_coefficients():
    with pytest.raises(ParseError) as err:
        load_spec_from_string({"algebra": {"spin": {"dim": 3}}, "element": {"u1": "1/0"}})
    assert err.value.location.startswith("element")


def test_algebra_needs_one_kind():
    with pytest.raises(ParseError):
        load_spec_from_string({"algebra": {"spin": {"dim": 3}, "hermitian": {"ring": "reals", "n": 2}}})


def test_not_a_mapping():
    with pytest.raises(ParseError):
        load_spec_from_string(["algebra"])


def test_ring_spec_errors():
    assert ring_spec_errors("octonions") == []
    assert ring_spec_errors({"cayley_dickson": {"base": "reals", "gammas": [2]}})
    assert ring_spec_errors({"named": "reals", "table": {}})
    assert ring_spec_errors({"table": {"labels": ["1"], "mul": {"1*1": {"1": "x"}}}})


def test_missing_and_broken_files(tmp_path):
    with pytest.raises(ConfigurationException):
        load_spec_from_file(str(tmp_path / "missing.yaml"))
    broken = tmp_path / "broken.yaml"
    broken.write_text("algebra: [\n")
    with pytest.raises(ParseError) as err:
        load_spec_from_file(str(broken))
    assert "line" in str(err.value)
    empty = tmp_path / "empty.yaml"
    empty.write_text("")
    with pytest.raises(ParseError):
        load_spec_from_file(str(empty))


def test_seed_resolution(monkeypatch):
    monkeypatch.delenv("NONASSOC_LAB_SEED", raising=False)
    assert resolve_seed(7) == 7
    default = resolve_seed()
    monkeypatch.setenv("NONASSOC_LAB_SEED", "11")
    assert resolve_seed() == 11
    assert resolve_seed(default) == default
    monkeypatch.setenv("NONASSOC_LAB_SEED", "eleven")
    with pytest.raises(ConfigurationException):
        resolve_seed()


def test_expectations():
    assert parse_expectations(["jordan=holds", " level = boolean "]) == {"jordan": "holds", "level": "boolean"}
    assert parse_expectations(None) == {}
    with pytest.raises(ConfigurationException):
        parse_expectations(["jordan"])


def test_logger_section():
    root = logging.getLogger()
    spectral = logging.getLogger("nonassoclab.spectral")
    saved = root.level, spectral.level
    try:
        configure_logger({"default": "WARNING", "logs": {"nonassoclab.spectral": "DEBUG", "x": "LOUD"}}, debug=0)
        assert root.level == logging.WARNING
        assert spectral.level == logging.DEBUG
        configure_logger({}, debug=1)
        assert root.level == logging.DEBUG
    finally:
        root.setLevel(saved[0])
        spectral.setLevel(saved[1])
