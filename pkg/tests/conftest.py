"""Shared fixtures: bundled data files and language bundles."""

from __future__ import annotations

from pathlib import Path

import pytest

from symground.grounding import data_root, load_bundle
from symground.linkgrammar import load_dictionary

DATA = data_root()


def data_text(*parts: str) -> str:
    return Path(DATA, *parts).read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def cat_dict():
    return load_dictionary(data_text("dictionaries", "cat-snake.dict"))


@pytest.fixture(scope="session")
def passive_dict():
    return load_dictionary(data_text("dictionaries", "cat-snake-passive.dict"))


@pytest.fixture(scope="session")
def minimal():
    return load_bundle("minimal-rcc")


@pytest.fixture(scope="session")
def extended():
    return load_bundle("extended-rcc-allen")


@pytest.fixture(scope="session")
def movement():
    return load_bundle("basic-movement")


@pytest.fixture(scope="session")
def perception_action():
    return load_bundle("perception-action")


def pytest_terminal_summary(terminalreporter):
    from verdicts import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES):
            terminalreporter.write_line(line)
