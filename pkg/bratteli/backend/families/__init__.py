"""
Graph family framework for the Bratteli toolkit.

This module provides the registry of graded graph families that
`build_family` can construct. It includes the abstract base class, the
built-in families and helpers to look them up or add new ones.
"""

from __future__ import annotations

from typing import Dict, Type

from bratteli.backend.errors import UnknownFamilyError

from .base import Family
from .chain import ChainFamily
from .young import DoubledYoungFamily, WalledYoungFamily, YoungFamily

_REGISTRY: Dict[str, Type[Family]] = {
    "chain": ChainFamily,
    "young": YoungFamily,
    "walled_young": WalledYoungFamily,
    "doubled_young": DoubledYoungFamily,
}


def _normalize(name: str) -> str:
    return name.lower().strip().replace("-", "_")


def get_family_class(name: str) -> Type[Family]:
    """Retrieve a family class by name.

    Names are case insensitive and accept dashes for underscores, so
    "Walled-Young" finds the walled Young family.

    Args:
        name: Family identifier

    Returns:
        Family class type

    Raises:
        UnknownFamilyError: If no family is registered under the name
    """
    key = _normalize(name)
    try:
        return _REGISTRY[key]
    except KeyError:
        known = ", ".join(sorted(_REGISTRY))
        raise UnknownFamilyError(f"unknown family {name!r} (known: {known})") from None


def is_registered(name: str) -> bool:
    """Whether a family is registered under the name."""
    return _normalize(name) in _REGISTRY


def family_names() -> list:
    """Registered family names in sorted order."""
    return sorted(_REGISTRY)


def register(name: str, cls: Type[Family]) -> None:
    """Register a new family class with the system.

    Args:
        name: Identifier for the family
        cls: Family class to register
    """
    _REGISTRY[_normalize(name)] = cls
