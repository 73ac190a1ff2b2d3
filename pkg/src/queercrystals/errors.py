"""Exceptions shared across the package."""


class VerificationError(Exception):
    """A structural claim that should hold by theorem failed on concrete data."""


class StructureError(Exception):
    """An operation produced data violating a maintained invariant."""
