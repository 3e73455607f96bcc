"""
virasoro_paths.base
~~~~~~~~~~~~~~~~~~~
This module implements the exceptions and the base Suite class of
virasoro_paths.

Created by the virasoro-paths developers on 2026-10-17.

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details
"""

import logging
from dataclasses import dataclass, field
from typing import Any

logger = logging.getLogger(__name__)


class VirasoroPathsError(Exception):
    pass


class NonExactDivisionError(VirasoroPathsError):
    pass


class ExponentDenominatorError(VirasoroPathsError):
    pass


class TruncationError(VirasoroPathsError):
    pass


class InvalidParametersError(VirasoroPathsError):
    pass


class ExcludedCaseError(InvalidParametersError):
    pass


class InvalidPathError(VirasoroPathsError):
    pass


class TransformError(VirasoroPathsError):
    pass


class UndefinedTransformError(TransformError):
    pass


class DecompositionError(TransformError):
    pass


class StabilityError(VirasoroPathsError):
    pass


class InconsistentSystemError(VirasoroPathsError):
    pass


@dataclass(frozen=True)
class CheckRecord:
    """
    One line of an identity report.

    Args:
        identity: Name of the identity family, e.g. "trinomial.urec1".
        indices: The parameters the identity was evaluated at.
        passed: Whether both sides agreed exactly.
        detail: (optional) Serialized sides of a failing comparison.
    """

    identity: str
    indices: dict
    passed: bool
    detail: dict | None = None

    def to_json(self) -> dict:
        record: dict[str, Any] = {
            "identity": self.identity,
            "indices": self.indices,
            "pass": self.passed,
        }
        if self.detail:
            record.update(self.detail)
        return record


@dataclass(frozen=True)
class Task:
    """A picklable unit of sweep work: `Suite` subclass name, method, kwargs."""

    suite: str
    method: str
    kwargs: dict = field(default_factory=dict)


class Suite:
    """
    Base class of every identity-checking class.

    Subclasses name their identity families in `IDENTITIES` and funnel every
    comparison through `_check`, which builds the report record.
    """

    BASE_NAME = ""
    IDENTITIES = {}

    def __init__(self):
        self.records = []

    def _get_identity(self, key):
        return self.BASE_NAME + self.IDENTITIES[key]

    def _indices(self, **indices):
        return {key: _jsonable(value) for key, value in indices.items()}

    def _check(self, key, indices, lhs, rhs=None, passed=None):
        """
        Record the comparison `lhs == rhs`, or a precomputed verdict.

        Args:
            key: Key of `IDENTITIES`.
            indices: Dict of parameters, already passed through `_indices`.
            lhs: Left side (QPoly, TruncatedSeries or plain value).
            rhs: (optional) Right side; omitted when `passed` is given.
            passed: (optional) Verdict for checks that are not equalities.

        Returns:
            The CheckRecord that was appended to `self.records`.
        """
        if passed is None:
            passed = lhs == rhs
        detail = None
        if not passed:
            detail = {"lhs": _jsonable(lhs), "rhs": _jsonable(rhs)}
            logger.warning("%s failed at %s", self._get_identity(key), indices)
        record = CheckRecord(self._get_identity(key), indices, bool(passed), detail)
        self.records.append(record)
        return record

    def _set_attrs_to_values(self, records):
        """
        Expose the outcome of the last batch of checks as attributes.

        - e.g.
        >>> import virasoro_paths as vp
        >>> suite = vp.TrinomialIdentities()
        >>> suite.symmetry(n_values=[2], d_values=[3], L_values=[5])
        >>> suite.passed  # instead of all(r.passed for r in records)
        """
        self.last = list(records)
        self.passed = all(record.passed for record in records)
        self.failures = [record for record in records if not record.passed]

    def tasks(self, config):
        """Yield the independent `Task`s this suite runs for a `SweepConfig`."""
        return iter(())

    def run(self, method, **kwargs):
        return getattr(self, method)(**kwargs)


def _jsonable(value):
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)
