"""The :class:`BoundCheck` record used by every inequality check."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParameterError

EQ_TOL = 1e-9

# relation -> whether the bound is strict
RELATIONS = {">=": False, ">": True, "<=": False, "<": True}


@dataclass(frozen=True)
class BoundCheck:
    """One instance of a named inequality ``lhs <relation> rhs``.

    ``slack`` is signed so that ``slack >= 0`` means the inequality holds.
    ``equality`` is the numeric verdict ``|slack| <= 1e-9``;
    ``equality_predicted`` is the structural prediction of the equality case
    (``None`` when the statement makes no prediction).
    """

    name: str
    lhs: float
    rhs: float
    relation: str
    equality_predicted: bool | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise InvalidParameterError(f"unknown relation {self.relation!r}")

    @property
    def slack(self) -> float:
        if self.relation in (">=", ">"):
            return float(self.lhs - self.rhs)
        return float(self.rhs - self.lhs)

    @property
    def strict(self) -> bool:
        return RELATIONS[self.relation]

    @property
    def equality(self) -> bool:
        return abs(self.slack) <= EQ_TOL

    @property
    def holds(self) -> bool:
        if self.strict:
            return self.slack > EQ_TOL
        return self.slack >= -EQ_TOL

    @property
    def status(self) -> str:
        """``ok``/``strict-ok``/``equality`` when holding, ``boundary`` for a
        strict bound met with equality, ``violated`` otherwise."""
        s = self.slack
        if s < -EQ_TOL:
            return "violated"
        if abs(s) <= EQ_TOL:
            return "boundary" if self.strict else "equality"
        return "strict-ok" if self.strict else "ok"

    @property
    def agrees(self) -> bool:
        """Numeric equality matches the structural prediction (vacuous if none)."""
        return self.equality_predicted is None or self.equality_predicted == self.equality
