"""Decision projects: criteria, alternatives, and the derivation pipeline.

A project bundles the per-criterion comparison tables, the anchors of each
value scale, the alternatives with their raw performances, and the
dummy-project ranking for the capacity.  Derived artifacts (scales,
capacity, evaluations, robustness indices) are cached and invalidated when
any upstream input changes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

import numpy as np

from . import smaa as smaa_mod
from .capacity import CapacityElicitation, DummyProjectRanking, capacity_from_dcm, choquet_value
from .errors import CardTableError, DomainExceededError, NotConsistentError, SchemaError
from .scales import ValueScale, build_interval_scale, interpolate
from .schema import (
    PROJECT_SCHEMA,
    _check_keys,
    _number,
    _require,
    dumps,
    table_from_dict,
    table_to_dict,
)
from .solver import (
    complete_missing,
    enumerate_completions,
    enumerate_precise_extractions,
    mixed_repair,
    sample_continuous_tables,
)
from .table import Interval, PairwiseTable, check_consistency


@dataclass
class Criterion:
    """One point of view: its level scale, comparison table and anchors.

    ``accepted_table`` records the precise consistent table the decision
    maker settled on when several are compatible with the judgments; when
    absent, the solver's canonical witness is used.
    """

    id: str
    table: PairwiseTable
    label: str | None = None
    anchors: tuple | None = None  # (p, u_p, q, u_q); defaults to (1, 0, t, 100)
    accepted_table: PairwiseTable | None = None

    def anchor_values(self) -> tuple:
        if self.anchors is not None:
            return self.anchors
        return (1, 0.0, self.table.t, 100.0)


#: A raw performance: {"level": k} on the criterion's own scale,
#: {"value": x} for numeric coordinates (interpolated), or
#: {"utility": u} when the score is already on the common scale.
Performance = Mapping[str, float]


@dataclass
class Alternative:
    id: str
    performances: dict
    label: str | None = None


@dataclass
class CapacitySpec:
    """Input half of the capacity elicitation: the declared interacting
    pairs, the ranking classes of dummy projects (worst first), the cards
    between classes, and the ratio z."""

    pairs: list
    classes: list
    cards: list
    z: float
    ell: float = 1.0
    sign_hints: dict = field(default_factory=dict)

    def ranking(self, criteria: Sequence[str]) -> DummyProjectRanking:
        return DummyProjectRanking(
            criteria=tuple(criteria),
            pairs=tuple(frozenset(p) for p in self.pairs),
            classes=tuple(
                tuple(frozenset(m) if not isinstance(m, str) else m for m in cls)
                for cls in self.classes
            ),
            cards=tuple(self.cards),
            z=self.z,
            ell=self.ell,
            sign_hints={frozenset(k): v for k, v in self.sign_hints.items()},
        )


class Project:
    """Mutable project with derived-artifact caching.

    Every mutation goes through a set_* method, which drops all cached
    derivations; cached values are therefore never stale.
    """

    def __init__(
        self,
        criteria: Sequence[Criterion],
        alternatives: Sequence[Alternative] = (),
        capacity_spec: CapacitySpec | None = None,
        name: str = "project",
    ):
        self.name = name
        self.criteria = list(criteria)
        self.alternatives = list(alternatives)
        self.capacity_spec = capacity_spec
        self._cache: dict[str, Any] = {}
        self.version = 0

    # -- mutation ------------------------------------------------------------

    def invalidate(self):
        self._cache.clear()
        self.version += 1

    def criterion(self, cid: str) -> Criterion:
        for c in self.criteria:
            if c.id == cid:
                return c
        raise KeyError(f"unknown criterion '{cid}'")

    def set_table(self, cid: str, table: PairwiseTable):
        crit = self.criterion(cid)
        crit.table = table
        crit.accepted_table = None
        self.invalidate()

    def set_accepted_table(self, cid: str, table: PairwiseTable):
        self.criterion(cid).accepted_table = table
        self.invalidate()

    def set_capacity_spec(self, spec: CapacitySpec):
        self.capacity_spec = spec
        self.invalidate()

    # -- per-criterion pipeline ------------------------------------------------

    def base_table(self, cid: str) -> PairwiseTable:
        """The precise consistent table used for the criterion's scale: the
        accepted one if recorded, otherwise the solver's canonical witness."""
        crit = self.criterion(cid)
        if crit.accepted_table is not None:
            return crit.accepted_table
        tbl = crit.table
        if tbl.is_exact():
            violations = check_consistency(tbl)
            if violations:
                raise NotConsistentError(violations)
            return tbl
        if not any(isinstance(c, Interval) for c in tbl.cells):
            result = complete_missing(tbl)
            if result.z:
                raise NotConsistentError([])
            return result.completion
        result = mixed_repair(tbl)
        if result.z:
            raise NotConsistentError([])
        return result.witness

    def variant_tables(self, cid: str) -> list[PairwiseTable]:
        """Every precise consistent table compatible with the criterion's
        judgments (a single table when they are already precise)."""
        tbl = self.criterion(cid).table
        if tbl.is_exact():
            violations = check_consistency(tbl)
            if violations:
                raise NotConsistentError(violations)
            return [tbl]
        if not any(isinstance(c, Interval) for c in tbl.cells):
            result = enumerate_completions(tbl)
            if not result.complete:
                raise DomainExceededError(
                    f"criterion '{cid}' admits infinitely many completions", result.domain_bound
                )
            return list(result.tables)
        return enumerate_precise_extractions(tbl)

    def scale_for(self, cid: str, table: PairwiseTable | None = None) -> ValueScale:
        crit = self.criterion(cid)
        p, u_p, q, u_q = crit.anchor_values()
        return build_interval_scale(table if table is not None else self.base_table(cid), p, q, u_p, u_q)

    def scales(self) -> dict[str, ValueScale]:
        if "scales" not in self._cache:
            self._cache["scales"] = {c.id: self.scale_for(c.id) for c in self.criteria}
        return self._cache["scales"]

    def utility_column(self, cid: str, scale: ValueScale) -> np.ndarray:
        """Utilities of every alternative on one criterion under one scale."""
        out = []
        for alt in self.alternatives:
            perf = alt.performances.get(cid)
            if perf is None:
                raise CardTableError(f"alternative '{alt.id}' has no performance on '{cid}'")
            if "utility" in perf:
                out.append(float(perf["utility"]))
            elif "level" in perf:
                out.append(scale.utility_of_level(int(perf["level"])))
            elif "value" in perf:
                out.append(interpolate(scale, float(perf["value"])))
            else:
                raise CardTableError(f"performance {perf!r} needs 'level', 'value' or 'utility'")
        return np.array(out)

    # -- aggregation ----------------------------------------------------------

    def capacity(self) -> CapacityElicitation:
        if self.capacity_spec is None:
            raise CardTableError("the project has no capacity ranking")
        if "capacity" not in self._cache:
            ranking = self.capacity_spec.ranking([c.id for c in self.criteria])
            self._cache["capacity"] = capacity_from_dcm(ranking)
        return self._cache["capacity"]

    def utility_matrix(self) -> np.ndarray:
        scales = self.scales()
        return np.column_stack([self.utility_column(c.id, scales[c.id]) for c in self.criteria])

    def evaluate(self) -> dict[str, float]:
        """Choquet value of every alternative under the base scales."""
        if "evaluation" not in self._cache:
            cap = self.capacity().capacity
            matrix = self.utility_matrix()
            self._cache["evaluation"] = {
                alt.id: choquet_value(matrix[i], cap) for i, alt in enumerate(self.alternatives)
            }
        return self._cache["evaluation"]

    def variant_columns(
        self,
        sample_criteria: Sequence[str] = (),
        n_samples: int = 0,
        seed: int | None = None,
    ) -> list[list[np.ndarray]]:
        """Per-criterion utility columns over all compatible tables; criteria
        in ``sample_criteria`` are sampled continuously (hit-and-run) instead
        of enumerated."""
        columns = []
        for crit in self.criteria:
            if crit.id in sample_criteria:
                if seed is None:
                    raise CardTableError("sampling requires a seed")
                tables = sample_continuous_tables(crit.table, n_samples, seed)
            else:
                tables = self.variant_tables(crit.id)
            columns.append([self.utility_column(crit.id, self.scale_for(crit.id, t)) for t in tables])
        return columns

    def smaa(
        self,
        mode: str = "enum",
        n_samples: int = 10_000,
        seed: int | None = None,
        sample_criteria: Sequence[str] = (),
        limit: int = smaa_mod.DEFAULT_COMBO_LIMIT,
    ) -> smaa_mod.SmaaResult:
        """Robustness indices over the compatible evaluations.

        ``enum`` mode takes the full Cartesian product of compatible tables.
        ``sample``mode replaces each criterion in ``sample_criteria`` by
        ``n_samples`` hit-and-run draws from its continuous polytope.
        """
        key = ("smaa", mode, n_samples, seed, tuple(sample_criteria), limit)
        if key not in self._cache:
            if mode == "enum":
                columns = self.variant_columns()
            elif mode == "sample":
                columns = self.variant_columns(sample_criteria, n_samples, seed)
            else:
                raise ValueError(f"unknown smaa mode '{mode}'")
            combos = smaa_mod.enumerate_combinations(columns, limit=limit)
            self._cache[key] = smaa_mod.run_smaa(combos, self.capacity().capacity, seed=seed)
        return self._cache[key]


# ---------------------------------------------------------------------------
# (de)serialization
# ---------------------------------------------------------------------------


def project_to_dict(project: Project) -> dict:
    def crit_dict(c: Criterion) -> dict:
        return {
            "id": c.id,
            "label": c.label,
            "table": table_to_dict(c.table),
            "anchors": list(c.anchors) if c.anchors else None,
            "accepted_table": table_to_dict(c.accepted_table) if c.accepted_table else None,
        }

    def cap_dict(spec: CapacitySpec | None) -> dict | None:
        if spec is None:
            return None
        return {
            "pairs": [sorted(p) for p in spec.pairs],
            "classes": [
                [m if isinstance(m, str) else sorted(m) for m in cls] for cls in spec.classes
            ],
            "cards": list(spec.cards),
            "z": spec.z,
            "ell": spec.ell,
            "sign_hints": {"+".join(sorted(k)): v for k, v in spec.sign_hints.items()},
        }

    return {
        "schema": PROJECT_SCHEMA,
        "name": project.name,
        "criteria": [crit_dict(c) for c in project.criteria],
        "alternatives": [
            {"id": a.id, "label": a.label, "performances": a.performances}
            for a in project.alternatives
        ],
        "capacity": cap_dict(project.capacity_spec),
    }


def project_from_dict(doc: Mapping) -> Project:
    _check_keys(doc, {"schema", "name", "criteria", "alternatives", "capacity"}, "")
    schema = _require(doc, "schema", "")
    if schema != PROJECT_SCHEMA:
        raise SchemaError(f"unsupported schema '{schema}'", "/schema")

    criteria = []
    for i, raw in enumerate(_require(doc, "criteria", "")):
        loc = f"/criteria/{i}"
        _check_keys(raw, {"id", "label", "table", "anchors", "accepted_table"}, loc)
        anchors = raw.get("anchors")
        criteria.append(
            Criterion(
                id=_require(raw, "id", loc),
                label=raw.get("label"),
                table=table_from_dict(_require(raw, "table", loc), f"{loc}/table"),
                anchors=tuple(anchors) if anchors else None,
                accepted_table=(
                    table_from_dict(raw["accepted_table"], f"{loc}/accepted_table")
                    if raw.get("accepted_table")
                    else None
                ),
            )
        )

    alternatives = []
    for i, raw in enumerate(_require(doc, "alternatives", "")):
        loc = f"/alternatives/{i}"
        _check_keys(raw, {"id", "label", "performances"}, loc)
        perfs = _require(raw, "performances", loc)
        for cid, perf in perfs.items():
            _check_keys(perf, {"level", "value", "utility"}, f"{loc}/performances/{cid}")
        alternatives.append(
            Alternative(id=_require(raw, "id", loc), label=raw.get("label"), performances=dict(perfs))
        )

    cap = doc.get("capacity")
    spec = None
    if cap is not None:
        loc = "/capacity"
        _check_keys(cap, {"pairs", "classes", "cards", "z", "ell", "sign_hints"}, loc)
        spec = CapacitySpec(
            pairs=[frozenset(p) for p in _require(cap, "pairs", loc)],
            classes=[
                [m if isinstance(m, str) else frozenset(m) for m in cls]
                for cls in _require(cap, "classes", loc)
            ],
            cards=list(_require(cap, "cards", loc)),
            z=_number(_require(cap, "z", loc), f"{loc}/z"),
            ell=_number(cap.get("ell", 1.0), f"{loc}/ell"),
            sign_hints={
                frozenset(k.split("+")): v for k, v in cap.get("sign_hints", {}).items()
            },
        )

    return Project(
        criteria=criteria,
        alternatives=alternatives,
        capacity_spec=spec,
        name=_require(doc, "name", ""),
    )


def save_project(project: Project, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(project_to_dict(project)))


def load_project(path) -> Project:
    with open(path, encoding="utf-8") as fh:
        return project_from_dict(json.load(fh))
