"""JSON-over-HTTP session service for the elicitation workflow.

Projects live in memory under short ids; every mutation of a project is
serialized by a per-project lock and drops its derived caches, so responses
are never stale.  All request and response bodies follow the schema in
docs/schema.md; errors come back as {code, message, location} with the
matching HTTP status.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .errors import (
    CardTableError,
    ComboExplosionError,
    DomainExceededError,
    EmptyPolytopeError,
    InfeasibleError,
    NotConsistentError,
)
from .project import Project, project_from_dict, project_to_dict
from .schema import table_from_dict, table_to_dict
from .solver import (
    complete_missing,
    enumerate_completions,
    enumerate_precise_extractions,
    enumerate_repairs,
    interval_repair,
    mixed_repair,
)
from .table import Interval, Missing, PairwiseTable, check_consistency


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, location: str = ""):
        self.status = status
        self.body = {"code": code, "message": message, "location": location}
        super().__init__(message)


@dataclass
class StoredProject:
    project: Project
    lock: threading.Lock = field(default_factory=threading.Lock)
    repairs: dict = field(default_factory=dict)  # criterion id -> (version, [solutions])


def _table_kind(tbl: PairwiseTable) -> str:
    has_interval = any(isinstance(c, Interval) for c in tbl.cells)
    has_missing = any(isinstance(c, Missing) for c in tbl.cells)
    if has_interval and has_missing:
        return "mixed"
    if has_interval:
        return "interval"
    if has_missing:
        return "missing"
    return "exact"


def create_app() -> FastAPI:
    app = FastAPI(title="cardtable session service")
    store: dict[str, StoredProject] = {}

    @app.exception_handler(ApiError)
    async def handle_api_error(_: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content=exc.body)

    @app.exception_handler(CardTableError)
    async def handle_domain_error(_: Request, exc: CardTableError):
        status = 400
        code = "validation"
        if isinstance(exc, (InfeasibleError, EmptyPolytopeError, NotConsistentError,
                            DomainExceededError, ComboExplosionError)):
            status = 422
            code = "infeasible" if isinstance(exc, (InfeasibleError, EmptyPolytopeError)) else "unprocessable"
        location = getattr(exc, "location", "")
        return JSONResponse(
            status_code=status,
            content={"code": code, "message": str(exc), "location": location},
        )

    def get_store(project_id: str) -> StoredProject:
        try:
            return store[project_id]
        except KeyError:
            raise ApiError(404, "not_found", f"unknown project '{project_id}'")

    def get_criterion(stored: StoredProject, cid: str):
        try:
            return stored.project.criterion(cid)
        except KeyError:
            raise ApiError(404, "not_found", f"unknown criterion '{cid}'")

    # -- project lifecycle -------------------------------------------------

    @app.post("/projects", status_code=201)
    def create_project(body: dict | None = None):
        if body:
            project = project_from_dict(body)
        else:
            project = Project(criteria=[], name="untitled")
        project_id = uuid.uuid4().hex[:12]
        store[project_id] = StoredProject(project=project)
        return {"id": project_id, "version": project.version}

    @app.get("/projects/{project_id}")
    def read_project(project_id: str):
        stored = get_store(project_id)
        return {"id": project_id, "version": stored.project.version,
                "project": project_to_dict(stored.project)}

    @app.put("/projects/{project_id}")
    def replace_project(project_id: str, body: dict):
        stored = get_store(project_id)
        with stored.lock:
            project = project_from_dict(body)
            project.version = stored.project.version + 1
            stored.project = project
            stored.repairs.clear()
        return {"id": project_id, "version": stored.project.version}

    # -- tables --------------------------------------------------------------

    @app.put("/projects/{project_id}/criteria/{cid}/table")
    def put_table(project_id: str, cid: str, body: dict):
        stored = get_store(project_id)
        with stored.lock:
            get_criterion(stored, cid)
            stored.project.set_table(cid, table_from_dict(body))
            stored.repairs.pop(cid, None)
            return {"ok": True, "version": stored.project.version}

    @app.post("/projects/{project_id}/criteria/{cid}/check")
    def check(project_id: str, cid: str):
        stored = get_store(project_id)
        with stored.lock:
            crit = get_criterion(stored, cid)
            kind = _table_kind(crit.table)
            if kind == "exact":
                violations = check_consistency(crit.table)
                return {
                    "kind": kind,
                    "consistent": not violations,
                    "violations": [
                        {"p": v.p, "k": v.k, "q": v.q, "lhs": v.lhs, "rhs": v.rhs}
                        for v in violations
                    ],
                }
            if kind == "missing":
                result = complete_missing(crit.table)
                flagged = sorted(result.flagged)
            else:
                result = (interval_repair if kind == "interval" else mixed_repair)(crit.table)
                flagged = sorted(result.modified)
            return {
                "kind": kind,
                "consistent": result.z == 0,
                "z": result.z,
                "flagged": [list(pq) for pq in flagged],
            }

    @app.post("/projects/{project_id}/criteria/{cid}/repairs")
    def repairs(project_id: str, cid: str):
        stored = get_store(project_id)
        with stored.lock:
            crit = get_criterion(stored, cid)
            kind = _table_kind(crit.table)
            if kind == "exact":
                solutions = [s.to_dict() for s in enumerate_repairs(crit.table)]
            elif kind == "missing":
                result = complete_missing(crit.table)
                solutions = [{
                    "z": result.z,
                    "modified": sorted(list(pq) for pq in result.flagged),
                    "deltas": {f"{p},{q}": v for (p, q), v in sorted(result.deltas.items())},
                    "table": table_to_dict(result.completion),
                }]
            else:
                result = (interval_repair if kind == "interval" else mixed_repair)(crit.table)
                solutions = [{
                    "z": result.z,
                    "modified": sorted(list(pq) for pq in result.modified),
                    "new_bounds": {
                        f"{p},{q}": list(b) for (p, q), b in sorted(result.new_bounds.items())
                    },
                    "table": table_to_dict(result.witness),
                }]
            stored.repairs[cid] = (stored.project.version, solutions, kind)
            return {"repairs": solutions, "version": stored.project.version}

    @app.post("/projects/{project_id}/criteria/{cid}/repairs/{k}/apply")
    def apply_repair(project_id: str, cid: str, k: int):
        stored = get_store(project_id)
        with stored.lock:
            crit = get_criterion(stored, cid)
            cached = stored.repairs.get(cid)
            if cached is None or cached[0] != stored.project.version:
                raise ApiError(409, "stale", "repairs were computed for an older table version")
            version, solutions, kind = cached
            if not 0 <= k < len(solutions):
                raise ApiError(404, "not_found", f"no repair #{k}")
            chosen = solutions[k]
            if kind == "exact" or kind == "missing":
                stored.project.set_table(cid, table_from_dict(chosen["table"]))
            else:
                updates = {}
                for key, (lo, hi) in chosen.get("new_bounds", {}).items():
                    p, q = (int(x) for x in key.split(","))
                    updates[(p, q)] = Interval(lo, hi)
                stored.project.set_table(cid, crit.table.replace_cells(updates))
            stored.repairs.pop(cid, None)
            return {"ok": True, "version": stored.project.version}

    @app.post("/projects/{project_id}/criteria/{cid}/completions")
    def completions(project_id: str, cid: str, body: dict | None = None):
        stored = get_store(project_id)
        body = body or {}
        offset = int(body.get("offset", 0))
        limit = int(body.get("limit", 100))
        with stored.lock:
            crit = get_criterion(stored, cid)
            kind = _table_kind(crit.table)
            complete = True
            if kind == "exact":
                violations = check_consistency(crit.table)
                if violations:
                    raise ApiError(422, "inconsistent", "the table needs a repair first")
                tables = [crit.table]
            elif kind == "missing":
                result = enumerate_completions(crit.table)
                tables, complete = list(result.tables), result.complete
            else:
                tables = enumerate_precise_extractions(crit.table)
            page = tables[offset:offset + limit]
            next_offset = offset + len(page)
            return {
                "total": len(tables),
                "offset": offset,
                "next_offset": next_offset if next_offset < len(tables) else None,
                "complete": complete,
                "tables": [table_to_dict(t) for t in page],
            }

    # -- derivations -----------------------------------------------------------

    @app.post("/projects/{project_id}/scales")
    def scales(project_id: str):
        stored = get_store(project_id)
        with stored.lock:
            return {
                "version": stored.project.version,
                "scales": {cid: s.to_dict() for cid, s in stored.project.scales().items()},
            }

    @app.post("/projects/{project_id}/capacity")
    def capacity(project_id: str):
        stored = get_store(project_id)
        with stored.lock:
            el = stored.project.capacity()
            spec = stored.project.capacity_spec
            return {
                "version": stored.project.version,
                "capacity": el.capacity.to_dict(),
                "z": spec.z,
                "ell": spec.ell,
                "total_corrected_value": el.total_w_bar,
                "project_values": {_key(k): v for k, v in el.w.items()},
                "corrected_values": {_key(k): v for k, v in el.w_bar.items()},
                "project_mu": {_key(k): v for k, v in el.mu.items()},
                "violations": [
                    {"criterion": v.criterion, "partners": sorted(v.subset), "value": v.value}
                    for v in el.violations
                ],
                "sign_mismatches": [
                    {"pair": sorted(pair), "hint": hint, "m": m}
                    for pair, hint, m in el.sign_mismatches
                ],
            }

    @app.post("/projects/{project_id}/evaluate")
    def evaluate(project_id: str):
        stored = get_store(project_id)
        with stored.lock:
            values = stored.project.evaluate()
            ranking = sorted(values, key=lambda a: -values[a])
            return {"version": stored.project.version, "values": values, "ranking": ranking}

    @app.post("/projects/{project_id}/smaa")
    def smaa(project_id: str, body: dict | None = None):
        stored = get_store(project_id)
        body = body or {}
        mode = body.get("mode", "enum")
        if mode not in ("enum", "sample"):
            raise ApiError(400, "validation", f"unknown mode '{mode}'", "/mode")
        seed = body.get("seed")
        if mode == "sample" and seed is None:
            raise ApiError(400, "validation", "sampling requires a seed", "/seed")
        with stored.lock:
            result = stored.project.smaa(
                mode=mode,
                n_samples=int(body.get("n", 10_000)),
                seed=seed,
                sample_criteria=body.get("sample_criteria", ()),
            )
            return {
                "version": stored.project.version,
                "alternatives": [a.id for a in stored.project.alternatives],
                **result.to_dict(),
            }

    return app


def _key(k) -> str:
    return k if isinstance(k, str) else "+".join(sorted(k))


app = create_app()
