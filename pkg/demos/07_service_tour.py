"""A scripted tour of the HTTP session service.

The same workflow the browser UI drives: create a project, watch a
contradiction surface, choose among the proposed repairs, and read the
downstream numbers -- every figure originating server-side.
(Uses the in-process test client; `uvicorn cardtable.service:app` serves
the same API over a real socket.)
"""

from fastapi.testclient import TestClient

from cardtable.project import project_to_dict
from cardtable.quarry import inconsistent_example, quarry_project
from cardtable.schema import table_to_dict
from cardtable.service import create_app

client = TestClient(create_app())

print("== a one-criterion project with a contradictory table ==")
doc = {
    "schema": "cardtable/project@1", "name": "demo",
    "criteria": [{"id": "c1", "label": None, "table": table_to_dict(inconsistent_example()),
                  "anchors": None, "accepted_table": None}],
    "alternatives": [], "capacity": None,
}
pid = client.post("/projects", json=doc).json()["id"]
print(f"created project {pid}")

check = client.post(f"/projects/{pid}/criteria/c1/check").json()
print(f"check: consistent = {check['consistent']}; "
      f"{len(check['violations'])} violated triples, e.g. {check['violations'][0]}")

repairs = client.post(f"/projects/{pid}/criteria/c1/repairs").json()["repairs"]
print(f"{len(repairs)} minimal repairs proposed; applying #0 "
      f"(z = {repairs[0]['z']}, cells {repairs[0]['modified']})")
client.post(f"/projects/{pid}/criteria/c1/repairs/0/apply")
print("after apply:", client.post(f"/projects/{pid}/criteria/c1/check").json())

print("\n== the full quarry project over the wire ==")
qid = client.post("/projects", json=project_to_dict(quarry_project())).json()["id"]
scales = client.post(f"/projects/{qid}/scales").json()["scales"]
print("unit values:", {cid: round(s["alpha"], 3) for cid, s in scales.items()})
capacity = client.post(f"/projects/{qid}/capacity").json()
print("capacity valid:", not capacity["violations"])
evaluation = client.post(f"/projects/{qid}/evaluate").json()
print("ranking:", " > ".join(evaluation["ranking"]))
smaa = client.post(f"/projects/{qid}/smaa", json={"mode": "enum"}).json()
print(f"robustness over {smaa['combination_count']} combinations: "
      f"b1 = {dict(zip(smaa['alternatives'], (row[0] for row in smaa['b'])))}")
