// Stale-view prevention: edits disable downstream panels until their
// recomputation lands.

import { describe, expect, it } from "vitest";

import { StaleTracker } from "../src/state";

describe("stale tracker", () => {
  it("starts with everything usable", () => {
    expect(new StaleTracker().stalePanels()).toEqual([]);
  });

  it("a table edit disables every downstream panel", () => {
    const tracker = new StaleTracker();
    tracker.markEdited("table");
    expect(tracker.stalePanels()).toEqual(["evaluation", "repairs", "scales", "smaa"]);
    expect(tracker.isStale("capacity")).toBe(false);
  });

  it("a ranking edit disables the capacity chain but not the table panels", () => {
    const tracker = new StaleTracker();
    tracker.markEdited("ranking");
    expect(tracker.stalePanels()).toEqual(["capacity", "evaluation", "smaa"]);
    expect(tracker.isStale("repairs")).toBe(false);
  });

  it("panels come back one by one as recomputations complete", () => {
    const tracker = new StaleTracker();
    tracker.markEdited("table");
    tracker.markFresh("scales");
    expect(tracker.isStale("scales")).toBe(false);
    expect(tracker.isStale("evaluation")).toBe(true);
    tracker.markFresh("evaluation");
    tracker.markFresh("smaa");
    tracker.markFresh("repairs");
    expect(tracker.stalePanels()).toEqual([]);
  });

  it("an edit during recomputation re-disables the panel", () => {
    const tracker = new StaleTracker();
    tracker.markEdited("table");
    tracker.markFresh("smaa");
    tracker.markEdited("table");
    expect(tracker.isStale("smaa")).toBe(true);
  });
});
