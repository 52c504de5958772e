// Stale-view prevention: any edit disables every downstream panel until
// its recomputation lands.  Panels form the pipeline
//   table -> repairs
//   table -> scales -> evaluation -> smaa
//   ranking -> capacity -> evaluation -> smaa
// and a panel is usable only while no upstream edit is pending on it.

export type Panel = "repairs" | "scales" | "capacity" | "evaluation" | "smaa";
export type EditSource = "table" | "ranking";

const DOWNSTREAM: Record<EditSource, Panel[]> = {
  table: ["repairs", "scales", "evaluation", "smaa"],
  ranking: ["capacity", "evaluation", "smaa"],
};

export class StaleTracker {
  private stale = new Set<Panel>();

  markEdited(source: EditSource): void {
    for (const panel of DOWNSTREAM[source]) {
      this.stale.add(panel);
    }
  }

  markFresh(panel: Panel): void {
    this.stale.delete(panel);
  }

  isStale(panel: Panel): boolean {
    return this.stale.has(panel);
  }

  stalePanels(): Panel[] {
    return [...this.stale].sort();
  }
}
