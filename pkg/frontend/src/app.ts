// Browser wiring: binds the pure view renderers to the session service.
// One project per browser session; every edit goes to the service, every
// number on screen comes back from it.

import { SessionClient } from "./api";
import { StaleTracker } from "./state";
import type { CheckResult, RepairsResult, TableDoc } from "./types";
import { renderCapacityTable } from "./views/capacityWizard";
import { renderDashboard } from "./views/dashboard";
import { renderRepairChooser } from "./views/repairChooser";
import { renderScaleView } from "./views/scaleView";
import { renderTableEditor } from "./views/tableEditor";

interface Mount {
  editor: HTMLElement;
  repairs: HTMLElement;
  scales: HTMLElement;
  capacity: HTMLElement;
  dashboard: HTMLElement;
}

export class App {
  private tables = new Map<string, TableDoc>();
  private checks = new Map<string, CheckResult>();
  private repairsByCriterion = new Map<string, RepairsResult>();
  private stale = new StaleTracker();
  private criterion = "";

  constructor(
    private client: SessionClient,
    private projectId: string,
    private mount: Mount,
  ) {}

  async openCriterion(criterion: string, table: TableDoc): Promise<void> {
    this.criterion = criterion;
    this.tables.set(criterion, table);
    await this.refreshCheck();
  }

  private async refreshCheck(): Promise<void> {
    const check = await this.client.check(this.projectId, this.criterion);
    this.checks.set(this.criterion, check);
    this.renderEditor();
    if (!check.consistent) {
      const repairs = await this.client.repairs(this.projectId, this.criterion);
      this.repairsByCriterion.set(this.criterion, repairs);
      this.mount.repairs.innerHTML = renderRepairChooser(repairs);
      this.stale.markFresh("repairs");
      this.bindRepairButtons();
    } else {
      this.mount.repairs.innerHTML = "";
    }
  }

  private renderEditor(): void {
    const table = this.tables.get(this.criterion)!;
    const check = this.checks.get(this.criterion) ?? null;
    this.mount.editor.innerHTML = renderTableEditor(table, check);
    for (const input of this.mount.editor.querySelectorAll<HTMLInputElement>("input")) {
      input.addEventListener("change", () => void this.onCellEdited(input));
    }
    this.applyStaleness();
  }

  private async onCellEdited(input: HTMLInputElement): Promise<void> {
    const p = Number(input.dataset.p);
    const q = Number(input.dataset.q);
    const table = structuredClone(this.tables.get(this.criterion)!);
    const cell = table.cells.find((c) => c.p === p && c.q === q)!;
    const value = Number(input.value);
    if (cell.kind === "exact") cell.cards = value;
    else if (cell.kind === "interval") {
      if (input.classList.contains("lo")) cell.lo = value;
      else cell.hi = value;
    }
    this.stale.markEdited("table");
    this.applyStaleness();
    await this.client.putTable(this.projectId, this.criterion, table);
    this.tables.set(this.criterion, table);
    await this.refreshCheck();
  }

  private bindRepairButtons(): void {
    for (const button of this.mount.repairs.querySelectorAll<HTMLButtonElement>("button.apply")) {
      button.addEventListener("click", () => {
        const index = Number(button.dataset.repairIndex);
        void this.applyRepair(index);
      });
    }
  }

  private async applyRepair(index: number): Promise<void> {
    this.stale.markEdited("table");
    this.applyStaleness();
    await this.client.applyRepair(this.projectId, this.criterion, index);
    const chosen = this.repairsByCriterion.get(this.criterion)!.repairs[index];
    this.tables.set(this.criterion, chosen.table);
    await this.refreshCheck();
    await this.refreshDownstream();
  }

  async refreshDownstream(): Promise<void> {
    const scales = await this.client.scales(this.projectId);
    this.mount.scales.innerHTML = Object.entries(scales.scales)
      .map(([cid, scale]) => {
        const table = this.tables.get(cid);
        return table ? renderScaleView(cid, table, scale) : "";
      })
      .join("");
    this.stale.markFresh("scales");

    const capacity = await this.client.capacity(this.projectId);
    this.mount.capacity.innerHTML = renderCapacityTable(capacity);
    this.stale.markFresh("capacity");

    const evaluation = await this.client.evaluate(this.projectId);
    this.stale.markFresh("evaluation");
    const smaa = await this.client.smaa(this.projectId, { mode: "enum" });
    this.mount.dashboard.innerHTML = renderDashboard(smaa, evaluation);
    this.stale.markFresh("smaa");
    this.applyStaleness();
  }

  private applyStaleness(): void {
    this.mount.repairs.classList.toggle("stale", this.stale.isStale("repairs"));
    this.mount.scales.classList.toggle("stale", this.stale.isStale("scales"));
    this.mount.capacity.classList.toggle("stale", this.stale.isStale("capacity"));
    const dashboardStale = this.stale.isStale("evaluation") || this.stale.isStale("smaa");
    this.mount.dashboard.classList.toggle("stale", dashboardStale);
  }
}

export async function boot(root: Document): Promise<App> {
  const client = new SessionClient("");
  const created = await client.createProject();
  const app = new App(client, created.id, {
    editor: root.getElementById("editor")!,
    repairs: root.getElementById("repairs")!,
    scales: root.getElementById("scales")!,
    capacity: root.getElementById("capacity")!,
    dashboard: root.getElementById("dashboard")!,
  });
  return app;
}
