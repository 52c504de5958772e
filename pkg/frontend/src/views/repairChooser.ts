// The minimal repairs proposed by the service, each with its size, the
// per-cell changes, and a preview of the repaired table; one click applies
// the chosen one via /repairs/{k}/apply.

import type { RepairDoc, RepairsResult, TableDoc } from "../types";
import { num } from "./render";

function previewTable(table: TableDoc, changed: Set<string>): string {
  const t = table.levels.count;
  const byPair = new Map(table.cells.map((c) => [`${c.p},${c.q}`, c]));
  const rows: string[] = [];
  for (let p = 1; p <= t; p++) {
    const cells: string[] = [];
    for (let q = 1; q <= t; q++) {
      if (q <= p) {
        cells.push(`<td class="void"></td>`);
        continue;
      }
      const key = `${p},${q}`;
      const cell = byPair.get(key)!;
      const text =
        cell.kind === "exact"
          ? num(cell.cards!)
          : cell.kind === "interval"
            ? `[${num(cell.lo!)},${num(cell.hi!)}]`
            : "?";
      cells.push(`<td class="${changed.has(key) ? "changed" : ""}">${text}</td>`);
    }
    rows.push(`<tr>${cells.join("")}</tr>`);
  }
  return `<table class="preview"><tbody>${rows.join("")}</tbody></table>`;
}

function describeChanges(repair: RepairDoc): string {
  if (repair.deltas) {
    return repair.modified
      .map(([p, q]) => {
        const delta = repair.deltas![`${p},${q}`];
        return `e<sub>${p}${q}</sub> ${delta >= 0 ? "+" : ""}${num(delta)}`;
      })
      .join(", ");
  }
  if (repair.new_bounds) {
    return repair.modified
      .map(([p, q]) => {
        const [lo, hi] = repair.new_bounds![`${p},${q}`];
        return `(${p},${q}) &rarr; [${num(lo)},${num(hi)}]`;
      })
      .join(", ");
  }
  return "no changes";
}

export function renderRepairChooser(result: RepairsResult): string {
  if (result.repairs.length === 0) {
    return `<div class="repair-chooser"><p>nothing to repair</p></div>`;
  }
  const items = result.repairs.map((repair, index) => {
    const changed = new Set(repair.modified.map(([p, q]) => `${p},${q}`));
    return (
      `<li class="repair" data-repair-index="${index}">` +
      `<header>repair #${index + 1}: ${num(repair.z)} change(s) &mdash; ${describeChanges(repair)}</header>` +
      previewTable(repair.table, changed) +
      `<button class="apply" data-repair-index="${index}">apply this repair</button>` +
      `</li>`
    );
  });
  return (
    `<div class="repair-chooser">` +
    `<p>${result.repairs.length} minimal repair(s) found; pick the one that best matches your judgment:</p>` +
    `<ol>${items.join("")}</ol></div>`
  );
}
