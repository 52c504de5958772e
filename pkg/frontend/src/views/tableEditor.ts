// Upper-triangular grid of card-count cells.  Cells are typed
// exact/interval/missing; the triples reported by the last /check response
// are rendered as linked highlights on the three cells each involves.

import type { CellDoc, CheckResult, TableDoc } from "../types";
import { esc, levelLabel, num } from "./render";

function violatedPairs(check: CheckResult | null): Set<string> {
  const out = new Set<string>();
  if (!check) return out;
  for (const v of check.violations ?? []) {
    out.add(`${v.p},${v.k}`);
    out.add(`${v.k},${v.q}`);
    out.add(`${v.p},${v.q}`);
  }
  for (const [p, q] of check.flagged ?? []) {
    out.add(`${p},${q}`);
  }
  return out;
}

function cellControls(cell: CellDoc): string {
  const at = `data-p="${cell.p}" data-q="${cell.q}"`;
  if (cell.kind === "exact") {
    return `<input type="number" min="0" class="cards" ${at} value="${num(cell.cards!)}">`;
  }
  if (cell.kind === "interval") {
    return (
      `<input type="number" min="0" class="lo" ${at} value="${num(cell.lo!)}">` +
      `<span class="dash">&ndash;</span>` +
      `<input type="number" min="0" class="hi" ${at} value="${num(cell.hi!)}">`
    );
  }
  return `<button class="missing" ${at} title="no judgment yet">?</button>`;
}

export function renderTableEditor(table: TableDoc, check: CheckResult | null): string {
  const t = table.levels.count;
  const labels = table.levels.labels;
  const bad = violatedPairs(check);
  const byPair = new Map(table.cells.map((c) => [`${c.p},${c.q}`, c]));

  const head = Array.from({ length: t }, (_, i) => `<th>${esc(levelLabel(labels, i + 1))}</th>`);
  const rows: string[] = [];
  for (let p = 1; p <= t; p++) {
    const cells: string[] = [`<th>${esc(levelLabel(labels, p))}</th>`];
    for (let q = 1; q <= t; q++) {
      if (q <= p) {
        cells.push(`<td class="void">${q === p ? "&#9632;" : ""}</td>`);
        continue;
      }
      const key = `${p},${q}`;
      const cell = byPair.get(key) ?? { p, q, kind: "missing" as const };
      const classes = ["cell", `kind-${cell.kind}`];
      if (bad.has(key)) classes.push("violated");
      cells.push(`<td class="${classes.join(" ")}" data-pair="${key}">${cellControls(cell)}</td>`);
    }
    rows.push(`<tr>${cells.join("")}</tr>`);
  }

  const status = !check
    ? `<p class="status pending">not checked yet</p>`
    : check.consistent
      ? `<p class="status ok">consistent: every judgment fits together</p>`
      : `<p class="status bad">${describeProblems(check)}</p>`;

  return (
    `<div class="table-editor">` +
    `<table class="comparison"><thead><tr><th></th>${head.join("")}</tr></thead>` +
    `<tbody>${rows.join("")}</tbody></table>` +
    status +
    `</div>`
  );
}

function describeProblems(check: CheckResult): string {
  if (check.violations && check.violations.length > 0) {
    const items = check.violations
      .map(
        (v) =>
          `e<sub>${v.p}${v.k}</sub> + e<sub>${v.k}${v.q}</sub> + 1 = ${num(v.lhs)} ` +
          `&ne; e<sub>${v.p}${v.q}</sub> = ${num(v.rhs)}`,
      )
      .join("; ");
    return `${check.violations.length} violated triple(s): ${items}`;
  }
  const flagged = (check.flagged ?? []).map(([p, q]) => `(${p},${q})`).join(", ");
  return `judgments cannot hold together; smallest revision touches ${flagged}`;
}
