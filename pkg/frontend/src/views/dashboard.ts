// Results dashboard: aggregated values, the rank-acceptability heatmap and
// the pairwise-winning matrix.  Cell shading scales with the delivered
// percentage (presentation); the printed numbers are the delivered values,
// character for character.

import type { EvaluateResult, SmaaResult } from "../types";
import { esc, num } from "./render";

function heatCell(value: number, cssClass: string): string {
  const alpha = (value / 100) * 0.85;
  return (
    `<td class="${cssClass}" style="background:rgba(31,119,100,${alpha.toFixed(3)})">` +
    `${num(value)}</td>`
  );
}

export function renderValues(result: EvaluateResult): string {
  const rows = result.ranking
    .map(
      (alt, position) =>
        `<tr><td>${position + 1}</td><td>${esc(alt)}</td>` +
        `<td class="value">${num(result.values[alt])}</td></tr>`,
    )
    .join("");
  return (
    `<div class="values">` +
    `<table><thead><tr><th>rank</th><th>alternative</th><th>value</th></tr></thead>` +
    `<tbody>${rows}</tbody></table></div>`
  );
}

export function renderDashboard(smaa: SmaaResult, evaluation: EvaluateResult | null): string {
  const alts = smaa.alternatives;

  const bHead = alts.map((_, k) => `<th>b<sub>${k + 1}</sub></th>`).join("");
  const bRows = alts
    .map((alt, i) => {
      const cells = smaa.b[i].map((value) => heatCell(value, "b-cell")).join("");
      return `<tr><th>${esc(alt)}</th>${cells}</tr>`;
    })
    .join("");

  const pHead = alts.map((alt) => `<th>${esc(alt)}</th>`).join("");
  const pRows = alts
    .map((alt, i) => {
      const cells = smaa.p[i]
        .map((value, j) => (i === j ? `<td class="void"></td>` : heatCell(value, "p-cell")))
        .join("");
      return `<tr><th>${esc(alt)}</th>${cells}</tr>`;
    })
    .join("");

  return (
    `<div class="dashboard">` +
    (evaluation ? renderValues(evaluation) : "") +
    `<p class="combos">${num(smaa.combination_count)} evaluation combination(s)` +
    (smaa.seed !== undefined ? `, seed ${num(smaa.seed)}` : "") +
    `</p>` +
    `<h3>how often does each alternative take each rank? [%]</h3>` +
    `<table class="heatmap b-matrix"><thead><tr><th></th>${bHead}</tr></thead>` +
    `<tbody>${bRows}</tbody></table>` +
    `<h3>how often does the row beat the column? [%]</h3>` +
    `<table class="heatmap p-matrix"><thead><tr><th></th>${pHead}</tr></thead>` +
    `<tbody>${pRows}</tbody></table>` +
    `</div>`
  );
}
