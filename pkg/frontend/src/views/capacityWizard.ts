// Dummy-project ranking editor plus the elicited importance table.  The
// decision maker reorders project cards, inserts blank cards between
// classes, and states how many times the top project outweighs the bottom
// one; the resulting coefficients and diagnostics come from /capacity.

import type { CapacityResult } from "../types";
import { esc, num } from "./render";

export interface RankingDraft {
  classes: string[][]; // worst first; pair projects written "i+j"
  cards: number[];
  z: number;
}

export function renderRankingEditor(draft: RankingDraft): string {
  const blocks: string[] = [];
  draft.classes.forEach((cls, index) => {
    const chips = cls
      .map(
        (project) =>
          `<span class="project-card" draggable="true" data-project="${esc(project)}">${esc(project)}</span>`,
      )
      .join("");
    blocks.push(`<div class="ranking-class" data-class-index="${index}">${chips}</div>`);
    if (index < draft.classes.length - 1) {
      blocks.push(
        `<label class="blank-cards">blank cards ` +
          `<input type="number" min="0" data-gap-index="${index}" value="${num(draft.cards[index])}">` +
          `</label>`,
      );
    }
  });
  return (
    `<div class="ranking-editor">` +
    `<p>rank the reference projects from least to most important, drop blank cards between classes:</p>` +
    blocks.join("") +
    `<label class="ratio">the top project is ` +
    `<input type="number" min="1" id="ratio-z" value="${num(draft.z)}"> times the bottom one</label>` +
    `</div>`
  );
}

export function renderCapacityTable(result: CapacityResult): string {
  const singles = result.capacity.singletons
    .map(
      (s) =>
        `<tr><td>${esc(s.criterion)}</td><td>${num(s.m)}</td><td>${num(s.mu)}</td></tr>`,
    )
    .join("");
  const pairs = result.capacity.pairs
    .map((p) => {
      const name = p.criteria.join(" + ");
      const nature = p.m < 0 ? "redundant" : "complementary";
      return `<tr class="pair"><td>${esc(name)} <em>(${nature})</em></td><td>${num(p.m)}</td><td>${num(p.mu)}</td></tr>`;
    })
    .join("");

  const problems: string[] = [];
  for (const violation of result.violations) {
    problems.push(
      violation.criterion === null
        ? `coefficients sum to ${num(violation.value)} instead of 1`
        : `importance of ${esc(violation.criterion)} with {${violation.partners.map(esc).join(", ")}} drops below zero (${num(violation.value)})`,
    );
  }
  for (const mismatch of result.sign_mismatches) {
    problems.push(
      `${mismatch.pair.join(" + ")} was declared ${mismatch.hint > 0 ? "complementary" : "redundant"} ` +
        `but came out ${num(mismatch.m)}`,
    );
  }
  const diagnostics =
    problems.length === 0
      ? `<p class="status ok">monotonicity and normalization hold</p>`
      : `<ul class="status bad">${problems.map((p) => `<li>${p}</li>`).join("")}</ul>`;

  return (
    `<div class="capacity-table">` +
    `<table><thead><tr><th></th><th>m</th><th>&mu;</th></tr></thead>` +
    `<tbody>${singles}${pairs}</tbody></table>` +
    diagnostics +
    `</div>`
  );
}
