// Bar-segment picture of a table (one bar per pair, sized by its unit
// count) next to the utility ladder the service derived from it.  Widths
// are presentation only; every printed number is a delivered value.

import type { ScaleDoc, TableDoc } from "../types";
import { esc, levelLabel, num } from "./render";

const UNIT_PX = 18;

export function renderScaleView(criterion: string, table: TableDoc, scale: ScaleDoc): string {
  const labels = table.levels.labels;
  const bars = table.cells
    .filter((c) => c.kind === "exact")
    .map((c) => {
      const width = (c.cards! + 1) * UNIT_PX;
      return (
        `<div class="bar-row">` +
        `<span class="pair">${esc(levelLabel(labels, c.p))} &rarr; ${esc(levelLabel(labels, c.q))}</span>` +
        `<span class="bar" style="width:${width}px" title="${num(c.cards!)} card(s)"></span>` +
        `<span class="cards">${num(c.cards!)}</span>` +
        `</div>`
      );
    });

  const ladder = scale.utilities
    .map((u, i) => {
      const label = scale.labels ? scale.labels[i] : `l${i + 1}`;
      return `<li><span class="level">${esc(label)}</span><span class="utility">${num(u)}</span></li>`;
    })
    .join("");

  return (
    `<div class="scale-view" data-criterion="${esc(criterion)}">` +
    `<h3>${esc(criterion)}</h3>` +
    `<p>one unit is worth <strong>${num(scale.alpha)}</strong></p>` +
    `<div class="bars">${bars.join("")}</div>` +
    `<ol class="ladder">${ladder}</ol>` +
    `</div>`
  );
}
