import { readFileSync } from "node:fs";

export function fixture<T>(name: string): T {
  const url = new URL(`./fixtures/${name}.json`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}

// standalone numeric tokens in rendered markup, e.g. "69.64", "100", "-0.5"
// (digits embedded in identifiers like "g4" or "a1" are not numbers shown)
export function numericTokens(html: string): string[] {
  const text = html.replace(/<[^>]*>/g, " ").replace(/[a-zA-Z_]+="[^"]*"/g, " ");
  return text.match(/(?<![\w.])-?\d+(?:\.\d+)?(?![\w.])/g) ?? [];
}

// every number reachable in a JSON payload, rendered the way String() would
export function numbersIn(value: unknown, out = new Set<string>()): Set<string> {
  if (typeof value === "number") out.add(String(value));
  else if (Array.isArray(value)) value.forEach((v) => numbersIn(v, out));
  else if (value && typeof value === "object") {
    Object.values(value as Record<string, unknown>).forEach((v) => numbersIn(v, out));
  }
  return out;
}
