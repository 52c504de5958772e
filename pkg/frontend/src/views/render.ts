// Shared rendering helpers.  Numeric values are rendered with String() so
// the markup shows exactly what the service delivered -- the client never
// reformats, rounds, or recomputes a domain number.

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function num(value: number): string {
  return String(value);
}

export function levelLabel(labels: string[] | null, k: number): string {
  return labels ? labels[k - 1] : `l${k}`;
}
