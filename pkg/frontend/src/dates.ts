/**
 * Date arithmetic for the filter sliders and timeline bars.
 *
 * The two range sliders hold day offsets from the corpus's earliest date;
 * these helpers convert between offsets and ISO dates, and turn a timeline
 * bucket label into the period its bar stands for.
 */

const DAY_MS = 24 * 60 * 60 * 1000;

function toUtc(iso: string): number {
  const [year, month, day] = iso.split("-").map(Number);
  return Date.UTC(year, month - 1, day);
}

export function daysBetween(fromIso: string, toIso: string): number {
  return Math.round((toUtc(toIso) - toUtc(fromIso)) / DAY_MS);
}

export function offsetToIso(baseIso: string, offset: number): string {
  return new Date(toUtc(baseIso) + offset * DAY_MS).toISOString().slice(0, 10);
}

export function isoToOffset(baseIso: string, iso: string): number {
  return daysBetween(baseIso, iso);
}

/** Period covered by a timeline bucket: "1967" or "1967-03". */
export function periodForBucket(label: string): { from: string; to: string } {
  if (/^\d{4}$/.test(label)) {
    return { from: `${label}-01-01`, to: `${label}-12-31` };
  }
  const [year, month] = label.split("-").map(Number);
  const lastDay = new Date(Date.UTC(year, month, 0)).getUTCDate();
  const mm = String(month).padStart(2, "0");
  return {
    from: `${label}-01`,
    to: `${year}-${mm}-${String(lastDay).padStart(2, "0")}`,
  };
}
