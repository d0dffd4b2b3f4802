/**
 * Visual scaling: bar heights from relative frequencies and cloud term font
 * sizes from scores. Both are monotone, so ordering on screen always agrees
 * with the service's numbers.
 */

export const MIN_FONT_PX = 12;
export const MAX_FONT_PX = 30;

/**
 * Font size for a cloud term, linear in its score between the cloud's
 * minimum and maximum. Equal scores get equal sizes; a higher score never
 * gets a smaller font.
 */
export function fontSizeForScore(score: number, minScore: number, maxScore: number): number {
  if (maxScore <= minScore) {
    return MAX_FONT_PX;
  }
  const ratio = (score - minScore) / (maxScore - minScore);
  return MIN_FONT_PX + (MAX_FONT_PX - MIN_FONT_PX) * ratio;
}

/** Bar height as a percentage of the chart, proportional to rel_freq. */
export function barHeightPct(relFreq: number, maxRelFreq: number): number {
  if (maxRelFreq <= 0) {
    return 0;
  }
  return (relFreq / maxRelFreq) * 100;
}
