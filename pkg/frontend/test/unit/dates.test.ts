import { describe, expect, it } from "vitest";

import { daysBetween, isoToOffset, offsetToIso, periodForBucket } from "../../src/dates.js";

describe("daysBetween", () => {
  it("counts whole days", () => {
    expect(daysBetween("1945-01-01", "1945-01-01")).toBe(0);
    expect(daysBetween("1945-01-01", "1945-01-02")).toBe(1);
    expect(daysBetween("1945-01-01", "1945-12-31")).toBe(364);
  });

  it("spans leap years correctly", () => {
    expect(daysBetween("1968-01-01", "1969-01-01")).toBe(366);
    expect(daysBetween("1967-01-01", "1968-01-01")).toBe(365);
  });
});

describe("offset round trip", () => {
  it("offsetToIso inverts isoToOffset", () => {
    const base = "1945-01-01";
    for (const iso of ["1945-01-01", "1947-06-15", "1968-02-29", "1969-12-31"]) {
      expect(offsetToIso(base, isoToOffset(base, iso))).toBe(iso);
    }
  });

  it("offset 0 is the base date", () => {
    expect(offsetToIso("1950-03-10", 0)).toBe("1950-03-10");
  });
});

describe("periodForBucket", () => {
  it("expands a year label to the full year", () => {
    expect(periodForBucket("1967")).toEqual({ from: "1967-01-01", to: "1967-12-31" });
  });

  it("expands a month label to the full month", () => {
    expect(periodForBucket("1967-03")).toEqual({ from: "1967-03-01", to: "1967-03-31" });
    expect(periodForBucket("1969-02")).toEqual({ from: "1969-02-01", to: "1969-02-28" });
    expect(periodForBucket("1967-12")).toEqual({ from: "1967-12-01", to: "1967-12-31" });
  });

  it("knows leap-year February", () => {
    expect(periodForBucket("1968-02")).toEqual({ from: "1968-02-01", to: "1968-02-29" });
  });
});
