import { describe, expect, it } from "vitest";

import { DEFAULT_SPEC, ExportSpecError, buildGapScript, checkSpec } from "../src/gapScript";

describe("buildGapScript", () => {
  it("enumerates the requested order range", () => {
    const script = buildGapScript({ ...DEFAULT_SPEC, minOrder: 6, maxOrder: 12 });
    expect(script).toContain("for n in [6..12] do");
    expect(script).toContain("SmallGroup(n, i)");
    expect(script).toContain("NrSmallGroups(n)");
  });

  it("adds named includes", () => {
    const script = buildGapScript({ ...DEFAULT_SPEC, include: ["A5", "PSL(2,7)"] });
    expect(script).toContain('EmitGroup("A5", AlternatingGroup(5));');
    expect(script).toContain('EmitGroup("PSL(2,7)", PSL(2,7));');
  });

  it("emits block oracles exactly when prime 3 is requested", () => {
    const with3 = buildGapScript({ ...DEFAULT_SPEC, primes: [3] });
    expect(with3).toContain("PrimeBlocks(ct, 3)");
    expect(with3).toContain("block_sizes");
    const without = buildGapScript({ ...DEFAULT_SPEC, primes: [2] });
    expect(without).not.toContain('\\"oracle\\"');
  });

  it("applies the degree cap", () => {
    const script = buildGapScript({ ...DEFAULT_SPEC, maxDegree: 64 });
    expect(script).toContain("if d > 64 then");
  });

  it("records faithful permutation data and flags", () => {
    const script = buildGapScript(DEFAULT_SPEC);
    expect(script).toContain("IsomorphismPermGroup");
    expect(script).toContain("SmallerDegreePermutationRepresentation");
    expect(script).toContain("ListPerm(g, d)");
    expect(script).toContain("IsAlmostSimpleGroup");
  });

  it("rejects bad specs", () => {
    expect(() => checkSpec({ ...DEFAULT_SPEC, minOrder: 0 })).toThrow(ExportSpecError);
    expect(() => checkSpec({ ...DEFAULT_SPEC, maxOrder: 0 })).toThrow(/max order/);
    expect(() => checkSpec({ ...DEFAULT_SPEC, include: ["NoSuchGroup"] })).toThrow(/unknown named group/);
    expect(() => checkSpec({ ...DEFAULT_SPEC, primes: [1] })).toThrow(/prime/);
  });
});
