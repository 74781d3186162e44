import { describe, expect, it } from "vitest";

import { CorpusFormatError, parseCorpusText, serializeRecord, validateRecord } from "../src/corpusFormat";

const S3 = { id: "SG(6,1)", degree: 3, generators: [[1, 0, 2], [1, 2, 0]], order: 6 };

describe("validateRecord", () => {
  it("accepts a well-formed record", () => {
    expect(validateRecord(S3).id).toBe("SG(6,1)");
  });

  it("rejects a non-bijective generator", () => {
    expect(() => validateRecord({ ...S3, generators: [[0, 0, 1]] })).toThrow(CorpusFormatError);
  });

  it("rejects generators of the wrong degree", () => {
    expect(() => validateRecord({ ...S3, generators: [[1, 0]] })).toThrow(/generator 0/);
  });

  it("rejects a missing id", () => {
    expect(() => validateRecord({ degree: 3, generators: [] })).toThrow(/id/);
  });

  it("rejects a bad order", () => {
    expect(() => validateRecord({ ...S3, order: 0 })).toThrow(/order/);
  });

  it("rejects bad flags and oracles", () => {
    expect(() => validateRecord({ ...S3, flags: [42] })).toThrow(/flags/);
    expect(() => validateRecord({ ...S3, oracle: { block_sizes: [["x"]] } })).toThrow(/block_sizes/);
  });

  it("accepts flags and block-size oracles", () => {
    const rec = validateRecord({ ...S3, flags: ["simple"], oracle: { block_sizes: [[1, 1, 2]] } });
    expect(rec.oracle?.block_sizes).toEqual([[1, 1, 2]]);
  });
});

describe("serialization", () => {
  it("is deterministic and sorted by key", () => {
    const line = serializeRecord({ ...S3, flags: ["simple", "almost_simple"] });
    expect(line).toBe(
      '{"degree":3,"flags":["almost_simple","simple"],"generators":[[1,0,2],[1,2,0]],"id":"SG(6,1)","order":6}'
    );
  });

  it("round-trips through parseCorpusText", () => {
    const text = [serializeRecord(S3), serializeRecord({ ...S3, id: "other" })].join("\n") + "\n";
    const back = parseCorpusText(text);
    expect(back.map((r) => r.id)).toEqual(["SG(6,1)", "other"]);
    expect(back[0].generators).toEqual(S3.generators);
  });

  it("parseCorpusText rejects duplicates and junk with line numbers", () => {
    expect(() => parseCorpusText(serializeRecord(S3) + "\n" + serializeRecord(S3))).toThrow(/duplicate/);
    expect(() => parseCorpusText("{nope\n")).toThrow(/line 1/);
  });

  it("parseCorpusText skips blanks and comments", () => {
    expect(parseCorpusText("\n# header\n" + serializeRecord(S3) + "\n")).toHaveLength(1);
  });
});
