import { mkdtempSync, readFileSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";
import { spawnSync } from "child_process";

import { describe, expect, it } from "vitest";

import { parseCorpusText } from "../src/corpusFormat";
import { DEFAULT_SPEC } from "../src/gapScript";
import { GapNotFoundError, parseGapOutput, runExport, writeCorpus } from "../src/runner";

const CANNED = [
  "some GAP banner noise",
  'CORPUS {"id":"SG(6,1)","degree":6,"generators":[[1,2,3,4,5,0]],"order":6,"oracle":{"block_sizes":[[1,1,1],[1,1,1]]}}',
  'CORPUS {"id":"SG(6,2)","degree":3,"generators":[[1,0,2],[1,2,0]],"order":6,"oracle":{"block_sizes":[[1,1,2]]}}',
  'SKIP {"id":"SG(32,51)","reason":"degree 128 exceeds 100"}',
  "DONE",
  "",
].join("\n");

describe("parseGapOutput", () => {
  it("collects tagged records and skips, ignoring chatter", () => {
    const result = parseGapOutput(CANNED);
    expect(result.records.map((r) => r.id)).toEqual(["SG(6,1)", "SG(6,2)"]);
    expect(result.skips).toEqual([{ id: "SG(32,51)", reason: "degree 128 exceeds 100" }]);
    expect(result.complete).toBe(true);
  });

  it("rejects malformed record lines", () => {
    expect(() => parseGapOutput('CORPUS {"id":"X","degree":2,"generators":[[0,0]]}')).toThrow(/permutation/);
    expect(() => parseGapOutput("CORPUS {nope")).toThrow(/unparseable/);
  });

  it("reports an incomplete run", () => {
    const result = parseGapOutput(CANNED.replace("DONE", ""));
    expect(result.complete).toBe(false);
  });
});

describe("writeCorpus", () => {
  it("writes validated lines that parse back", () => {
    const dir = mkdtempSync(join(tmpdir(), "gap-export-"));
    const path = join(dir, "corpus.jsonl");
    const { records } = parseGapOutput(CANNED);
    writeCorpus(path, records);
    const back = parseCorpusText(readFileSync(path, "utf8"));
    expect(back).toHaveLength(2);
    expect(back[1].oracle?.block_sizes).toEqual([[1, 1, 2]]);
  });
});

describe("runExport", () => {
  it("gives a clear diagnostic when GAP is absent", async () => {
    const dir = mkdtempSync(join(tmpdir(), "gap-export-"));
    const spec = {
      ...DEFAULT_SPEC,
      minOrder: 6,
      maxOrder: 6,
      gapCommand: "/definitely/not/a/gap/binary",
      outputPath: join(dir, "corpus.jsonl"),
    };
    await expect(runExport(spec)).rejects.toThrow(GapNotFoundError);
    await expect(runExport(spec)).rejects.toThrow(/not found on PATH/);
  });
});

const gapAvailable = spawnSync("gap", ["--version"], { timeout: 10000 }).status === 0;

describe.skipIf(!gapAvailable)("runExport with a live GAP", () => {
  it("exports the two groups of order 6 with matching orders", async () => {
    const dir = mkdtempSync(join(tmpdir(), "gap-export-"));
    const spec = {
      ...DEFAULT_SPEC,
      minOrder: 6,
      maxOrder: 6,
      outputPath: join(dir, "corpus.jsonl"),
    };
    const result = await runExport(spec);
    expect(result.records).toHaveLength(2);
    expect(result.records.every((r) => r.order === 6)).toBe(true);
    const back = parseCorpusText(readFileSync(spec.outputPath, "utf8"));
    expect(back).toHaveLength(2);
  }, 120000);
});
