/**
 * Runs GAP as a subprocess on the generated script and turns its tagged
 * output lines into a validated corpus file.
 */

import { spawn } from "child_process";
import { writeFileSync } from "fs";

import { CorpusFormatError, CorpusRecord, serializeRecord, validateRecord } from "./corpusFormat";
import { ExportSpec, buildGapScript } from "./gapScript";

export class GapNotFoundError extends Error {}

export class GapRunError extends Error {}

export interface SkipNote {
  id: string;
  reason: string;
}

export interface ExportResult {
  records: CorpusRecord[];
  skips: SkipNote[];
  complete: boolean;
}

/** Extract records and skip notes from raw GAP stdout. */
export function parseGapOutput(text: string): ExportResult {
  const records: CorpusRecord[] = [];
  const skips: SkipNote[] = [];
  let complete = false;
  for (const raw of text.split("\n")) {
    const line = raw.trim();
    if (line.startsWith("CORPUS ")) {
      let obj: unknown;
      try {
        obj = JSON.parse(line.slice("CORPUS ".length));
      } catch (exc) {
        throw new CorpusFormatError(`unparseable record line from GAP: ${line} (${(exc as Error).message})`);
      }
      records.push(validateRecord(obj));
    } else if (line.startsWith("SKIP ")) {
      const obj = JSON.parse(line.slice("SKIP ".length)) as SkipNote;
      skips.push(obj);
    } else if (line === "DONE") {
      complete = true;
    }
    // anything else is GAP chatter and is ignored
  }
  return { records, skips, complete };
}

export function runGap(spec: ExportSpec, script: string): Promise<string> {
  return new Promise((resolve, reject) => {
    const child = spawn(spec.gapCommand, ["-q", "-b", "--quitonbreak"], {
      stdio: ["pipe", "pipe", "pipe"],
    });
    const out: Buffer[] = [];
    const err: Buffer[] = [];
    child.stdout.on("data", (d) => out.push(d));
    child.stderr.on("data", (d) => err.push(d));
    child.on("error", (exc: NodeJS.ErrnoException) => {
      if (exc.code === "ENOENT") {
        reject(
          new GapNotFoundError(
            `GAP executable ${JSON.stringify(spec.gapCommand)} was not found on PATH. ` +
              `Install GAP (gap-system.org) or point --gap at the binary.`
          )
        );
      } else {
        reject(new GapRunError(`failed to start GAP: ${exc.message}`));
      }
    });
    child.on("close", (code) => {
      const stdout = Buffer.concat(out).toString();
      if (code !== 0 && !stdout.includes("DONE")) {
        reject(new GapRunError(`GAP exited with code ${code}: ${Buffer.concat(err).toString().slice(0, 2000)}`));
        return;
      }
      resolve(stdout);
    });
    child.stdin.write(script);
    child.stdin.end();
  });
}

/** Full pipeline: build the script, run GAP, validate, write the corpus. */
export async function runExport(spec: ExportSpec): Promise<ExportResult> {
  const script = buildGapScript(spec);
  const stdout = await runGap(spec, script);
  const result = parseGapOutput(stdout);
  if (!result.complete) {
    throw new GapRunError("GAP did not run to completion (no DONE marker); not writing a partial corpus");
  }
  writeCorpus(spec.outputPath, result.records);
  return result;
}

export function writeCorpus(path: string, records: CorpusRecord[]): void {
  const lines = records.map(serializeRecord);
  writeFileSync(path, lines.join("\n") + (lines.length ? "\n" : ""));
}
