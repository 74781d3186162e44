/**
 * The corpus file contract shared with the census toolkit: line-delimited
 * JSON records with 0-based permutation image arrays.  The validator here
 * mirrors the consumer's parser so every exported file is accepted as-is.
 */

export interface CorpusRecord {
  id: string;
  degree: number;
  generators: number[][];
  order?: number;
  flags?: string[];
  oracle?: { block_sizes?: number[][] };
}

export class CorpusFormatError extends Error {}

function isPermutation(images: unknown, degree: number): images is number[] {
  if (!Array.isArray(images) || images.length !== degree) return false;
  const seen = new Array<boolean>(degree).fill(false);
  for (const v of images) {
    if (!Number.isInteger(v) || v < 0 || v >= degree || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/** Validate a record object; throws CorpusFormatError with a reason. */
export function validateRecord(obj: unknown): CorpusRecord {
  if (typeof obj !== "object" || obj === null || Array.isArray(obj)) {
    throw new CorpusFormatError("record is not an object");
  }
  const rec = obj as Record<string, unknown>;
  if (typeof rec.id !== "string" || rec.id.length === 0) {
    throw new CorpusFormatError("id must be a nonempty string");
  }
  if (!Number.isInteger(rec.degree) || (rec.degree as number) < 1) {
    throw new CorpusFormatError(`record ${rec.id}: degree must be a positive integer`);
  }
  const degree = rec.degree as number;
  if (!Array.isArray(rec.generators)) {
    throw new CorpusFormatError(`record ${rec.id}: generators must be an array`);
  }
  rec.generators.forEach((g, i) => {
    if (!isPermutation(g, degree)) {
      throw new CorpusFormatError(`record ${rec.id}: generator ${i} is not a permutation of 0..${degree - 1}`);
    }
  });
  if (rec.order !== undefined && (!Number.isInteger(rec.order) || (rec.order as number) < 1)) {
    throw new CorpusFormatError(`record ${rec.id}: order must be a positive integer`);
  }
  if (rec.flags !== undefined) {
    if (!Array.isArray(rec.flags) || !rec.flags.every((f) => typeof f === "string")) {
      throw new CorpusFormatError(`record ${rec.id}: flags must be an array of strings`);
    }
  }
  if (rec.oracle !== undefined) {
    if (typeof rec.oracle !== "object" || rec.oracle === null) {
      throw new CorpusFormatError(`record ${rec.id}: oracle must be an object`);
    }
    const bs = (rec.oracle as Record<string, unknown>).block_sizes;
    if (bs !== undefined) {
      const ok =
        Array.isArray(bs) && bs.every((b) => Array.isArray(b) && b.every((d) => Number.isInteger(d) && d >= 1));
      if (!ok) {
        throw new CorpusFormatError(`record ${rec.id}: oracle.block_sizes must be an array of integer arrays`);
      }
    }
  }
  return rec as unknown as CorpusRecord;
}

/** Serialize one record as a corpus line with deterministic key order. */
export function serializeRecord(rec: CorpusRecord): string {
  const ordered: Record<string, unknown> = {
    degree: rec.degree,
    generators: rec.generators,
    id: rec.id,
  };
  if (rec.order !== undefined) ordered.order = rec.order;
  if (rec.flags !== undefined && rec.flags.length > 0) ordered.flags = [...rec.flags].sort();
  if (rec.oracle !== undefined) ordered.oracle = rec.oracle;
  // stable key order: alphabetical, matching the reference corpus files
  const keys = Object.keys(ordered).sort();
  const sorted: Record<string, unknown> = {};
  for (const k of keys) sorted[k] = ordered[k];
  return JSON.stringify(sorted);
}

/** Parse a whole corpus text back into records (round-trip support). */
export function parseCorpusText(text: string): CorpusRecord[] {
  const out: CorpusRecord[] = [];
  const seen = new Set<string>();
  text.split("\n").forEach((line, idx) => {
    const trimmed = line.trim();
    if (trimmed.length === 0 || trimmed.startsWith("#")) return;
    let obj: unknown;
    try {
      obj = JSON.parse(trimmed);
    } catch (exc) {
      throw new CorpusFormatError(`line ${idx + 1}: invalid JSON: ${(exc as Error).message}`);
    }
    const rec = validateRecord(obj);
    if (seen.has(rec.id)) {
      throw new CorpusFormatError(`line ${idx + 1}: duplicate record id ${rec.id}`);
    }
    seen.add(rec.id);
    out.push(rec);
  });
  return out;
}
