#!/usr/bin/env node
/**
 * gap-export: emit a corpus of small groups (orders in a range plus named
 * extras) by driving a local GAP installation.
 *
 *   gap-export --min-order 1 --max-order 100 --include A5,PSL(2,7) \
 *              --prime 3 --out corpus.jsonl [--gap /path/to/gap] [--max-degree 100]
 *
 * Exit codes: 0 success, 1 GAP failure (including a missing binary, with a
 * clear diagnostic), 2 bad arguments.
 */

import { DEFAULT_SPEC, ExportSpec, ExportSpecError, NAMED_GROUPS } from "./gapScript";
import { GapNotFoundError, GapRunError, runExport } from "./runner";

export function parseArgs(argv: string[]): ExportSpec {
  const spec: ExportSpec = { ...DEFAULT_SPEC, include: [], primes: [] };
  const primes: number[] = [];
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    const next = (): string => {
      i += 1;
      if (i >= argv.length) throw new ExportSpecError(`missing value for ${arg}`);
      return argv[i];
    };
    switch (arg) {
      case "--min-order":
        spec.minOrder = Number(next());
        break;
      case "--max-order":
        spec.maxOrder = Number(next());
        break;
      case "--include":
        spec.include.push(...next().split(",").map((s) => s.trim()).filter(Boolean));
        break;
      case "--prime":
        primes.push(Number(next()));
        break;
      case "--out":
        spec.outputPath = next();
        break;
      case "--gap":
        spec.gapCommand = next();
        break;
      case "--max-degree":
        spec.maxDegree = Number(next());
        break;
      case "--help":
      case "-h":
        printUsage();
        process.exit(0);
        break;
      default:
        throw new ExportSpecError(`unknown argument ${arg}`);
    }
  }
  spec.primes = primes.length ? primes : [...DEFAULT_SPEC.primes];
  return spec;
}

function printUsage(): void {
  const names = Object.keys(NAMED_GROUPS).join(", ");
  process.stdout.write(
    `usage: gap-export [--min-order N] [--max-order N] [--include NAME[,NAME...]]\n` +
      `                  [--prime P] [--out PATH] [--gap CMD] [--max-degree N]\n` +
      `named groups: ${names}\n` +
      `block oracles are emitted for p = 3 (the downstream bridge prime).\n`
  );
}

export async function main(argv: string[]): Promise<number> {
  let spec: ExportSpec;
  try {
    spec = parseArgs(argv);
  } catch (exc) {
    if (exc instanceof ExportSpecError) {
      process.stderr.write(`error: ${exc.message}\n`);
      return 2;
    }
    throw exc;
  }
  try {
    const result = await runExport(spec);
    process.stderr.write(
      `wrote ${result.records.length} records to ${spec.outputPath}` +
        (result.skips.length ? ` (${result.skips.length} skipped)\n` : "\n")
    );
    for (const skip of result.skips) {
      process.stderr.write(`  skipped ${skip.id}: ${skip.reason}\n`);
    }
    return 0;
  } catch (exc) {
    if (exc instanceof GapNotFoundError || exc instanceof GapRunError) {
      process.stderr.write(`error: ${exc.message}\n`);
      return 1;
    }
    if (exc instanceof ExportSpecError) {
      process.stderr.write(`error: ${exc.message}\n`);
      return 2;
    }
    throw exc;
  }
}

if (require.main === module) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
