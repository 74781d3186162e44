/**
 * Generation of the GAP program that enumerates the requested groups and
 * prints one tagged JSON line per exported record.  All JSON is assembled
 * with plain string concatenation on the GAP side; the runner validates
 * every line against the corpus contract before writing anything.
 */

export interface ExportSpec {
  minOrder: number;
  maxOrder: number;
  include: string[];
  primes: number[];
  outputPath: string;
  gapCommand: string;
  maxDegree: number;
}

export const DEFAULT_SPEC: ExportSpec = {
  minOrder: 1,
  maxOrder: 100,
  include: [],
  primes: [3],
  outputPath: "corpus.jsonl",
  gapCommand: "gap",
  maxDegree: 100,
};

/** Named groups the exporter knows how to build in GAP. */
export const NAMED_GROUPS: Record<string, string> = {
  A5: "AlternatingGroup(5)",
  A6: "AlternatingGroup(6)",
  A7: "AlternatingGroup(7)",
  S5: "SymmetricGroup(5)",
  S6: "SymmetricGroup(6)",
  "PSL(2,7)": "PSL(2,7)",
  "PSL(2,8)": "PSL(2,8)",
  "PSL(3,3)": "PSL(3,3)",
  "PGL(2,7)": "PGL(2,7)",
  "PGL(2,9)": "PGL(2,9)",
  M11: "MathieuGroup(11)",
};

export class ExportSpecError extends Error {}

export function checkSpec(spec: ExportSpec): void {
  if (!Number.isInteger(spec.minOrder) || spec.minOrder < 1) {
    throw new ExportSpecError("min order must be a positive integer");
  }
  if (!Number.isInteger(spec.maxOrder) || spec.maxOrder < spec.minOrder) {
    throw new ExportSpecError("max order must be an integer >= min order");
  }
  if (!Number.isInteger(spec.maxDegree) || spec.maxDegree < 1) {
    throw new ExportSpecError("max degree must be a positive integer");
  }
  for (const name of spec.include) {
    if (!(name in NAMED_GROUPS)) {
      throw new ExportSpecError(`unknown named group ${JSON.stringify(name)}; known: ${Object.keys(NAMED_GROUPS).join(", ")}`);
    }
  }
  for (const p of spec.primes) {
    if (!Number.isInteger(p) || p < 2) {
      throw new ExportSpecError(`bad prime ${p}`);
    }
  }
}

/**
 * The emitted corpus schema carries block oracles only for p = 3 (that is
 * the prime of the downstream acceptance bridge); other requested primes
 * are ignored by the record writer.
 */
export function buildGapScript(spec: ExportSpec): string {
  checkSpec(spec);
  const wantBlocks = spec.primes.includes(3);
  const includes = spec.include
    .map((name) => `EmitGroup("${name}", ${NAMED_GROUPS[name]});`)
    .join("\n");
  return `# generated by gap-export; prints CORPUS/SKIP tagged JSON lines
JsonInts := function(l)
  local s, i;
  s := "[";
  for i in [1..Length(l)] do
    if i > 1 then Append(s, ","); fi;
    Append(s, String(l[i]));
  od;
  Append(s, "]");
  return s;
end;;

JsonIntLists := function(ll)
  local s, i;
  s := "[";
  for i in [1..Length(ll)] do
    if i > 1 then Append(s, ","); fi;
    Append(s, JsonInts(ll[i]));
  od;
  Append(s, "]");
  return s;
end;;

JsonStrings := function(l)
  local s, i;
  s := "[";
  for i in [1..Length(l)] do
    if i > 1 then Append(s, ","); fi;
    Append(s, "\\"");
    Append(s, l[i]);
    Append(s, "\\"");
  od;
  Append(s, "]");
  return s;
end;;

BlockSizes := function(G)
  local ct, degs, pb, blocks, b;
  ct := CharacterTable(G);
  degs := List(Irr(ct), x -> x[1]);
  pb := PrimeBlocks(ct, 3);
  blocks := List([1..Maximum(pb.block)], b -> SortedList(degs{Positions(pb.block, b)}));
  Sort(blocks);
  return blocks;
end;;

EmitGroup := function(id, G)
  local phi, P, sd, d, gens, glists, flags, s;
  phi := IsomorphismPermGroup(G);
  P := Image(phi);
  sd := SmallerDegreePermutationRepresentation(P);
  P := Image(sd);
  d := LargestMovedPoint(P);
  if d = 0 then d := 1; fi;
  if d > ${spec.maxDegree} then
    Print("SKIP {\\"id\\":\\"", id, "\\",\\"reason\\":\\"degree ", String(d), " exceeds ${spec.maxDegree}\\"}\\n");
    return;
  fi;
  gens := GeneratorsOfGroup(P);
  glists := List(gens, g -> List(ListPerm(g, d), x -> x - 1));
  flags := [];
  if IsSimpleGroup(G) and not IsAbelian(G) then Add(flags, "simple"); fi;
  if IsPerfectGroup(G) and Size(G) > 1 then Add(flags, "perfect"); fi;
  if IsAlmostSimpleGroup(G) then Add(flags, "almost_simple"); fi;
  s := "CORPUS {";
  Append(s, "\\"id\\":\\"");
  Append(s, id);
  Append(s, "\\",\\"degree\\":");
  Append(s, String(d));
  Append(s, ",\\"generators\\":");
  Append(s, JsonIntLists(glists));
  Append(s, ",\\"order\\":");
  Append(s, String(Size(G)));
  if Length(flags) > 0 then
    Append(s, ",\\"flags\\":");
    Append(s, JsonStrings(flags));
  fi;
${wantBlocks ? `  Append(s, ",\\"oracle\\":{\\"block_sizes\\":");
  Append(s, JsonIntLists(BlockSizes(G)));
  Append(s, "}");` : "  # no block oracle requested"}
  Append(s, "}");
  Print(s, "\\n");
end;;

for n in [${spec.minOrder}..${spec.maxOrder}] do
  if SmallGroupsAvailable(n) then
    for i in [1..NrSmallGroups(n)] do
      EmitGroup(Concatenation("SG(", String(n), ",", String(i), ")"), SmallGroup(n, i));
    od;
  else
    Print("SKIP {\\"id\\":\\"order ", String(n), "\\",\\"reason\\":\\"small groups library unavailable\\"}\\n");
  fi;
od;

${includes}

Print("DONE\\n");
QUIT;
`;
}
