export { CorpusFormatError, CorpusRecord, parseCorpusText, serializeRecord, validateRecord } from "./corpusFormat";
export { DEFAULT_SPEC, ExportSpec, ExportSpecError, NAMED_GROUPS, buildGapScript, checkSpec } from "./gapScript";
export { ExportResult, GapNotFoundError, GapRunError, SkipNote, parseGapOutput, runExport, runGap, writeCorpus } from "./runner";
