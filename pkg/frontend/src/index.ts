export { Complex, absDiff, complex, magnitude } from "./complex.js";
export {
  Coefficient,
  GateSpec,
  OperatorData,
  StructureEntry,
  Term,
  WordSyntaxError,
  checkWord,
  parseOperator,
  serializeOperator,
} from "./format.js";
export { CoreToolError, runTool, runToolAsync } from "./bridge.js";
export {
  CoefficientInput,
  FoldResult,
  PauliOp,
  commutator,
  fold,
  lieClosure,
  structureConstants,
} from "./pauliOp.js";
