/**
 * PauliOp: a familiar qubit-operator surface whose every operation
 * delegates to the compiled-core CLI through the shared file formats.
 * No algebra lives on this side of the boundary.
 */

import * as fs from "node:fs";

import type { Complex } from "./complex.js";
import {
  Coefficient,
  GateSpec,
  OperatorData,
  StructureEntry,
  checkWord,
  maxIndex,
  parseCircuit,
  parseOperator,
  parseStructureCsv,
  serializeCircuit,
  serializeOperator,
} from "./format.js";
import { runTool, runToolAsync, withTempDir, withTempDirAsync, writeInput } from "./bridge.js";

export type CoefficientInput = number | Complex | string;

function asCoefficient(input: CoefficientInput): Coefficient {
  if (typeof input === "number") {
    return { re: input, im: 0 };
  }
  if (typeof input === "string") {
    return { expr: input };
  }
  return input;
}

function normalizeText(text: string): string {
  return withTempDir((dir) => runTool(["normalize", writeInput(dir, "op.txt", text)]));
}

export class PauliOp {
  private constructor(private readonly data: OperatorData) {}

  /** Wrap canonical operator-file text produced by the core. */
  static fromText(text: string): PauliOp {
    return new PauliOp(parseOperator(text));
  }

  /**
   * Build from a term word and coefficient, mirroring the usual
   * qubit-operator constructor. An empty word means the identity.
   * The file is normalized by the core before wrapping.
   */
  static fromTerm(word: string, coefficient: CoefficientInput, qubits?: number): PauliOp {
    return PauliOp.fromTerms([[word, coefficient]], qubits);
  }

  static fromTerms(
    entries: Array<[string, CoefficientInput]>,
    qubits?: number,
  ): PauliOp {
    const words = entries.map(([word]) => checkWord(word === "" ? "I" : word));
    const inferred = 1 + words.reduce((top, w) => Math.max(top, maxIndex(w)), -1);
    const n = qubits ?? Math.max(inferred, 0);
    const text = serializeOperator({
      qubits: n,
      terms: entries.map(([word, c], i) => ({
        word: words[i],
        coefficient: asCoefficient(c),
      })),
    });
    return PauliOp.fromText(normalizeText(text));
  }

  static zero(qubits: number): PauliOp {
    return PauliOp.fromText(`pauli-op v1 qubits=${qubits}\n`);
  }

  static identity(qubits: number, coefficient: CoefficientInput = 1): PauliOp {
    return PauliOp.fromTerm("I", coefficient, qubits);
  }

  static load(file: string): PauliOp {
    return PauliOp.fromText(fs.readFileSync(file, "utf8"));
  }

  get qubits(): number {
    return this.data.qubits;
  }

  get termCount(): number {
    return this.data.terms.length;
  }

  /** Terms in the core's canonical order. */
  *terms(): IterableIterator<[string, Coefficient]> {
    for (const term of this.data.terms) {
      yield [term.word, term.coefficient];
    }
  }

  /** word -> numeric value; throws if any coefficient is symbolic. */
  numericTerms(): Map<string, Complex> {
    const out = new Map<string, Complex>();
    for (const term of this.data.terms) {
      if ("expr" in term.coefficient) {
        throw new Error(`term ${term.word} has a symbolic coefficient`);
      }
      out.set(term.word, term.coefficient);
    }
    return out;
  }

  serialize(): string {
    return serializeOperator(this.data);
  }

  save(file: string): void {
    fs.writeFileSync(file, this.serialize(), "utf8");
  }

  private binary(command: string, other: PauliOp): PauliOp {
    return withTempDir((dir) => {
      const a = writeInput(dir, "a.txt", this.serialize());
      const b = writeInput(dir, "b.txt", other.serialize());
      return PauliOp.fromText(runTool([command, a, b]));
    });
  }

  add(other: PauliOp): PauliOp {
    return this.binary("add", other);
  }

  mul(other: PauliOp): PauliOp {
    return this.binary("mul", other);
  }

  /** Async product; lets callers overlap long multiplications. */
  async mulAsync(other: PauliOp): Promise<PauliOp> {
    return withTempDirAsync(async (dir) => {
      const a = writeInput(dir, "a.txt", this.serialize());
      const b = writeInput(dir, "b.txt", other.serialize());
      return PauliOp.fromText(await runToolAsync(["mul", a, b]));
    });
  }

  scalarMul(scalar: CoefficientInput): PauliOp {
    const coeff = asCoefficient(scalar);
    const text = "expr" in coeff ? coeff.expr : `(${coeff.re},${coeff.im})`;
    return withTempDir((dir) => {
      const a = writeInput(dir, "a.txt", this.serialize());
      return PauliOp.fromText(runTool(["scalar-mul", a, "--coeff", text]));
    });
  }

  dagger(): PauliOp {
    return withTempDir((dir) => {
      const a = writeInput(dir, "a.txt", this.serialize());
      return PauliOp.fromText(runTool(["dagger", a]));
    });
  }

  commutator(other: PauliOp): PauliOp {
    return this.binary("commutator", other);
  }

  substitute(bindings: Record<string, number>): PauliOp {
    return withTempDir((dir) => {
      const a = writeInput(dir, "a.txt", this.serialize());
      const args = ["substitute", a];
      for (const [name, value] of Object.entries(bindings)) {
        args.push("--bind", `${name}=${value}`);
      }
      return PauliOp.fromText(runTool(args));
    });
  }

  differentiate(parameter: string): PauliOp {
    return withTempDir((dir) => {
      const a = writeInput(dir, "a.txt", this.serialize());
      return PauliOp.fromText(runTool(["differentiate", a, "--param", parameter]));
    });
  }
}

export function commutator(a: PauliOp, b: PauliOp): PauliOp {
  return a.commutator(b);
}

/** Lie closure of generator words; returns basis words in closure order. */
export function lieClosure(generators: string[], qubits: number): string[] {
  return withTempDir((dir) => {
    const file = writeInput(
      dir,
      "gens.txt",
      generators.map((w) => checkWord(w)).join("\n") + "\n",
    );
    const out = runTool(["lie-closure", file, "--qubits", String(qubits)]);
    return out.trim().split("\n");
  });
}

export function structureConstants(generators: string[], qubits: number): StructureEntry[] {
  return withTempDir((dir) => {
    const file = writeInput(
      dir,
      "gens.txt",
      generators.map((w) => checkWord(w)).join("\n") + "\n",
    );
    return parseStructureCsv(runTool(["struct-const", file, "--qubits", String(qubits)]));
  });
}

export interface FoldResult {
  folded: PauliOp;
  remainder: GateSpec[];
}

/** Fold the circuit tail [splitAt:] into the operator. */
export function fold(h: PauliOp, gates: GateSpec[], splitAt = 0): FoldResult {
  return withTempDir((dir) => {
    const op = writeInput(dir, "h.txt", h.serialize());
    const circuit = writeInput(dir, "c.txt", serializeCircuit(h.qubits, gates));
    const rest = `${dir}/rest.txt`;
    const out = runTool([
      "fold", op, circuit, "--split-at", String(splitAt), "--remainder", rest,
    ]);
    const remainder = parseCircuit(fs.readFileSync(rest, "utf8")).gates;
    return { folded: PauliOp.fromText(out), remainder };
  });
}
