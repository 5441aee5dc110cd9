/**
 * Parsing and serialization of the core's text formats.
 *
 * This module understands the wire formats only; it performs no algebra.
 * Operator files:
 *
 *     pauli-op v1 qubits=<N>
 *     (<re>,<im>) ; <word>
 *     (expr ...) ; <word>
 *
 * Words are "I" or ascending letter-index tokens such as "X0 Z3".
 * Symbolic coefficients stay opaque expression text like "(param a)".
 */

import type { Complex } from "./complex.js";

/** A numeric coefficient, or symbolic expression text passed through verbatim. */
export type Coefficient = Complex | { expr: string };

export interface Term {
  word: string;
  coefficient: Coefficient;
}

export interface OperatorData {
  qubits: number;
  terms: Term[];
}

export class WordSyntaxError extends Error {
  constructor(message: string, readonly position: number) {
    super(`${message} at position ${position}`);
    this.name = "WordSyntaxError";
  }
}

const HEADER_RE = /^pauli-op v1 qubits=(\d+)$/;
const NUMERIC_COEFF_RE = /^\(\s*([^\s,()]+)\s*,\s*([^\s,()]+)\s*\)$/;

/**
 * Validate a Pauli word against the grammar and return it unchanged.
 * Indices must be strictly ascending; syntax errors carry the offending
 * column in `position` (0-based).
 */
export function checkWord(text: string): string {
  if (text === "I") {
    return text;
  }
  if (text.length === 0) {
    throw new WordSyntaxError("empty Pauli word (use 'I' for the identity)", 0);
  }
  let pos = 0;
  let last = -1;
  while (pos < text.length) {
    const letter = text[pos];
    if (letter !== "X" && letter !== "Y" && letter !== "Z") {
      throw new WordSyntaxError(`expected X, Y, or Z, found '${letter}'`, pos);
    }
    let end = pos + 1;
    while (end < text.length && text[end] >= "0" && text[end] <= "9") {
      end += 1;
    }
    if (end === pos + 1) {
      throw new WordSyntaxError("expected a qubit index", pos + 1);
    }
    const index = Number(text.slice(pos + 1, end));
    if (index <= last) {
      throw new WordSyntaxError(`qubit indices must be strictly ascending (${index})`, pos + 1);
    }
    last = index;
    pos = end;
    if (pos < text.length) {
      if (text[pos] !== " ") {
        throw new WordSyntaxError(`expected a space before the next token`, pos);
      }
      pos += 1;
    }
  }
  return text;
}

/** Highest index used by a word, or -1 for the identity. */
export function maxIndex(word: string): number {
  let top = -1;
  for (const token of word.split(" ")) {
    if (token === "I") continue;
    top = Math.max(top, Number(token.slice(1)));
  }
  return top;
}

/** Shortest round-trip decimal for a float; Python's parser accepts it. */
export function formatNumber(x: number): string {
  if (!Number.isFinite(x)) {
    throw new Error(`coefficient must be finite, got ${x}`);
  }
  return String(x);
}

export function formatCoefficient(c: Coefficient): string {
  if ("expr" in c) {
    return c.expr;
  }
  return `(${formatNumber(c.re)},${formatNumber(c.im)})`;
}

export function parseCoefficient(text: string): Coefficient {
  const m = NUMERIC_COEFF_RE.exec(text.trim());
  if (m !== null) {
    const re = Number(m[1]);
    const im = Number(m[2]);
    if (Number.isFinite(re) && Number.isFinite(im)) {
      return { re, im };
    }
    throw new Error(`non-finite coefficient: ${text}`);
  }
  return { expr: text.trim() };
}

export function serializeOperator(data: OperatorData): string {
  const lines = [`pauli-op v1 qubits=${data.qubits}`];
  for (const term of data.terms) {
    lines.push(`${formatCoefficient(term.coefficient)} ; ${checkWord(term.word)}`);
  }
  return lines.join("\n") + "\n";
}

export function parseOperator(text: string): OperatorData {
  const lines = text.split("\n").filter((line) => line.trim().length > 0);
  if (lines.length === 0) {
    throw new Error("empty operator file");
  }
  const header = HEADER_RE.exec(lines[0].trim());
  if (header === null) {
    throw new Error(`bad operator header: ${lines[0]}`);
  }
  const qubits = Number(header[1]);
  const terms: Term[] = [];
  for (const line of lines.slice(1)) {
    const split = line.indexOf(";");
    if (split < 0) {
      throw new Error(`bad term line (missing ';'): ${line}`);
    }
    const coefficient = parseCoefficient(line.slice(0, split).trim());
    const word = checkWord(line.slice(split + 1).trim());
    terms.push({ word, coefficient });
  }
  return { qubits, terms };
}

export interface GateSpec {
  word: string;
  /** Numeric radians, or symbolic coefficient text such as "(param t)". */
  angle: number | string;
}

export function serializeCircuit(qubits: number, gates: GateSpec[]): string {
  const lines = [`circuit v1 qubits=${qubits}`];
  for (const gate of gates) {
    const angle =
      typeof gate.angle === "number"
        ? `(${formatNumber(gate.angle)},0.0)`
        : gate.angle;
    lines.push(`rot ; ${checkWord(gate.word)} ; ${angle}`);
  }
  return lines.join("\n") + "\n";
}

export function parseCircuit(text: string): { qubits: number; gates: GateSpec[] } {
  const lines = text.split("\n").filter((line) => line.trim().length > 0);
  const header = /^circuit v1 qubits=(\d+)$/.exec(lines[0]?.trim() ?? "");
  if (header === null) {
    throw new Error(`bad circuit header: ${lines[0]}`);
  }
  const gates: GateSpec[] = [];
  for (const line of lines.slice(1)) {
    const fields = line.split(";").map((f) => f.trim());
    if (fields.length !== 3 || fields[0] !== "rot") {
      throw new Error(`bad gate line: ${line}`);
    }
    const coeff = parseCoefficient(fields[2]);
    const angle = "expr" in coeff ? coeff.expr : coeff.im === 0 ? coeff.re : fields[2];
    gates.push({ word: fields[1], angle });
  }
  return { qubits: Number(header[1]), gates };
}

export interface StructureEntry {
  alpha: number;
  beta: number;
  gamma: number;
  value: Complex;
}

export function parseStructureCsv(text: string): StructureEntry[] {
  const lines = text.trim().split("\n");
  if (lines[0] !== "alpha,beta,gamma,re,im") {
    throw new Error(`bad structure-constant header: ${lines[0]}`);
  }
  return lines.slice(1).map((line) => {
    const [alpha, beta, gamma, re, im] = line.split(",");
    return {
      alpha: Number(alpha),
      beta: Number(beta),
      gamma: Number(gamma),
      value: { re: Number(re), im: Number(im) },
    };
  });
}
