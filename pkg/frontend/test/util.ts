/** Deterministic test inputs (splitmix64 over BigInt; test-local only). */

import { PauliOp } from "../src/pauliOp.js";

const MASK = (1n << 64n) - 1n;

export class Rng {
  private state: bigint;

  constructor(seed: number | bigint) {
    this.state = BigInt(seed) & MASK;
  }

  nextU64(): bigint {
    this.state = (this.state + 0x9e3779b97f4a7c15n) & MASK;
    let z = this.state;
    z = ((z ^ (z >> 30n)) * 0xbf58476d1ce4e5b9n) & MASK;
    z = ((z ^ (z >> 27n)) * 0x94d049bb133111ebn) & MASK;
    return z ^ (z >> 31n);
  }

  /** Uniform float in [0, 1). */
  nextFloat(): number {
    return Number(this.nextU64() >> 11n) * 2 ** -53;
  }

  int(bound: number): number {
    return Number(this.nextU64() % BigInt(bound));
  }

  uniform(lo: number, hi: number): number {
    return lo + (hi - lo) * this.nextFloat();
  }
}

const LETTERS = ["I", "X", "Y", "Z"] as const;

export function randomWord(rng: Rng, qubits: number): string {
  const tokens: string[] = [];
  for (let i = 0; i < qubits; i += 1) {
    const letter = LETTERS[rng.int(4)];
    if (letter !== "I") {
      tokens.push(`${letter}${i}`);
    }
  }
  return tokens.length > 0 ? tokens.join(" ") : "I";
}

export function randomOp(rng: Rng, qubits: number, maxTerms: number): PauliOp {
  const count = 1 + rng.int(maxTerms);
  const entries: Array<[string, { re: number; im: number }]> = [];
  for (let t = 0; t < count; t += 1) {
    entries.push([
      randomWord(rng, qubits),
      { re: rng.uniform(-1, 1), im: rng.uniform(-1, 1) },
    ]);
  }
  return PauliOp.fromTerms(entries, qubits);
}
