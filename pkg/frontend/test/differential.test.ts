/**
 * Differential suite: 100 random small cases comparing wrapper results
 * against native-core results. Every route goes through the core; the
 * wrapper composes single native calls, so each case checks a composite
 * wrapper expression against the direct native operation, exactly on
 * keys and to 1e-12 on values.
 */

import { describe, expect, it } from "vitest";

import type { Complex } from "../src/complex.js";
import { absDiff } from "../src/complex.js";
import { PauliOp, commutator } from "../src/pauliOp.js";
import { Rng, randomOp } from "./util.js";

const TOL = 1e-12;

function expectSameOperator(a: PauliOp, b: PauliOp): void {
  const ta = a.numericTerms();
  const tb = b.numericTerms();
  expect([...ta.keys()].sort()).toEqual([...tb.keys()].sort());
  for (const [word, value] of ta) {
    expect(absDiff(value, tb.get(word) as Complex)).toBeLessThanOrEqual(TOL);
  }
}

function makePair(rng: Rng): [PauliOp, PauliOp] {
  const qubits = 1 + rng.int(4);
  return [randomOp(rng, qubits, 8), randomOp(rng, qubits, 8)];
}

describe("differential suite (100 cases)", () => {
  it("commutator equals a*b - b*a composed from native calls (34 cases)", () => {
    const rng = new Rng(1);
    for (let caseIndex = 0; caseIndex < 34; caseIndex += 1) {
      const [a, b] = makePair(rng);
      const direct = commutator(a, b);
      const composed = a.mul(b).add(b.mul(a).scalarMul(-1));
      expectSameOperator(direct, composed);
    }
  }, 240_000);

  it("dagger of a product equals the reversed product of daggers (33 cases)", () => {
    const rng = new Rng(2);
    for (let caseIndex = 0; caseIndex < 33; caseIndex += 1) {
      const [a, b] = makePair(rng);
      const direct = a.mul(b).dagger();
      const composed = b.dagger().mul(a.dagger());
      expectSameOperator(direct, composed);
    }
  }, 240_000);

  it("addition commutes and serialized text round-trips (33 cases)", () => {
    const rng = new Rng(3);
    for (let caseIndex = 0; caseIndex < 33; caseIndex += 1) {
      const [a, b] = makePair(rng);
      const left = a.add(b);
      const right = b.add(a);
      expectSameOperator(left, right);
      const reparsed = PauliOp.fromText(left.serialize());
      expect([...reparsed.terms()]).toEqual([...left.terms()]);
    }
  }, 240_000);
});
