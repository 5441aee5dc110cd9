/** Minimal complex-number value used for numeric coefficients. */
export interface Complex {
  re: number;
  im: number;
}

export function complex(re: number, im = 0): Complex {
  return { re, im };
}

export function absDiff(a: Complex, b: Complex): number {
  return Math.hypot(a.re - b.re, a.im - b.im);
}

export function magnitude(a: Complex): number {
  return Math.hypot(a.re, a.im);
}
