/**
 * Subprocess bridge to the core's file-format CLI (python -m paulialg.cli).
 *
 * Every operation runs in a separate interpreter process, so long-running
 * core computations never block this runtime, and concurrent calls make
 * independent progress.
 */

import { execFile, execFileSync } from "node:child_process";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";
import { promisify } from "node:util";

const execFileAsync = promisify(execFile);

const PYTHON = process.env.PAULIALG_PYTHON ?? "python3";
const MODULE_ARGS = ["-m", "paulialg.cli"];

export class CoreToolError extends Error {
  constructor(message: string, readonly exitCode: number | null) {
    super(message);
    this.name = "CoreToolError";
  }
}

/** Run a tool subcommand synchronously and return its stdout. */
export function runTool(args: string[]): string {
  try {
    return execFileSync(PYTHON, [...MODULE_ARGS, ...args], {
      encoding: "utf8",
      maxBuffer: 256 * 1024 * 1024,
      stdio: ["ignore", "pipe", "pipe"],
    });
  } catch (error) {
    const err = error as { status?: number | null; stderr?: string | Buffer };
    const stderr = err.stderr?.toString().trim() ?? String(error);
    throw new CoreToolError(stderr, err.status ?? null);
  }
}

/** Async variant; concurrent invocations run in parallel processes. */
export async function runToolAsync(args: string[]): Promise<string> {
  try {
    const { stdout } = await execFileAsync(PYTHON, [...MODULE_ARGS, ...args], {
      encoding: "utf8",
      maxBuffer: 256 * 1024 * 1024,
    });
    return stdout;
  } catch (error) {
    const err = error as { code?: number | null; stderr?: string };
    throw new CoreToolError(err.stderr?.trim() ?? String(error), err.code ?? null);
  }
}

/** Create a scratch directory, run the body, then clean up. */
export function withTempDir<T>(body: (dir: string) => T): T {
  const dir = fs.mkdtempSync(path.join(os.tmpdir(), "paulialg-"));
  try {
    return body(dir);
  } finally {
    fs.rmSync(dir, { recursive: true, force: true });
  }
}

export async function withTempDirAsync<T>(body: (dir: string) => Promise<T>): Promise<T> {
  const dir = fs.mkdtempSync(path.join(os.tmpdir(), "paulialg-"));
  try {
    return await body(dir);
  } finally {
    fs.rmSync(dir, { recursive: true, force: true });
  }
}

export function writeInput(dir: string, name: string, text: string): string {
  const file = path.join(dir, name);
  fs.writeFileSync(file, text, "utf8");
  return file;
}
