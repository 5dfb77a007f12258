/* tslint:disable */
/* eslint-disable */

export function degree_audit(points_json: string): string;

export function pentagon(): string;

/**
 * Moves every point by less than half a pixel until all neighbor
 * distances are distinct.
 */
export function perturb_points(points_json: string, seed: number): string;

export function random_points(n: number, seed: number): string;

/**
 * SVG of the points; `witness_json` is an index array or a report, `edges`
 * is `none`, `nng` or `gp`.
 */
export function render_svg(points_json: string, witness_json: string, edges: string, circles: boolean): string;

/**
 * Solves for `method` in `nng` (r = 1), `exact` or `greedy` (r = 2), or
 * `brute` (full radius) and returns the report JSON.
 */
export function solve(points_json: string, method: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly degree_audit: (a: number, b: number) => [number, number, number, number];
    readonly pentagon: () => [number, number, number, number];
    readonly perturb_points: (a: number, b: number, c: number) => [number, number, number, number];
    readonly random_points: (a: number, b: number) => [number, number, number, number];
    readonly render_svg: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly solve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
