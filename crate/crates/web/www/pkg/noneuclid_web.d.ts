/* tslint:disable */
/* eslint-disable */

export class Figure {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Pretty JSON report.
     */
    readonly report: string;
    /**
     * One line for the page's status area.
     */
    readonly summary: string;
    readonly svg: string;
}

/**
 * Page geometry of the disk drawing: `[page, centre, radius]` in mm.
 */
export function diskFrame(): Float64Array;

export function diskTriangle(coords: Float64Array): Figure;

export function foldTemplate(inner: number, outer: number, creases: number, spacing: string, fold_angle_deg: number): Figure;

export function tilingNet(config: string, rings: number, edge_mm: number, strategy: string): Figure;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_figure_free: (a: number, b: number) => void;
    readonly diskFrame: () => [number, number];
    readonly diskTriangle: (a: number, b: number) => [number, number, number];
    readonly figure_report: (a: number) => [number, number];
    readonly figure_summary: (a: number) => [number, number];
    readonly figure_svg: (a: number) => [number, number];
    readonly foldTemplate: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly tilingNet: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
