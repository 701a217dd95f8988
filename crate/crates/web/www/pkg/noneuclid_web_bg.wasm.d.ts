/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_figure_free: (a: number, b: number) => void;
export const diskFrame: () => [number, number];
export const diskTriangle: (a: number, b: number) => [number, number, number];
export const figure_report: (a: number) => [number, number];
export const figure_summary: (a: number) => [number, number];
export const figure_svg: (a: number) => [number, number];
export const foldTemplate: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const tilingNet: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
