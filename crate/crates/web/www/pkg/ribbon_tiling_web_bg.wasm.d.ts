/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_view_free: (a: number, b: number) => void;
export const explore: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const fixture: (a: number, b: number, c: number) => [number, number, number];
export const flipSummary: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const view_count: (a: number) => number;
export const view_countCapped: (a: number) => number;
export const view_index: (a: number) => number;
export const view_moveSites: (a: number) => number;
export const view_pattern: (a: number) => [number, number];
export const view_svg: (a: number) => [number, number];
export const view_text: (a: number) => [number, number];
export const view_tiling: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
