/* tslint:disable */
/* eslint-disable */

/**
 * One tiling of a rectangle, with context for the page.
 */
export class View {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly countCapped: boolean;
    /**
     * Number of tilings, or [`COUNT_CAP`] if `count_capped`.
     */
    readonly count: number;
    /**
     * Position of the shown tiling in canonical order.
     */
    readonly index: number;
    readonly moveSites: number;
    /**
     * `PATTERN yes|no` report.
     */
    readonly pattern: string;
    readonly svg: string;
    readonly text: string;
    /**
     * `TILE x y` lines.
     */
    readonly tiling: string;
}

export function explore(height: number, base: number, tile_spec: string, index: number): View | undefined;

export function fixture(name: string, n: number): View;

export function flipSummary(height: number, base: number, tile_spec: string, limit: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_view_free: (a: number, b: number) => void;
    readonly explore: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly fixture: (a: number, b: number, c: number) => [number, number, number];
    readonly flipSummary: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly view_count: (a: number) => number;
    readonly view_countCapped: (a: number) => number;
    readonly view_index: (a: number) => number;
    readonly view_moveSites: (a: number) => number;
    readonly view_pattern: (a: number) => [number, number];
    readonly view_svg: (a: number) => [number, number];
    readonly view_text: (a: number) => [number, number];
    readonly view_tiling: (a: number) => [number, number];
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
