import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";
import { ApiClient } from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T = any>(name: string): T {
    return JSON.parse(readFileSync(join(here, "fixtures", name), "utf8"));
}

function canonical(value: unknown): string {
    return JSON.stringify(value, (_key, v) =>
        v && typeof v === "object" && !Array.isArray(v)
            ? Object.fromEntries(Object.entries(v).sort(([a], [b]) => (a < b ? -1 : 1)))
            : v,
    );
}

// Replays recorded backend responses, matched on (path, canonical body).
export class ReplayApi implements ApiClient {
    private routes = new Map<string, unknown>();
    calls: { path: string; body: unknown }[] = [];

    register(path: string, body: unknown, response: unknown) {
        this.routes.set(path + "::" + canonical(body), response);
    }

    async post<T>(path: string, body: unknown): Promise<T> {
        this.calls.push({ path, body });
        const key = path + "::" + canonical(body);
        if (!this.routes.has(key)) {
            throw new Error(`no recorded response for ${path} ${canonical(body)}`);
        }
        return this.routes.get(key) as T;
    }

    async get<T>(_path: string): Promise<T> {
        throw new Error("not recorded");
    }
}

// Hands out promises the test resolves manually, in any order.
export class DeferredApi implements ApiClient {
    pending: { path: string; body: unknown; resolve: (v: unknown) => void }[] = [];

    async post<T>(path: string, body: unknown): Promise<T> {
        return new Promise<T>((resolve) => {
            this.pending.push({ path, body, resolve: resolve as (v: unknown) => void });
        });
    }

    async get<T>(_path: string): Promise<T> {
        throw new Error("unused");
    }
}
