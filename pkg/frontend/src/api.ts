import { ApiClient } from "./types.js";

export class ServiceError extends Error {
    constructor(
        public status: number,
        public code: string,
        public detail: string,
        public guards: unknown[],
    ) {
        super(`${code}: ${detail}`);
    }
}

// Thin fetch wrapper over the curvectl JSON service.
export class HttpClient implements ApiClient {
    constructor(private baseUrl: string) {}

    private async handle<T>(resp: Response): Promise<T> {
        const body = await resp.json();
        if (!resp.ok) {
            throw new ServiceError(
                resp.status,
                body.error ?? "Unknown",
                body.detail ?? "",
                body.guards ?? [],
            );
        }
        return body as T;
    }

    async post<T>(path: string, body: unknown): Promise<T> {
        const resp = await fetch(this.baseUrl + path, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
        });
        return this.handle<T>(resp);
    }

    async get<T>(path: string): Promise<T> {
        return this.handle<T>(await fetch(this.baseUrl + path));
    }
}
