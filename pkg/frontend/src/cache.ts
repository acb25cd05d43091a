/**
 * Request bookkeeping: stable hashing of inputs, a per-session
 * response cache so identical drafts never hit the API twice, and a
 * latest-wins guard so at most one design request is in flight.
 */

/** JSON.stringify with object keys sorted, so hashes ignore key order. */
export function stableStringify(value: unknown): string {
  if (Array.isArray(value)) {
    return `[${value.map(stableStringify).join(",")}]`;
  }
  if (value !== null && typeof value === "object") {
    const entries = Object.entries(value as Record<string, unknown>)
      .filter(([, v]) => v !== undefined)
      .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
      .map(([k, v]) => `${JSON.stringify(k)}:${stableStringify(v)}`);
    return `{${entries.join(",")}}`;
  }
  return JSON.stringify(value);
}

export class ResponseCache<T> {
  private readonly entries = new Map<string, T>();

  get(key: string): T | undefined {
    return this.entries.get(key);
  }

  set(key: string, value: T): void {
    this.entries.set(key, value);
  }
}

export interface Settled<T> {
  /** True when a newer call superseded this one; discard the value. */
  stale: boolean;
  value?: T;
  error?: unknown;
}

/**
 * Latest-wins executor. Each run() supersedes the previous one: the
 * old promise still settles, but flagged stale so its caller renders
 * nothing. The underlying work is not aborted (the service budgets
 * itself); only its result is dropped.
 */
export class LatestRequest<T> {
  private serial = 0;

  async run(work: () => Promise<T>): Promise<Settled<T>> {
    const ticket = ++this.serial;
    try {
      const value = await work();
      return ticket === this.serial ? { stale: false, value } : { stale: true };
    } catch (error) {
      return ticket === this.serial ? { stale: false, error } : { stale: true };
    }
  }
}

/** Trailing-edge debounce; returns the wrapped function plus a flush. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  delayMs: number,
): { call: (...args: A) => void; flush: () => void } {
  let timer: ReturnType<typeof setTimeout> | null = null;
  let pending: A | null = null;
  const fire = () => {
    timer = null;
    if (pending) {
      const args = pending;
      pending = null;
      fn(...args);
    }
  };
  return {
    call(...args: A) {
      pending = args;
      if (timer !== null) clearTimeout(timer);
      timer = setTimeout(fire, delayMs);
    },
    flush() {
      if (timer !== null) clearTimeout(timer);
      fire();
    },
  };
}
