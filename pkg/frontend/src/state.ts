/**
 * Workbench state: slider values, the latest acknowledged ranking, and the
 * detail panel for the focused researcher.
 *
 * All score math stays server-side. Slider changes are debounced, and a
 * newer value supersedes any older in-flight query (last write wins), so the
 * table always reflects the latest acknowledged slider values.
 */

import {
  EntryView,
  GrantSummary,
  NetworkError,
  RecommendationView,
  ServiceClient,
  ServiceError,
} from './api.js';

export const SLIDER_STEP = 0.05;
export const DEBOUNCE_MS = 150;

/** Snap a raw slider value onto the 0.05 grid (two clean decimals). */
export function snapToStep(value: number): number {
  const ticks = Math.round(value / SLIDER_STEP);
  return Math.min(20, Math.max(0, ticks)) / 20;
}

/** Weight of the historical channel implied by alpha, at step resolution. */
export function betaFor(alpha: number): number {
  return (20 - Math.round(alpha * 20)) / 20;
}

export interface DetailPanel {
  researcherId: string;
  surface: number;
  historical: number;
  matchedKeywords: string[];
  matchedRules: EntryView['matched_rules'];
}

export interface WorkbenchSnapshot {
  grants: GrantSummary[];
  grantId: string | null;
  alpha: number;
  beta: number;
  threshold: number;
  /** Latest ranking acknowledged by the service. */
  list: RecommendationView | null;
  /** True when the newest query could not reach the service. */
  stale: boolean;
  /** Inline message from a service-side rejection. */
  inlineError: string | null;
  detail: DetailPanel | null;
  pending: boolean;
}

type Listener = (snapshot: WorkbenchSnapshot) => void;

export class Workbench {
  private snapshot: WorkbenchSnapshot = {
    grants: [],
    grantId: null,
    alpha: 0.5,
    beta: 0.5,
    threshold: 0.4,
    list: null,
    stale: false,
    inlineError: null,
    detail: null,
    pending: false,
  };

  private listeners = new Set<Listener>();
  private sequence = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly client: ServiceClient,
    private readonly debounceMs: number = DEBOUNCE_MS,
  ) {}

  getSnapshot(): WorkbenchSnapshot {
    return this.snapshot;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private emit(changes: Partial<WorkbenchSnapshot>): void {
    this.snapshot = { ...this.snapshot, ...changes };
    for (const listener of this.listeners) listener(this.snapshot);
  }

  /** Load the grant list and focus the first grant. */
  async init(): Promise<void> {
    const grants = await this.client.listGrants();
    this.emit({ grants });
    const first = grants[0];
    if (first) await this.selectGrant(first.grant_id);
  }

  async selectGrant(grantId: string): Promise<void> {
    if (grantId === this.snapshot.grantId) return;
    this.cancelPendingTimer();
    this.emit({ grantId, detail: null, list: null, inlineError: null });
    await this.issueQuery();
  }

  /** Slider input; identical values are ignored so nothing is re-fetched. */
  setAlpha(raw: number): void {
    const alpha = snapToStep(raw);
    if (alpha === this.snapshot.alpha) return;
    this.emit({ alpha, beta: betaFor(alpha) });
    this.scheduleQuery();
  }

  setThreshold(raw: number): void {
    const threshold = snapToStep(raw);
    if (threshold === this.snapshot.threshold) return;
    this.emit({ threshold });
    this.scheduleQuery();
  }

  /** Show why a ranked researcher matched; no extra fetch needed. */
  focusRow(researcherId: string): void {
    const entry = this.snapshot.list?.entries.find(
      (e) => e.researcher_id === researcherId,
    );
    if (!entry) return;
    this.emit({ detail: detailFor(entry) });
  }

  private cancelPendingTimer(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }

  private scheduleQuery(): void {
    if (this.snapshot.grantId === null) return;
    this.cancelPendingTimer();
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.issueQuery();
    }, this.debounceMs);
  }

  private async issueQuery(): Promise<void> {
    const { grantId, alpha, threshold } = this.snapshot;
    if (grantId === null) return;
    const mySequence = ++this.sequence;
    this.emit({ pending: true });
    try {
      const list = await this.client.recommendations(grantId, alpha, threshold);
      if (mySequence !== this.sequence) return; // superseded
      const focused = this.snapshot.detail?.researcherId;
      const entry = focused
        ? list.entries.find((e) => e.researcher_id === focused)
        : undefined;
      this.emit({
        list,
        stale: false,
        inlineError: null,
        pending: false,
        detail: entry ? detailFor(entry) : null,
      });
    } catch (err) {
      if (mySequence !== this.sequence) return;
      if (err instanceof NetworkError) {
        // table retained; banner marks it stale
        this.emit({ stale: true, pending: false });
      } else if (err instanceof ServiceError) {
        this.emit({ inlineError: err.message, pending: false });
      } else {
        throw err;
      }
    }
  }
}

function detailFor(entry: EntryView): DetailPanel {
  return {
    researcherId: entry.researcher_id,
    surface: entry.surface,
    historical: entry.historical,
    matchedKeywords: entry.matched_keywords,
    matchedRules: entry.matched_rules,
  };
}
