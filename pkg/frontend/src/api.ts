/** Typed client for the recommendation service API. */

export interface GrantSummary {
  grant_id: string;
  title: string;
  surface_documents: number;
  historical_documents: number;
}

export interface RuleView {
  antecedent: string[];
  consequent: string[];
  support: number;
  confidence: number;
  lift: number;
}

export interface EntryView {
  researcher_id: string;
  surface: number;
  historical: number;
  total: number;
  selected: boolean;
  matched_keywords: string[];
  matched_rules: RuleView[];
}

export interface RecommendationView {
  grant_id: string;
  alpha: number;
  beta: number;
  threshold: number;
  entries: EntryView[];
  selected: string[];
  note: string;
}

export interface ResearcherView {
  researcher_id: string;
  display_name: string;
  kaken_keywords: string[];
  paper_document_ids: string[];
  past_kaken_document_ids: string[];
}

/** The service rejected the request (4xx/5xx with an {error, field?} body). */
export class ServiceError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly field?: string,
  ) {
    super(message);
    this.name = 'ServiceError';
  }
}

/** The service could not be reached at all. */
export class NetworkError extends Error {
  constructor(message: string) {
    super(message);
    this.name = 'NetworkError';
  }
}

export interface ServiceClient {
  listGrants(): Promise<GrantSummary[]>;
  recommendations(grantId: string, alpha: number, threshold: number): Promise<RecommendationView>;
  researcher(researcherId: string): Promise<ResearcherView>;
}

export function createClient(baseUrl: string, fetchImpl: typeof fetch = fetch): ServiceClient {
  const base = baseUrl.replace(/\/+$/, '');

  async function request<T>(path: string): Promise<T> {
    let response: Response;
    try {
      response = await fetchImpl(base + path);
    } catch (err) {
      throw new NetworkError(String(err));
    }
    if (!response.ok) {
      let payload: { error?: string; field?: string } = {};
      try {
        payload = await response.json();
      } catch {
        // non-JSON error body; fall through to the generic message
      }
      throw new ServiceError(
        payload.error ?? `request failed with status ${response.status}`,
        response.status,
        payload.field,
      );
    }
    return response.json() as Promise<T>;
  }

  return {
    listGrants: () => request<GrantSummary[]>('/grants'),
    recommendations: (grantId, alpha, threshold) =>
      request<RecommendationView>(
        `/grants/${encodeURIComponent(grantId)}/recommendations` +
          `?alpha=${alpha}&threshold=${threshold}`,
      ),
    researcher: (researcherId) =>
      request<ResearcherView>(`/researchers/${encodeURIComponent(researcherId)}`),
  };
}
