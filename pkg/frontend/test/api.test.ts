import { describe, expect, it } from 'vitest';

import { NetworkError, ServiceError, createClient } from '../src/api.js';
import { alpha05, badAlphaBody } from './fixtures.js';

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}

describe('service client', () => {
  it('requests recommendations with query parameters', async () => {
    const seen: string[] = [];
    const client = createClient('http://svc:1/', (async (url: RequestInfo | URL) => {
      seen.push(String(url));
      return jsonResponse(alpha05);
    }) as typeof fetch);

    const list = await client.recommendations('infotech', 0.5, 0.4);
    expect(seen).toEqual([
      'http://svc:1/grants/infotech/recommendations?alpha=0.5&threshold=0.4',
    ]);
    expect(list.selected).toEqual(['1-C']);
  });

  it('turns an {error, field} body into a ServiceError', async () => {
    const client = createClient('http://svc:1', (async () =>
      jsonResponse(badAlphaBody, 400)) as typeof fetch);

    const failure = await client
      .recommendations('infotech', 1.3, 0.4)
      .then(() => null, (err) => err);
    expect(failure).toBeInstanceOf(ServiceError);
    expect((failure as ServiceError).field).toBe('alpha');
    expect((failure as ServiceError).status).toBe(400);
  });

  it('wraps fetch failures in NetworkError', async () => {
    const client = createClient('http://svc:1', (async () => {
      throw new TypeError('fetch failed');
    }) as typeof fetch);

    await expect(client.listGrants()).rejects.toBeInstanceOf(NetworkError);
  });

  it('escapes path segments', async () => {
    const seen: string[] = [];
    const client = createClient('http://svc:1', (async (url: RequestInfo | URL) => {
      seen.push(String(url));
      return jsonResponse({});
    }) as typeof fetch);
    await client.researcher('a/b c');
    expect(seen[0]).toBe('http://svc:1/researchers/a%2Fb%20c');
  });
});
