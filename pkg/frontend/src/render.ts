/**
 * Pure HTML builders. The table renders entries exactly in service order;
 * any re-sorting would let the view drift from the acknowledged response.
 */

import { RuleView } from './api.js';
import { DetailPanel, WorkbenchSnapshot } from './state.js';

const ESCAPES: Record<string, string> = {
  '&': '&amp;',
  '<': '&lt;',
  '>': '&gt;',
  '"': '&quot;',
  "'": '&#39;',
};

export function escapeHtml(text: string): string {
  return text.replace(/[&<>"']/g, (c) => ESCAPES[c] ?? c);
}

export function formatRule(rule: RuleView): string {
  const left = rule.antecedent.join(', ');
  const right = rule.consequent.join(', ');
  return `{${left}} → {${right}} (lift ${rule.lift.toFixed(2)})`;
}

export function formatScore(value: number): string {
  return value.toFixed(3);
}

export function betaText(beta: number): string {
  return beta.toFixed(2);
}

export function grantOptionsHtml(snapshot: WorkbenchSnapshot): string {
  return snapshot.grants
    .map((g) => {
      const selected = g.grant_id === snapshot.grantId ? ' selected' : '';
      return `<option value="${escapeHtml(g.grant_id)}"${selected}>${escapeHtml(g.title)}</option>`;
    })
    .join('');
}

export function tableHtml(snapshot: WorkbenchSnapshot): string {
  const list = snapshot.list;
  if (!list) {
    return '<p class="placeholder">Pick a grant to see its ranking.</p>';
  }
  const rows = list.entries
    .map((entry) => {
      const classes = ['row'];
      if (entry.selected) classes.push('selected');
      if (entry.researcher_id === snapshot.detail?.researcherId) classes.push('focused');
      return (
        `<tr class="${classes.join(' ')}" data-researcher="${escapeHtml(entry.researcher_id)}">` +
        `<td>${escapeHtml(entry.researcher_id)}</td>` +
        `<td class="num">${formatScore(entry.surface)}</td>` +
        `<td class="num">${formatScore(entry.historical)}</td>` +
        `<td class="num">${formatScore(entry.total)}</td>` +
        `<td class="flag">${entry.selected ? '✓' : ''}</td>` +
        '</tr>'
      );
    })
    .join('');
  return (
    '<table class="ranking">' +
    '<thead><tr><th>researcher</th><th>surface</th><th>historical</th>' +
    '<th>total</th><th>selected</th></tr></thead>' +
    `<tbody>${rows}</tbody></table>` +
    `<p class="note">${escapeHtml(list.note)}</p>`
  );
}

export function detailHtml(detail: DetailPanel | null): string {
  if (!detail) {
    return '<p class="placeholder">Focus a row to see why it matched.</p>';
  }
  const keywords = detail.matchedKeywords.length
    ? detail.matchedKeywords.map((k) => `<li>${escapeHtml(k)}</li>`).join('')
    : '<li class="empty">none</li>';
  const rules = detail.matchedRules.length
    ? detail.matchedRules.map((r) => `<li>${escapeHtml(formatRule(r))}</li>`).join('')
    : '<li class="empty">none</li>';
  return (
    `<h3>${escapeHtml(detail.researcherId)}</h3>` +
    `<p>surface ${formatScore(detail.surface)} · historical ${formatScore(detail.historical)}</p>` +
    `<h4>matched keywords</h4><ul class="keywords">${keywords}</ul>` +
    `<h4>matched rules</h4><ul class="rules">${rules}</ul>`
  );
}

export function bannerHtml(snapshot: WorkbenchSnapshot): string {
  if (snapshot.stale) {
    return '<div class="banner stale">Service unreachable; showing the last loaded ranking.</div>';
  }
  if (snapshot.inlineError) {
    return `<div class="banner error">${escapeHtml(snapshot.inlineError)}</div>`;
  }
  return '';
}
