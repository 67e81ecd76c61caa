/** Wires the controls to the workbench store and repaints on every change. */

import { createClient } from './api.js';
import { bannerHtml, betaText, detailHtml, grantOptionsHtml, tableHtml } from './render.js';
import { Workbench } from './state.js';

function element<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

const params = new URLSearchParams(window.location.search);
const serviceUrl = params.get('service') ?? 'http://127.0.0.1:8765';

const workbench = new Workbench(createClient(serviceUrl));

const grantSelect = element<HTMLSelectElement>('grant');
const alphaSlider = element<HTMLInputElement>('alpha');
const thresholdSlider = element<HTMLInputElement>('threshold');
const alphaValue = element<HTMLSpanElement>('alpha-value');
const betaValue = element<HTMLSpanElement>('beta-value');
const thresholdValue = element<HTMLSpanElement>('threshold-value');
const banner = element<HTMLDivElement>('banner');
const table = element<HTMLDivElement>('table');
const detail = element<HTMLDivElement>('detail');

workbench.subscribe((snapshot) => {
  grantSelect.innerHTML = grantOptionsHtml(snapshot);
  alphaSlider.value = String(snapshot.alpha);
  thresholdSlider.value = String(snapshot.threshold);
  alphaValue.textContent = snapshot.alpha.toFixed(2);
  betaValue.textContent = betaText(snapshot.beta);
  thresholdValue.textContent = snapshot.threshold.toFixed(2);
  banner.innerHTML = bannerHtml(snapshot);
  table.innerHTML = tableHtml(snapshot);
  detail.innerHTML = detailHtml(snapshot.detail);
  document.body.classList.toggle('pending', snapshot.pending);
});

grantSelect.addEventListener('change', () => {
  void workbench.selectGrant(grantSelect.value);
});
alphaSlider.addEventListener('input', () => {
  workbench.setAlpha(Number(alphaSlider.value));
});
thresholdSlider.addEventListener('input', () => {
  workbench.setThreshold(Number(thresholdSlider.value));
});
table.addEventListener('click', (event) => {
  const row = (event.target as HTMLElement).closest('tr[data-researcher]');
  if (row instanceof HTMLTableRowElement && row.dataset.researcher) {
    workbench.focusRow(row.dataset.researcher);
  }
});

void workbench.init().catch((err) => {
  banner.innerHTML = `<div class="banner stale">Could not reach ${serviceUrl}: ${String(err)}</div>`;
});
