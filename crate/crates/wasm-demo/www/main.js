import init, { labelProduct, boundsTable, exactRadioNumber } from "./pkg/meshstar_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function call(f) {
  $("error").hidden = true;
  try {
    return JSON.parse(f());
  } catch (e) {
    $("error").textContent = String(e.message ?? e);
    $("error").hidden = false;
    return null;
  }
}

// Star vertex s of cell (row, col): centre in the middle, leaves on a ring.
function position(row, col, star, n, cell) {
  const cx = (col + 0.5) * cell;
  const cy = (row + 0.5) * cell;
  if (star === 0) return [cx, cy];
  const a = (2 * Math.PI * (star - 1)) / n - Math.PI / 2;
  const r = cell * 0.3;
  return [cx + r * Math.cos(a), cy + r * Math.sin(a)];
}

function draw(view) {
  const canvas = $("view");
  const ctx = canvas.getContext("2d");
  const cell = canvas.width / view.m;
  ctx.clearRect(0, 0, canvas.width, canvas.height);

  ctx.strokeStyle = "#ddd";
  for (let i = 0; i < view.m; i++) {
    ctx.beginPath();
    ctx.moveTo(cell / 2, (i + 0.5) * cell);
    ctx.lineTo(canvas.width - cell / 2, (i + 0.5) * cell);
    ctx.moveTo((i + 0.5) * cell, cell / 2);
    ctx.lineTo((i + 0.5) * cell, canvas.height - cell / 2);
    ctx.stroke();
  }

  const radius = Math.max(3, Math.min(14, cell / (view.n + 4)));
  ctx.font = `${Math.max(8, radius)}px monospace`;
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  view.coords.forEach(([row, col, star], id) => {
    const [x, y] = position(row, col, star, view.n, cell);
    const t = view.labels[id] / Math.max(1, view.span);
    ctx.fillStyle = `hsl(${240 - 240 * t}, 70%, ${star === 0 ? 45 : 60}%)`;
    ctx.beginPath();
    ctx.arc(x, y, radius, 0, 2 * Math.PI);
    ctx.fill();
    if (cell > 90) {
      ctx.fillStyle = "#000";
      ctx.fillText(view.labels[id], x, y + radius + 8);
    }
  });
}

function showLabeling() {
  const view = call(() => labelProduct(num("m"), num("n"), $("indexing").value));
  if (!view) return;
  draw(view);
  const ok = (b) => `<span class="${b ? "ok" : "bad"}">${b ? "valid" : "invalid"}</span>`;
  $("summary").innerHTML =
    `${view.name}, ${view.coords.length} vertices, diameter ${view.diameter}<br>` +
    `greedy span <b>${view.span}</b> (${ok(view.valid)})<br>` +
    `consecutive-gap span ${view.consecutive_span} (${ok(view.consecutive_valid)})<br>` +
    `lower bound ${view.bound}`;
  $("table").innerHTML = "";
}

function showBounds() {
  const rows = call(() => boundsTable(num("m"), num("n")));
  if (!rows) return;
  $("table").innerHTML =
    "<tr><th>quantity</th><th>value</th></tr>" +
    rows
      .map((r) => `<tr><td>${r.label}</td><td class="${r.integral ? "" : "bad"}">${r.value}</td></tr>`)
      .join("");
}

function showExact() {
  $("exact-out").textContent = "searching...";
  // let the message paint before the search blocks the thread
  setTimeout(() => {
    const r = call(() => exactRadioNumber(num("m"), num("n"), BigInt(num("nodes"))));
    if (!r) {
      $("exact-out").textContent = "";
      return;
    }
    const kind = r.exact ? "rn =" : "rn <=";
    $("exact-out").textContent = `${r.name}: ${kind} ${r.value} after ${r.nodes} nodes (bound ${r.bound})`;
  }, 10);
}

await init();
$("label").onclick = showLabeling;
$("bounds").onclick = showBounds;
$("exact").onclick = showExact;
showLabeling();
