// Expects the wasm-bindgen output (target "web") in ./pkg, see the README.
import init, { hf_table, hj_chain, flow_dimension } from "./pkg/seifert_web.js";

const $ = (id) => document.getElementById(id);

function show(el, doc, render) {
  el.classList.toggle("error", Boolean(doc.error));
  el.textContent = doc.error ? `${doc.error}: ${doc.message}` : render(doc);
}

function drawRanks(canvas, ranks) {
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  if (ranks.length === 0) {
    ctx.fillStyle = "#666";
    ctx.fillText("no irreducible generators", 20, height / 2);
    return;
  }
  const top = Math.max(...ranks.map((r) => r.rank));
  const pad = 30;
  const slot = (width - 2 * pad) / ranks.length;
  const scale = (height - 2 * pad) / top;
  ctx.font = "12px system-ui";
  ctx.textAlign = "center";
  ranks.forEach((r, i) => {
    const x = pad + i * slot;
    const h = r.rank * scale;
    ctx.fillStyle = "#3a6ea5";
    ctx.fillRect(x + slot * 0.15, height - pad - h, slot * 0.7, h);
    ctx.fillStyle = "#222";
    ctx.fillText(r.grading, x + slot / 2, height - pad + 14);
    ctx.fillText(r.rank, x + slot / 2, height - pad - h - 4);
  });
}

function drawHull(canvas, doc) {
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const pad = 20;
  const unit = (width - 2 * pad) / doc.p;
  // lattice coordinates (x in [-p, 0], y in [0, p]) to canvas pixels
  const px = ([x, y]) => [pad + (x + doc.p) * unit, height - pad - y * unit];
  ctx.fillStyle = "#bbb";
  for (const pt of doc.points) {
    const [cx, cy] = px(pt);
    ctx.beginPath();
    ctx.arc(cx, cy, Math.max(1.5, unit / 6), 0, 2 * Math.PI);
    ctx.fill();
  }
  ctx.strokeStyle = "#c0392b";
  ctx.lineWidth = 2;
  ctx.beginPath();
  doc.hull.forEach((pt, i) => {
    const [cx, cy] = px(pt);
    if (i === 0) ctx.moveTo(cx, cy);
    else ctx.lineTo(cx, cy);
  });
  ctx.stroke();
  ctx.fillStyle = "#c0392b";
  for (const pt of doc.hull) {
    const [cx, cy] = px(pt);
    ctx.beginPath();
    ctx.arc(cx, cy, Math.max(2.5, unit / 4), 0, 2 * Math.PI);
    ctx.fill();
  }
}

function onSubmit(id, handler) {
  $(id).addEventListener("submit", (event) => {
    event.preventDefault();
    handler();
  });
}

await init();

onSubmit("hf-form", () => {
  const doc = JSON.parse(hf_table($("hf-input").value));
  show($("hf-out"), doc, (d) =>
    `${d.manifold}\n` + d.ranks.map((r) => `HF_${r.grading} = Z^${r.rank}`).join("\n") + `\ntotal rank ${d.total}`);
  drawRanks($("hf-chart"), doc.error ? [] : doc.ranks);
});

onSubmit("hj-form", () => {
  const doc = JSON.parse(hj_chain(Number($("hj-p").value), Number($("hj-q").value)));
  show($("hj-out"), doc, (d) =>
    `${d.p}/${d.q} = [${d.coefficients.join(", ")}]\ndenominators ${d.denominators.join(" ")}`);
  if (!doc.error) drawHull($("hj-plot"), doc);
});

onSubmit("flow-form", () => {
  const doc = JSON.parse(flow_dimension($("flow-y").value, $("flow-e1").value, $("flow-e2").value));
  show($("flow-out"), doc, (d) => `${d.manifold}\n${d.from} -> ${d.to}: dim ${d.dim}`);
});

for (const id of ["hf-form", "hj-form", "flow-form"]) {
  $(id).requestSubmit();
}
