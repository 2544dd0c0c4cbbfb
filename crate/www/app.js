// Static demo page driving the wasm bindings; no framework.
// Build the bindings first:
//   wasm-pack build crates/steklov-wasm --target web --out-dir ../../www/pkg

import init, { conformal_report, annulus_report, mass_curve } from "./pkg/steklov_wasm.js";

const $ = (id) => document.getElementById(id);

// "1, 0.3" or "re:im" entries -> JSON [[re, im], ...] expected by the bindings.
function taylorJson(text) {
  const pairs = text.split(",").map((entry) => {
    const parts = entry.trim().split(":").map(Number);
    if (parts.some(Number.isNaN) || parts.length > 2) {
      throw new Error(`bad coefficient "${entry.trim()}" (use re or re:im)`);
    }
    return [parts[0], parts[1] ?? 0];
  });
  return JSON.stringify(pairs);
}

function renderTable(table, rows) {
  const fmt = (x) => x.toPrecision(8);
  const header =
    "<tr><th>k</th><th>σ</th><th>σ·L</th><th>bound</th><th>slack</th></tr>";
  const body = rows
    .map(
      (r) =>
        `<tr><td>${r.k}</td><td>${fmt(r.sigma)}</td>` +
        `<td${r.equality ? ' class="eq"' : ""}>${fmt(r.sigmaL)}</td>` +
        `<td>${fmt(r.bound)}</td><td>${fmt(r.slack)}</td></tr>`
    )
    .join("");
  table.innerHTML = header + body;
}

function drawBoundary(canvas, points) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const xs = points.map((p) => p[0]);
  const ys = points.map((p) => p[1]);
  const span = Math.max(
    Math.max(...xs) - Math.min(...xs),
    Math.max(...ys) - Math.min(...ys)
  );
  const scale = (canvas.width - 40) / span;
  const cx = (Math.max(...xs) + Math.min(...xs)) / 2;
  const cy = (Math.max(...ys) + Math.min(...ys)) / 2;
  const px = (p) => [
    canvas.width / 2 + (p[0] - cx) * scale,
    canvas.height / 2 - (p[1] - cy) * scale,
  ];
  ctx.beginPath();
  points.forEach((p, i) => {
    const [x, y] = px(p);
    i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
  });
  ctx.closePath();
  ctx.strokeStyle = "#1a56a0";
  ctx.lineWidth = 2;
  ctx.stroke();
  ctx.fillStyle = "#1a56a01a";
  ctx.fill();
}

function drawCurves(canvas, theta, m, density, length) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const pad = 30;
  const x = (t) => pad + ((w - 2 * pad) * t) / (2 * Math.PI);
  const maxDensity = Math.max(...density);

  const plot = (values, top, color) => {
    ctx.beginPath();
    values.forEach((v, i) => {
      const xx = x(theta[i] ?? (2 * Math.PI * i) / values.length);
      const yy = h - pad - (h - 2 * pad) * (v / top);
      i === 0 ? ctx.moveTo(xx, yy) : ctx.lineTo(xx, yy);
    });
    ctx.strokeStyle = color;
    ctx.lineWidth = 2;
    ctx.stroke();
  };
  plot(m, length, "#1a56a0");
  plot(density, maxDensity, "#b0501a");

  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w - 2 * pad, h - 2 * pad);
  ctx.fillStyle = "#1a56a0";
  ctx.fillText("m(θ) / L", pad + 6, pad + 14);
  ctx.fillStyle = "#b0501a";
  ctx.fillText("density (scaled)", pad + 6, pad + 28);
}

function runConformal() {
  const errBox = $("conformal-error");
  errBox.textContent = "";
  try {
    const report = JSON.parse(
      conformal_report(taylorJson($("taylor").value), Number($("kmax").value))
    );
    renderTable($("conformal-table"), report.rows);
    drawBoundary($("domain-canvas"), report.boundary);
    $("conformal-length").textContent = `boundary length L = ${report.length.toPrecision(8)}`;
  } catch (e) {
    errBox.textContent = String(e);
  }
}

function runAnnulus() {
  const errBox = $("annulus-error");
  errBox.textContent = "";
  const epsilon = Number($("epsilon").value);
  $("epsilon-value").textContent = epsilon.toFixed(2);
  try {
    const report = JSON.parse(annulus_report(epsilon, 6));
    renderTable($("annulus-table"), report.rows);
  } catch (e) {
    errBox.textContent = String(e);
  }
}

function runMass() {
  const errBox = $("mass-error");
  errBox.textContent = "";
  try {
    const curve = JSON.parse(
      mass_curve(taylorJson($("taylor").value), Number($("degree").value))
    );
    drawCurves($("mass-canvas"), curve.theta, curve.m, curve.density, curve.length);
  } catch (e) {
    errBox.textContent = String(e);
  }
}

await init();
$("run-conformal").addEventListener("click", runConformal);
$("epsilon").addEventListener("input", runAnnulus);
$("run-mass").addEventListener("click", runMass);
runConformal();
runAnnulus();
runMass();
