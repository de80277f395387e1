import init, { construct, correlationProfile, table1 } from "./pkg/scp_wasm.js";

const $ = (id) => document.getElementById(id);

function list(id) {
  const s = $(id).value.trim();
  return s === "" ? [] : s.split(/[\s,]+/).map(Number);
}

function params() {
  return JSON.stringify({
    q: Number($("q").value),
    m: Number($("m").value),
    t: Number($("t").value),
    pi: list("pi"),
    d: list("d"),
    g: list("g"),
  });
}

function seq(entries) {
  return entries.map((e) => (e === null ? "." : String(e))).join("");
}

// Bars of |rho(u)|; exact zeros drawn as ticks, the claimed zone shaded.
function draw(points, zcz) {
  const c = $("plot");
  const ctx = c.getContext("2d");
  const w = c.width, h = c.height, pad = 24;
  ctx.clearRect(0, 0, w, h);
  const n = points.length;
  const max = Math.max(1, ...points.map((p) => p.magnitude));
  const bw = (w - 2 * pad) / n;
  const x = (i) => pad + i * bw;
  const y = (v) => h - pad - (v / max) * (h - 2 * pad);
  const mid = (n - 1) / 2;

  ctx.fillStyle = "#e8f4e8";
  ctx.fillRect(x(mid - zcz + 1), pad, (2 * zcz - 1) * bw, h - 2 * pad);

  points.forEach((p, i) => {
    if (p.zero) {
      ctx.fillStyle = "#2a2";
      ctx.fillRect(x(i) + bw * 0.25, h - pad - 2, Math.max(1, bw * 0.5), 2);
    } else {
      ctx.fillStyle = "#36c";
      ctx.fillRect(x(i) + bw * 0.1, y(p.magnitude), Math.max(1, bw * 0.8), h - pad - y(p.magnitude));
    }
  });

  ctx.fillStyle = "#000";
  ctx.font = "11px sans-serif";
  ctx.fillText(`max |rho| = ${max.toFixed(3)}`, pad, 14);
  ctx.fillText(`u = ${points[0].u}`, pad, h - 6);
  ctx.fillText(`${points[n - 1].u}`, w - pad - 16, h - 6);
  ctx.fillText("0", x(mid), h - 6);
}

function build() {
  const status = $("status");
  status.className = "";
  try {
    const p = params();
    const s = JSON.parse(construct(p));
    const pts = JSON.parse(correlationProfile(p, $("kind").value));
    draw(pts, s.zcz);
    const lines = [
      `f = ${s.function}`,
      `L = ${s.length}, Z = ${s.zcz} (measured ${s.measured_zcz}), sparsity ${s.sparsity}`,
      `verified: ${s.passed}${s.first_failure ? ` (first failure ${s.first_failure})` : ""}`,
      `C0 = ${seq(s.c0)}`,
      `C1 = ${seq(s.c1)}`,
    ];
    if (s.mate) {
      lines.push(`S0 = ${seq(s.mate.s0)}`, `S1 = ${seq(s.mate.s1)}`);
      lines.push(`mate verified: ${s.mate.passed} (measured zone ${s.mate.measured_zcz})`);
    } else {
      lines.push("no mate for these parameters");
    }
    $("summary").textContent = lines.join("\n");
    status.textContent = "";
  } catch (e) {
    status.className = "err";
    status.textContent = String(e.message ?? e);
  }
}

function showTable() {
  const rows = JSON.parse(table1());
  const head = "<tr><th>L</th><th>m</th><th>restricted</th><th>Z</th><th>sparsity</th>"
    + "<th>measured Z</th><th>verified</th></tr>";
  const body = rows.map((r) => {
    const sp = `${r.sparsity.zeros}/${r.sparsity.length}`;
    const vars = r.restricted.map((v) => `x${v}`).join(" ");
    return `<tr class="${r.verified ? "" : "bad"}"><td>${r.length}</td><td>${r.m}</td>`
      + `<td>${vars}</td><td>${r.zcz}</td><td>${sp}</td><td>${r.measured_zcz}</td>`
      + `<td>${r.verified}</td></tr>`;
  }).join("");
  $("table-out").innerHTML = `<table>${head}${body}</table>`;
}

await init();
$("build").addEventListener("click", build);
$("kind").addEventListener("change", build);
$("table").addEventListener("click", showTable);
build();
