import init, { compare, reduce } from "./pkg/grover_wasm.js";

const colors = {
  corrected: "#4fc3f7",
  feng: "#ffb74d",
  analytic: "#b0bec5",
  grid: "#26303d",
  axis: "#55606e",
  ink: "#e6e9ef",
};

const el = (id) => document.getElementById(id);

function drawChart(canvas, series, sMax) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = { left: 52, right: 16, top: 14, bottom: 40 };
  const plotW = w - pad.left - pad.right;
  const plotH = h - pad.top - pad.bottom;
  const x = (s) => pad.left + (sMax === 0 ? 0 : (s / sMax) * plotW);
  const y = (p) => pad.top + (1 - p) * plotH;

  ctx.clearRect(0, 0, w, h);

  ctx.strokeStyle = colors.grid;
  ctx.fillStyle = colors.axis;
  ctx.lineWidth = 1;
  ctx.font = "12px system-ui";
  ctx.textAlign = "right";
  for (let tick = 0; tick <= 4; tick++) {
    const p = tick / 4;
    ctx.beginPath();
    ctx.moveTo(pad.left, y(p));
    ctx.lineTo(w - pad.right, y(p));
    ctx.stroke();
    ctx.fillText(p.toFixed(2), pad.left - 8, y(p) + 4);
  }
  ctx.textAlign = "center";
  const step = Math.max(1, Math.ceil(sMax / 12));
  for (let s = 0; s <= sMax; s += step) {
    ctx.fillText(String(s), x(s), h - pad.bottom + 18);
  }
  ctx.fillText("iterations s", pad.left + plotW / 2, h - 6);
  ctx.save();
  ctx.translate(14, pad.top + plotH / 2);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText(series.yLabel, 0, 0);
  ctx.restore();

  for (const line of series.lines) {
    ctx.strokeStyle = line.color;
    ctx.lineWidth = line.dashed ? 1.5 : 2;
    ctx.setLineDash(line.dashed ? [6, 5] : []);
    ctx.beginPath();
    line.values.forEach((p, s) => {
      if (s === 0) ctx.moveTo(x(s), y(p));
      else ctx.lineTo(x(s), y(p));
    });
    ctx.stroke();
    ctx.setLineDash([]);
    if (!line.dashed) {
      ctx.fillStyle = line.color;
      line.values.forEach((p, s) => {
        ctx.beginPath();
        ctx.arc(x(s), y(p), 3, 0, 2 * Math.PI);
        ctx.fill();
      });
    }
  }
}

function refreshCompare() {
  const n = Number(el("cmp-n").value);
  const marked = el("cmp-marked").value.trim();
  const prepared = el("cmp-prepared").value.trim();
  const sMax = Number(el("cmp-smax").value);
  const plotAmplitude = el("cmp-amplitude").checked;
  el("cmp-smax-label").textContent = String(sMax);
  el("cmp-error").textContent = "";

  let data;
  try {
    data = JSON.parse(compare(n, marked, prepared, sMax));
  } catch (err) {
    el("cmp-error").textContent = String(err);
    return;
  }

  const pick = plotAmplitude
    ? (p) => Math.sqrt(p)
    : (p) => p;
  drawChart(el("cmp-canvas"), {
    yLabel: plotAmplitude ? "marked amplitude |a|" : "success probability",
    lines: [
      { color: colors.analytic, dashed: true, values: data.records.map((r) => pick(r.p_analytic)) },
      { color: colors.feng, values: data.records.map((r) => pick(r.p_feng)) },
      { color: colors.corrected, values: data.records.map((r) => pick(r.p_corrected)) },
    ],
  }, sMax);

  const fmt = (v) => v.toFixed(6);
  el("cmp-readout").innerHTML =
    `θ = <strong>${fmt(data.theta)}</strong> rad, first peak at s* = <strong>${data.optimal_iterations}</strong>\n` +
    `max p (corrected) = <strong>${fmt(data.max_p_corrected)}</strong>, ` +
    `max p (original) = <strong>${fmt(data.max_p_feng)}</strong>, ` +
    `max |a| (original) = <strong>${fmt(Math.sqrt(data.max_p_feng))}</strong>`;
}

function runReduce() {
  el("red-error").textContent = "";
  el("red-output").textContent = "—";
  try {
    const data = JSON.parse(reduce(
      el("red-unitary").value,
      el("red-gamma").value.trim(),
      el("red-tau").value.trim(),
    ));
    const cx = ([re, im]) => {
      const sign = im < 0 ? "−" : "+";
      return `${re.toFixed(6)} ${sign} ${Math.abs(im).toFixed(6)}i`;
    };
    const q = data.q_prime.map(cx);
    el("red-output").textContent =
      `⟨τ|U|γ⟩ = ${cx(data.u_tau_gamma)}\n` +
      `θ = ${data.theta.toFixed(9)} rad   (sin θ = ${data.sin_theta.toFixed(9)})\n` +
      `axis n̂ = (${data.axis[0].toFixed(6)}, ${data.axis[1].toFixed(6)})\n` +
      `Q′ = [ ${q[0]}   ${q[1]}\n       ${q[2]}   ${q[3]} ]\n` +
      `optimal iterations s* = ${data.optimal_iterations}\n` +
      `p(s) = ${data.curve.slice(0, 8).map((p) => p.toFixed(4)).join(", ")}, …`;
  } catch (err) {
    el("red-error").textContent = String(err);
  }
}

async function main() {
  await init();

  for (const id of ["cmp-marked", "cmp-prepared", "cmp-smax", "cmp-amplitude"]) {
    el(id).addEventListener("input", refreshCompare);
  }
  el("cmp-n").addEventListener("input", () => {
    const n = Number(el("cmp-n").value);
    el("cmp-marked").value = "1".repeat(n);
    el("cmp-prepared").value = "0".repeat(n);
    refreshCompare();
  });
  el("red-run").addEventListener("click", runReduce);

  refreshCompare();
  runReduce();
}

main();
