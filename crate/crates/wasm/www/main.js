// Demo page driver: parse inputs, call the wasm exports, render SVG.

const SVG_NS = "http://www.w3.org/2000/svg";
const CELL = 22;
const BLUE = "#4a90d9";
const GREEN = "#58b368";
const YELLOW = "#f2c94c";
const RED = "#d94a3d";

function el(tag, attrs = {}) {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

function svgCanvas(width, height) {
  return el("svg", {
    viewBox: `0 0 ${width} ${height}`,
    width,
    height,
  });
}

function show(id, node) {
  const host = document.getElementById(id);
  host.replaceChildren(node);
}

function setText(id, text) {
  document.getElementById(id).textContent = text;
}

// ---- concatenation diagram ------------------------------------------------

function renderDiagram(view) {
  const rows = view.rows;
  const maxLen = Math.max(1, ...rows.map((r) => r.blue + r.green));
  const pad = 10;
  const svg = svgCanvas(maxLen * CELL + 2 * pad, Math.max(1, rows.length) * CELL + 2 * pad);
  rows.forEach((row, r) => {
    for (let x = 0; x < row.blue + row.green; x++) {
      svg.append(
        el("rect", {
          x: pad + x * CELL,
          y: pad + r * CELL,
          width: CELL,
          height: CELL,
          fill: x < row.blue ? BLUE : GREEN,
          stroke: "#fff",
          "stroke-width": 1.5,
        }),
      );
    }
  });
  // separator under the staircase prefix
  const sepY = pad + view.c * CELL;
  svg.append(
    el("line", {
      x1: 2,
      y1: sepY,
      x2: maxLen * CELL + 2 * pad - 2,
      y2: sepY,
      stroke: "#6b7a8c",
      "stroke-width": 2,
      "stroke-dasharray": "5,4",
    }),
  );
  show("diagram-svg", svg);
  const fmt = (p) => (p.length ? p.join(",") : "(empty)");
  setText(
    "diagram-readout",
    `L = ${fmt(view.l)}   R = ${fmt(view.r)}${view.swapped ? "   (sides swapped)" : ""}\n` +
      `c = ${view.c}   d = ${view.d}   t = ${view.t}   n = d + t = ${view.n}\n` +
      `residual below the staircase: ${fmt(view.residual)}  (weight ${view.d - (view.c * (view.c + 1)) / 2})`,
  );
}

// ---- involution -----------------------------------------------------------

function renderFranklin(view) {
  const pad = 10;
  const mu = view.mu;
  const maxLen = Math.max(...mu, 1);
  const svg = svgCanvas(maxLen * CELL + 2 * pad, mu.length * CELL + 2 * pad);
  mu.forEach((len, r) => {
    const smallestRow = r === mu.length - 1;
    for (let x = 0; x < len; x++) {
      const inRun = r < view.sigma && x === len - 1;
      svg.append(
        el("circle", {
          cx: pad + x * CELL + CELL / 2,
          cy: pad + r * CELL + CELL / 2,
          r: CELL / 2 - 2,
          fill: smallestRow ? YELLOW : "#fff",
          stroke: inRun ? RED : "#1d2733",
          "stroke-width": inRun ? 3 : 1.2,
        }),
      );
    }
  });
  show("franklin-svg", svg);
  let verdict;
  if (view.case) {
    verdict =
      `${view.case}: even partition ${view.input.join(",")} ` +
      `↔ ${view.image.join(",")}`;
  } else {
    verdict =
      `fixed point: staircase m = ${view.fixed_m} (sign ${view.fixed_sign}), ` +
      `circle sum ${view.mu.reduce((a, b) => a + b, 0)} = m(3m∓1)/2`;
  }
  setText(
    "franklin-readout",
    `halved parts: ${view.mu.join(",")}   s = ${view.s}   σ = ${view.sigma}   k = ${view.k}\n${verdict}`,
  );
  return view;
}

// ---- counts and sweep -----------------------------------------------------

function renderSweep(view) {
  const n = view.max_n;
  const pad = 14;
  const w = Math.max(320, Math.min(900, n * 6));
  const step = (w - 2 * pad) / Math.max(1, n);
  const h = 120;
  const mid = h / 2;
  const svg = svgCanvas(w, h);
  svg.append(el("line", { x1: pad, y1: mid, x2: w - pad, y2: mid, stroke: "#d7dee6" }));
  for (let i = 1; i <= n; i++) {
    const a = view.diff_even[i];
    const b = view.diff_all[i];
    const x = pad + (i - 1) * step;
    if (a !== 0) {
      svg.append(
        el("rect", { x, y: mid - 40, width: Math.max(2, step - 1), height: 40, fill: BLUE }),
      );
    }
    if (b !== 0) {
      svg.append(
        el("rect", {
          x,
          y: b > 0 ? mid - 40 : mid,
          width: Math.max(2, step - 1),
          height: 40,
          fill: GREEN,
          opacity: 0.75,
        }),
      );
    }
  }
  show("sweep-svg", svg);
  const squares = [];
  for (let k = 1; k * k <= n; k++) squares.push(k * k);
  setText(
    "counts-readout",
    `nonzero E0−E1 (blue, always +2) and E2−E3 (green, ±2) up to ${n}\n` +
      `found at n = ${squares.join(", ")} — the perfect squares`,
  );
}

function renderCounts(view) {
  setText(
    "counts-readout",
    `n = ${view.n}\nE = ${view.e}   po = ${view.po}\n` +
      `E0 = ${view.e0}   E1 = ${view.e1}   E2 = ${view.e2}   E3 = ${view.e3}`,
  );
}

// ---- wiring ---------------------------------------------------------------

function hook(buttonId, errorId, action) {
  document.getElementById(buttonId).addEventListener("click", () => {
    setText(errorId, "");
    try {
      action();
    } catch (e) {
      setText(errorId, String(e));
    }
  });
}

async function start() {
  let wasm;
  try {
    wasm = await import("./pkg/twocolor_wasm.js");
    await wasm.default();
  } catch (e) {
    document.querySelector("main").insertAdjacentHTML(
      "afterbegin",
      `<section><h2>module not built</h2>
       <p class="hint">Could not load <code>pkg/twocolor_wasm.js</code>.
       Build it first (see the footer), then reload. (${e})</p></section>`,
    );
    return;
  }

  hook("build", "diagram-error", () => {
    const beta = document.getElementById("beta").value;
    const alpha = document.getElementById("alpha").value;
    renderDiagram(JSON.parse(wasm.bipartition_diagram(beta, alpha)));
  });
  hook("invert", "diagram-error", () => {
    const c = BigInt(document.getElementById("inv-c").value || "0");
    const mu = document.getElementById("inv-mu").value;
    renderDiagram(JSON.parse(wasm.bipartition_invert(c, mu)));
  });

  const step = (input) => {
    const view = renderFranklin(JSON.parse(wasm.franklin_orbit(input)));
    return view;
  };
  hook("step", "franklin-error", () => {
    step(document.getElementById("evens").value);
  });
  hook("follow", "franklin-error", () => {
    const view = step(document.getElementById("evens").value);
    if (view.image) {
      document.getElementById("evens").value = view.image.join(",");
      step(document.getElementById("evens").value);
    }
  });

  hook("count", "counts-error", () => {
    const n = Number(document.getElementById("count-n").value);
    renderCounts(JSON.parse(wasm.count_summary(n)));
  });
  hook("sweep", "counts-error", () => {
    const max = Number(document.getElementById("sweep-max").value);
    renderSweep(JSON.parse(wasm.difference_sweep(max)));
  });

  // initial render
  renderDiagram(JSON.parse(wasm.bipartition_diagram("9,5,3,1", "7,1")));
  renderFranklin(JSON.parse(wasm.franklin_orbit("10,8,4,2")));
  renderSweep(JSON.parse(wasm.difference_sweep(120)));
}

start();
