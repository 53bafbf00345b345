import init, { index_set_view, search_lattice, lattice_nodes } from "./pkg/rank1_demo.js";

const $ = (id) => document.getElementById(id);
let currentSet = null;
let currentLattice = null;

function fail(target, e) {
  target.textContent = String(e.message ?? e);
  target.classList.add("error");
}

function ok(target, text) {
  target.textContent = text;
  target.classList.remove("error");
}

function drawSet(view) {
  const ctx = $("set-canvas").getContext("2d");
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  if (view.dim !== 2) {
    ctx.fillText(`plot shows d = 2 only (d = ${view.dim})`, 10, 20);
    return;
  }
  const extent = Math.max(...view.members.flat()) + 1;
  const cell = Math.min(width, height) / extent;
  const maximal = new Set(view.maximal.map((k) => k.join(",")));
  for (const [a, b] of view.members) {
    ctx.fillStyle = maximal.has(`${a},${b}`) ? "#c44" : "#48c";
    ctx.fillRect(a * cell + 1, height - (b + 1) * cell + 1, cell - 2, cell - 2);
  }
}

function build() {
  try {
    const view = JSON.parse(
      index_set_view($("family").value, Number($("dim").value), Number($("size").value), $("weights").value),
    );
    currentSet = view.text;
    drawSet(view);
    ok($("set-info"), `#Λ = ${view.card}\n#M(Λ) = ${view.card_mirror}\nmaximal: ${view.maximal.length}\n\n${view.text}`);
  } catch (e) {
    currentSet = null;
    fail($("set-info"), e);
  }
}

function search() {
  if (!currentSet) return fail($("search-info"), "build a set first");
  try {
    const r = JSON.parse(search_lattice(currentSet, $("plan").value, $("algo").value));
    currentLattice = r;
    ok(
      $("search-info"),
      `n = ${r.n}\nz = (${r.z.join(", ")})\nplan ${r.plan}, ${r.algo}\n` +
        `bounds: ${r.lower_bound} ≤ n* ≤ ${r.upper_bound}\nadmissible: ${r.admissible}`,
    );
  } catch (e) {
    currentLattice = null;
    fail($("search-info"), e);
  }
}

function plot() {
  if (!currentLattice) return fail($("node-info"), "search a lattice first");
  try {
    const view = JSON.parse(lattice_nodes(BigInt(currentLattice.n), BigInt64Array.from(currentLattice.z.map(BigInt))));
    const pts = $("cosine").checked ? view.cosine : view.points;
    const dim = currentLattice.z.length;
    const [i, j] = $("axes").value.split(",").map((s) => Number(s) - 1);
    if (!(i >= 0 && i < dim && ((j >= 0 && j < dim) || dim === 1))) throw new Error(`axes must lie in 1..${dim}`);
    const ctx = $("node-canvas").getContext("2d");
    const { width, height } = ctx.canvas;
    ctx.clearRect(0, 0, width, height);
    const lo = $("cosine").checked ? -1 : 0;
    const scale = (v) => (v - lo) / (1 - lo);
    ctx.fillStyle = "#222";
    for (const p of pts) {
      const x = scale(p[i]) * (width - 8) + 4;
      const y = dim === 1 ? height / 2 : height - (scale(p[j]) * (height - 8) + 4);
      ctx.beginPath();
      ctx.arc(x, y, 2, 0, 2 * Math.PI);
      ctx.fill();
    }
    ok($("node-info"), `${view.n} nodes`);
  } catch (e) {
    fail($("node-info"), e);
  }
}

await init();
$("build").addEventListener("click", build);
$("search").addEventListener("click", search);
$("plot").addEventListener("click", plot);
build();
$("status").textContent = "ready";
