import init, { triangleFree, diskLattice, extendPath } from "./pkg/matchstick_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function show(prefix, run, describe) {
  const stats = $(prefix + "-stats");
  const fig = $(prefix + "-fig");
  try {
    const out = JSON.parse(run());
    stats.className = "stats";
    stats.textContent = describe(out);
    fig.innerHTML = out.svg;
  } catch (err) {
    stats.className = "stats error";
    stats.textContent = String(err.message ?? err);
    fig.innerHTML = "";
  }
}

const fmt = (x) => x.toFixed(4);

function buildTriangleFree() {
  show("tf", () => triangleFree(num("tf-n")), (o) =>
    `n = ${o.n}  e = ${o.e}  floor formula = ${o.target}\n` +
    `2n - sqrt(2n) = ${fmt(o.lower)}  <=  e  <=  2n - (sqrt(2)/5) sqrt(n) = ${fmt(o.upper)}\n` +
    `base zonotope k = ${o.base_k}, ${o.added_vertices} added vertices (dashed edges)`);
}

function buildDiskLattice() {
  show("dl", () => diskLattice(num("dl-r"), num("dl-n")), (o) =>
    `n = ${o.n}  e = ${o.e}  e/n = ${fmt(o.ratio)}  2 - 5/r = ${fmt(o.coefficient)}\n` +
    `p = ${o.params.p}  m = ${o.params.m}  lattice points = ${o.params.lattice_points}  padding = ${o.params.padding}`);
}

function runExtendPath() {
  show("ep", () => extendPath(num("ep-r"), num("ep-n"), num("ep-seed")), (o) =>
    `reduced graph: n = ${o.n}  e = ${o.e}  regular edges = ${o.regular_edges}\n` +
    `start edge ${o.alpha}: ${o.steps} steps (${o.hats} hats), path length ${o.final_length}, bound ${o.step_bound}\n` +
    (o.found_irregular ? `reached irregular edge ${o.irregular_edge}` : "stopped without an irregular edge"));
}

await init();
$("tf-go").addEventListener("click", buildTriangleFree);
$("dl-go").addEventListener("click", buildDiskLattice);
$("ep-go").addEventListener("click", runExtendPath);
buildTriangleFree();
buildDiskLattice();
runExtendPath();
