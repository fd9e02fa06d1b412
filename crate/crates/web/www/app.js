import init, { normal_form, nested_sets, strata } from "./pkg/inertia_web.js";

const $ = (id) => document.getElementById(id);

function show(el, f) {
  el.classList.remove("error");
  try {
    f();
  } catch (e) {
    el.classList.add("error");
    el.textContent = String(e);
  }
}

function runNormalForm() {
  const out = $("nf-out");
  show(out, () => {
    const r = JSON.parse(normal_form($("nf-type").value, +$("nf-rank").value, $("nf-word").value));
    out.textContent = `${r.input}\n= ${r.describe}\n= ${r.word || "1"}`;
  });
}

function runNested() {
  const out = $("ns-out");
  show(out, () => {
    const r = JSON.parse(nested_sets($("ns-type").value, +$("ns-rank").value, +$("ns-max").value));
    const els = r.elements.map((e) => `${e.label.padEnd(14)} dim ${e.dim}`);
    const sets = r.nested_sets.map((s) => `{${s.join(", ")}}`);
    out.textContent = `|F| = ${els.length}\n${els.join("\n")}\n\n${sets.length} nested sets\n${sets.join("\n")}`;
  });
}

// Hasse diagram, open stratum on top, one row per codimension.
function runStrata() {
  const out = $("st-out");
  show(out, () => {
    const r = JSON.parse(strata($("st-type").value, +$("st-rank").value));
    const rows = [];
    r.nodes.forEach((n, i) => (rows[n.codim] ??= []).push(i));
    const width = Math.max(600, 90 * Math.max(...rows.map((x) => x.length)));
    const height = 90 * rows.length;
    const pos = [];
    rows.forEach((row, c) =>
      row.forEach((i, k) => (pos[i] = [((k + 0.5) * width) / row.length, 30 + 90 * c])),
    );
    const name = (n) => (n.labels.length ? n.labels.join(" ") : "open");
    let svg = `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}">`;
    for (const [a, b] of r.edges) {
      svg += `<line x1="${pos[a][0]}" y1="${pos[a][1]}" x2="${pos[b][0]}" y2="${pos[b][1]}" stroke="#bbb"/>`;
    }
    r.nodes.forEach((n, i) => {
      svg += `<circle cx="${pos[i][0]}" cy="${pos[i][1]}" r="4" fill="#357"/>`;
      svg += `<text x="${pos[i][0] + 6}" y="${pos[i][1] - 6}">${name(n)}</text>`;
    });
    out.innerHTML = `<p>strata by codimension: ${r.counts_by_codim.join(", ")}</p>` + svg + "</svg>";
  });
}

await init();
$("nf-go").onclick = runNormalForm;
$("ns-go").onclick = runNested;
$("st-go").onclick = runStrata;
runNormalForm();
