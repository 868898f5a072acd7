import init, { betti_table, bott, schubert_pattern } from "./pkg/schubres_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function fail(target, e) {
  target.innerHTML = "";
  const p = document.createElement("p");
  p.className = "err";
  p.textContent = String(e);
  target.appendChild(p);
}

function cell(row, text, tag = "td", cls = "") {
  const c = document.createElement(tag);
  c.textContent = text;
  if (cls) c.className = cls;
  row.appendChild(c);
}

function showBetti() {
  const out = $("betti-out");
  try {
    const data = JSON.parse(betti_table(num("betti-n"), num("betti-k")));
    const entries = data.table.betti;
    const degrees = [...new Set(entries.map((e) => e.degree))].sort((a, b) => a - b);
    const rows = Math.max(...entries.map((e) => e.i)) + 1;
    const table = document.createElement("table");
    const head = table.insertRow();
    cell(head, "i \\ d", "th");
    degrees.forEach((d) => cell(head, d, "th"));
    for (let i = 0; i < rows; i++) {
      const tr = table.insertRow();
      cell(tr, i, "th");
      for (const d of degrees) {
        const e = entries.find((x) => x.i === i && x.degree === d);
        cell(tr, e ? e.mult : ".", "td", e ? "" : "zero");
      }
    }
    out.innerHTML = "";
    out.appendChild(table);
    const info = document.createElement("p");
    const c = data.consistency;
    info.textContent = `K-polynomial ${data.k_polynomial_text}; codim ${data.table.codim}` +
      (c.divisible ? `, degree ${c.degree}` : ", not divisible");
    out.appendChild(info);
  } catch (e) {
    fail(out, e);
  }
}

function showBott() {
  const out = $("bott-out");
  try {
    const data = JSON.parse(bott(num("bott-m"), $("bott-weight").value));
    const pre = document.createElement("pre");
    pre.textContent = data.result.kind === "zero"
      ? "all cohomology vanishes"
      : `${data.text}\ndim = ${data.dim}`;
    out.innerHTML = "";
    out.appendChild(pre);
  } catch (e) {
    fail(out, e);
  }
}

function showCell() {
  const out = $("cell-out");
  try {
    const data = JSON.parse(schubert_pattern(num("cell-n"), num("cell-k"), num("cell-r"), $("cell-sp").checked));
    const info = document.createElement("p");
    info.textContent = `w = (${data.w}), w~ = (${data.w_tilde}), ${data.free} free coordinates, ` +
      `dim Y = ${data.desing.dim_y}, codim ${data.desing.codim}`;
    const table = document.createElement("table");
    table.className = "pattern";
    for (const row of data.cells) {
      const tr = table.insertRow();
      row.forEach((x) => cell(tr, x, "td", x === "0" ? "zero" : ""));
    }
    out.innerHTML = "";
    out.append(info, table);
  } catch (e) {
    fail(out, e);
  }
}

await init();
$("betti-run").addEventListener("click", showBetti);
$("bott-run").addEventListener("click", showBott);
$("cell-run").addEventListener("click", showCell);
showBetti();
showBott();
showCell();
