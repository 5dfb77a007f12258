import init, { solve, render_svg, random_points, pentagon, perturb_points, degree_audit } from "./pkg/multipack_web.js";

const HEIGHT = 480;
const board = document.getElementById("board");
const out = document.getElementById("out");
let points = [];
let perturbSeed = 0;

const json = () => JSON.stringify({ dim: 2, points });
const selected = (name) => document.querySelector(`input[name=${name}]:checked`).value;

function load(text) {
  points = JSON.parse(text).points;
  update();
}

function compute() {
  const p = json();
  switch (selected("mode")) {
    case "nng": {
      const report = JSON.parse(solve(p, "nng"));
      return { witness: report.indices, lines: [`max 1-multipacking: ${report.size}`] };
    }
    case "pair": {
      const exact = JSON.parse(solve(p, "exact"));
      const greedy = JSON.parse(solve(p, "greedy"));
      return {
        witness: exact.indices,
        lines: [
          `max 2-multipacking: ${exact.size} (${exact.stats.nodes} search nodes)`,
          `greedy + swaps: ${greedy.size} [${greedy.indices.join(", ")}]`,
        ],
      };
    }
    default: {
      const report = JSON.parse(solve(p, "brute"));
      return { witness: report.indices, lines: [`multipacking number: ${report.size}`] };
    }
  }
}

function update() {
  out.classList.remove("error");
  const edges = selected("edges");
  const circles = document.getElementById("circles").checked;
  let witness = [];
  let lines = [`${points.length} points`];
  if (points.length >= 3) {
    try {
      const result = compute();
      witness = result.witness;
      lines = lines.concat(result.lines);
      const audit = JSON.parse(degree_audit(json()));
      lines.push(`conflict graph max degree: ${audit.max_degree} (bound 17)`);
    } catch (e) {
      out.classList.add("error");
      lines.push(String(e));
      if (String(e).includes("general position")) lines.push("Use \"Break ties\" to nudge the points.");
    }
  }
  try {
    board.innerHTML = points.length ? render_svg(json(), JSON.stringify(witness), edges, circles) : "";
  } catch (e) {
    board.innerHTML = render_svg(json(), "[]", "none", false);
  }
  out.textContent = lines.join("\n");
}

board.addEventListener("click", (ev) => {
  const box = board.getBoundingClientRect();
  const x = Math.round(ev.clientX - box.left);
  const y = Math.round(HEIGHT - (ev.clientY - box.top));
  if (points.some(([px, py]) => Number(px) === x && Number(py) === y)) return;
  points.push([x, y]);
  update();
});

document.getElementById("clear").onclick = () => { points = []; update(); };
document.getElementById("pentagon").onclick = () => load(pentagon());
document.getElementById("random").onclick = () => {
  const n = Number(document.getElementById("count").value);
  const seed = Number(document.getElementById("seed").value);
  try { load(random_points(n, seed)); } catch (e) { out.textContent = String(e); }
};
document.getElementById("perturb").onclick = () => {
  try { load(perturb_points(json(), ++perturbSeed)); } catch (e) { out.textContent = String(e); }
};
for (const input of document.querySelectorAll("input[name=mode], input[name=edges], #circles")) {
  input.onchange = update;
}

await init();
update();
