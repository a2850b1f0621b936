import init, { generate_family, complete, classify, family_names } from "./pkg/lattice_loom_web.js";

const $ = (id) => document.getElementById(id);

function show(run) {
  $("error").textContent = "";
  try {
    const result = JSON.parse(run($("structure").value));
    $("drawing").innerHTML = result.svg;
    $("dot").textContent = result.dot ?? "";
    delete result.svg;
    delete result.dot;
    $("summary").textContent = JSON.stringify(result, null, 2);
  } catch (e) {
    $("error").textContent = e.message ?? String(e);
  }
}

await init();

for (const name of family_names().split(",")) {
  $("family").add(new Option(name, name));
}
$("family").value = "crown";

$("gen").onclick = () => {
  $("error").textContent = "";
  try {
    $("structure").value = generate_family($("family").value, $("params").value).trim();
  } catch (e) {
    $("error").textContent = e.message ?? String(e);
  }
};
$("complete").onclick = () => show(complete);
$("classify").onclick = () => show(classify);
