// Generated by `wasm-bindgen --target web` into ./pkg (see README).
import init, { draw_trie, check_cover, common_cover } from "./pkg/covdta_demo.js";

const $ = (id) => document.getElementById(id);
const out = $("out");

function show(html) {
  out.innerHTML = html;
}

await init();

$("draw").addEventListener("click", () => show(draw_trie($("words").value)));
$("check").addEventListener("click", () =>
  show(check_cover($("cover").value, $("words").value, $("mode").value)));
$("scc").addEventListener("click", () => show(common_cover($("words").value)));

show(draw_trie($("words").value));
