/** App shell: decodon explorer on the left, workbench and dashboard on the right. */

import { mountDecodonPanel } from "./decodonPanel";
import { renderDashboard } from "./dashboard";
import { mountWorkbench } from "./workbench";
import { el } from "./dom";
import "./style.css";

export function mountApp(root: HTMLElement): void {
  const panelRoot = el("section", { class: "pane decodon-pane" }, el("h2", {}, "decodon explorer"));
  const benchRoot = el("section", { class: "pane bench-pane" }, el("h2", {}, "library designer"));
  const dashBody = el("div", { class: "dash-body" });
  const dashRoot = el("section", { class: "pane dash-pane" }, el("h2", {}, "design report"), dashBody);

  root.append(
    el("header", { class: "masthead" },
      el("h1", {}, "decodonkit"),
      el("p", { class: "muted" }, "targeted mutant libraries at minimal synthesis cost"),
    ),
    el("main", { class: "layout" }, panelRoot, el("div", { class: "column" }, benchRoot, dashRoot)),
  );

  mountDecodonPanel(panelRoot);
  renderDashboard(dashBody, null);
  const workbench = mountWorkbench(benchRoot, {
    onResult: (response) => renderDashboard(dashBody, response),
  });
  workbench.applyPreset("pili");
}

const appRoot = document.getElementById("app");
if (appRoot) mountApp(appRoot);
