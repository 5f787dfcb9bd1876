import { ApiClient } from "./api.js";
import { mountExplorer } from "./app.js";

declare global {
  interface Window {
    // Override when the JSON service runs on a different origin than
    // the static files, e.g. window.LEXIDRIFT_API = "http://127.0.0.1:8000".
    LEXIDRIFT_API?: string;
  }
}

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app mount point");
}
const client = new ApiClient(window.LEXIDRIFT_API ?? "");
mountExplorer(root, client).catch((err) => {
  console.error("explorer failed to start", err);
});
