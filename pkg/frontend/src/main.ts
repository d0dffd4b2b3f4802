/**
 * Browser entry point. The UI is served by the levex process itself (its
 * ui_dir setting), so the API lives at a relative path on the same origin.
 */

import { ApiClient } from "./api.js";
import { createApp } from "./app.js";

const root = document.getElementById("app");
if (root !== null) {
  createApp(root, new ApiClient("/api/v1"));
}
