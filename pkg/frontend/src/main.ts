import { Studio } from "./studio.js";

const root = document.getElementById("studio");
if (root) {
    const base = new URLSearchParams(window.location.search).get("api")
        ?? "http://127.0.0.1:8321";
    const studio = new Studio(root, base);
    void studio.start();
}
