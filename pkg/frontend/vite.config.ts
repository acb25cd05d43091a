import { defineConfig } from "vitest/config";

// In dev mode the Python service runs separately; proxy its API through
// so the page can be served by vite with hot reload.
export default defineConfig({
  server: {
    proxy: {
      "/api": `http://127.0.0.1:${process.env.DECODON_PORT ?? "8080"}`,
    },
  },
  build: {
    outDir: "dist",
    sourcemap: true,
  },
  test: {
    environment: "jsdom",
    testTimeout: 20000,
    hookTimeout: 120000,
  },
});
