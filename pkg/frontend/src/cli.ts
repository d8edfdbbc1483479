import { parseArgs } from "node:util";

import { ALL_CANNED_NAMES } from "./figures.js";
import { renderAll, renderByName, renderTopology } from "./render.js";

function usage(): string {
  return [
    "usage:",
    "  render --csv PATH --figure NAME --out PATH [--edges PATH]",
    "  render-all --dir PATH [--out-dir PATH]",
    "",
    `figures: ${ALL_CANNED_NAMES.join(", ")}`,
  ].join("\n");
}

export function main(argv: string[]): number {
  const [command, ...rest] = argv;
  try {
    if (command === "render") {
      const { values } = parseArgs({
        args: rest,
        options: {
          csv: { type: "string" },
          figure: { type: "string" },
          out: { type: "string" },
          edges: { type: "string" },
        },
      });
      if (!values.csv || !values.figure || !values.out) {
        throw new Error(`render needs --csv, --figure and --out\n${usage()}`);
      }
      if (values.figure === "topology" && values.edges) {
        renderTopology(values.csv, values.out, values.edges);
      } else {
        renderByName(values.figure, values.csv, values.out);
      }
      console.log(`wrote ${values.out}`);
      return 0;
    }
    if (command === "render-all") {
      const { values } = parseArgs({
        args: rest,
        options: { dir: { type: "string" }, "out-dir": { type: "string" } },
      });
      if (!values.dir) {
        throw new Error(`render-all needs --dir\n${usage()}`);
      }
      const written = renderAll(values.dir, values["out-dir"]);
      for (const path of written) console.log(`wrote ${path}`);
      return 0;
    }
    throw new Error(usage());
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    return 2;
  }
}

process.exitCode = main(process.argv.slice(2));
