/** CLI: render <csv> <out_dir> */

import { render } from "./render.js";
import { SchemaError } from "./schema.js";

function main(argv: string[]): number {
  if (argv.length !== 2) {
    console.error("usage: render <csv> <out_dir>");
    return 2;
  }
  const [csvPath, outDir] = argv;
  try {
    const { files } = render(csvPath, outDir);
    for (const file of files) console.log(file);
    console.log(`wrote ${files.length} chart(s)`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`error: ${csvPath}: ${err.message}`);
    } else if (err instanceof Error) {
      console.error(`error: ${err.message}`);
    } else {
      console.error(`error: ${String(err)}`);
    }
    return 1;
  }
}

process.exit(main(process.argv.slice(2)));
