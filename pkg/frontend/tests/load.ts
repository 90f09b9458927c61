import { readFileSync } from "node:fs";

// Fixtures are real server responses captured by scripts/record-fixtures.sh.
export function loadFixture<T>(name: string): T {
  const url = new URL(`./fixtures/${name}.json`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf8")) as T;
}
