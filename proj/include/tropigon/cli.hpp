#pragma once

namespace tropigon {

// Entry point for the tropigon tool. Returns the process exit code:
// 0 consistent/ok, 1 refuted, 2 input error, 3 inconclusive (inadmissible).
int run_cli(int argc, char** argv);

}  // namespace tropigon
