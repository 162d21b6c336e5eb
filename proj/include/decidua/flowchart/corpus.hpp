#pragma once

#include <string>
#include <vector>

namespace decidua::flowchart {

struct CorpusProgram {
  std::string name;
  std::string source;
};

// The programs exercised by the flowchart law suite. The same sources ship
// as individual files under programs/ for use with the CLI.
const std::vector<CorpusProgram>& bundled_corpus();

}  // namespace decidua::flowchart
