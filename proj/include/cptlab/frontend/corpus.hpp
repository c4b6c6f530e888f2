#pragma once

// Built-in theory sources, each with the CLI runs it is expected to pass,
// fail or decline.

#include <string>
#include <vector>

namespace cptlab::frontend {

struct Expectation {
  std::vector<std::string> args;  // command and flags; the source is passed as builtin:<name>
  int exit = 0;
};

struct CorpusEntry {
  std::string name;
  std::string description;
  std::string source;
  std::vector<Expectation> expectations;
};

const std::vector<CorpusEntry>& builtin_examples();
const CorpusEntry* find_example(const std::string& name);

}  // namespace cptlab::frontend
