#pragma once

#include <string>

#include "knotquiver/cli.hpp"

inline std::string corpus_path() { return std::string(KNOTQUIVER_DATA_DIR) + "/corpus.jsonl"; }
inline std::string test_data(const std::string& name) { return std::string(KNOTQUIVER_TEST_DATA_DIR) + "/" + name; }
inline kq::LinkDiagram corpus_diagram(const std::string& name) { return kq::load_diagram(name, corpus_path()); }
