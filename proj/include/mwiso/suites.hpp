#pragma once

#include <string>
#include <vector>

#include "mwiso/corpus.hpp"
#include "mwiso/report.hpp"

namespace mwiso {

struct suite_options {
  std::uint64_t budget = 1'000'000'000;
  unsigned threads = 0;  // 0 = MWISO_THREADS or hardware
  int n_min = 2;
  int n_max = 0;  // 0 = |V|-1 per instance
};

extern const std::vector<std::string> suite_names;  // excludes "all"

/// Runs one named suite (or "all") over the given instances. Reports are
/// ordered by (suite, instance, n); over-budget checks come back as
/// SKIPPED_SCALE, internal errors as FAIL with a reproduction bundle.
std::vector<check_report> run_suite(const std::string& suite,
                                    const std::vector<corpus_instance>& instances,
                                    const suite_options& opt = {});

ordered_json suite_json(const std::string& suite, const std::vector<check_report>& reports);

bool any_fail(const std::vector<check_report>& reports);

}  // namespace mwiso
