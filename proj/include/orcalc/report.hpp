// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Verification tallies. Passing checks are only counted; failures and
// expected findings keep their instance and witness.

#include <string>
#include <utility>
#include <vector>

namespace orcalc {

struct Failure {
  std::string statement;
  std::string instance;
  std::string witness;
};

struct Finding {
  std::string statement;
  std::string instance;
  std::string detail;
};

struct Report {
  long instances = 0;
  std::vector<Failure> failures;
  std::vector<Finding> findings;

  /// Counts one instance; records it when `ok` is false.
  bool check(bool ok, const std::string& statement, const std::string& instance, std::string witness = {}) {
    ++instances;
    if (!ok) failures.push_back({statement, instance, std::move(witness)});
    return ok;
  }

  void fail(const std::string& statement, const std::string& instance, std::string witness) {
    check(false, statement, instance, std::move(witness));
  }

  void note(const std::string& statement, const std::string& instance, std::string detail) {
    findings.push_back({statement, instance, std::move(detail)});
  }

  long passes() const { return instances - static_cast<long>(failures.size()); }
  bool ok() const { return failures.empty(); }

  void merge(Report other) {
    instances += other.instances;
    for (auto& f : other.failures) failures.push_back(std::move(f));
    for (auto& f : other.findings) findings.push_back(std::move(f));
  }
};

}  // namespace orcalc
