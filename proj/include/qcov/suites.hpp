#pragma once

#include "qcov/root_datum.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qcov {

struct SuiteItem {
    std::string name;
    std::size_t checks = 0;
    bool pass = true;
    /// First failing instance, written in the expression grammar where possible.
    std::string counterexample;
    /// Why the item ran no checks, if it did not apply to the datum.
    std::string skipped;
};

struct SuiteReport {
    std::string suite;
    /// Sorted by name.
    std::vector<SuiteItem> items;
    bool ok() const;
};

struct SuiteOptions {
    /// Restricts the module suites to one highest weight (fundamental coordinates).
    std::optional<Weight> lambda;
    /// Worker threads for independent items; 0 picks the hardware concurrency.
    unsigned threads = 1;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const CartanDatum& datum, const SuiteOptions& options = {});

}  // namespace qcov
