#pragma once

#include "securepath/apollonius.hpp"
#include "securepath/baseline_bfs.hpp"
#include "securepath/instance.hpp"
#include "securepath/validate.hpp"
#include "securepath/wavefront.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace securepath {

using Seconds = std::chrono::duration<double>;

/// One line of the results table.
struct ResultRow {
    std::string name;
    std::size_t pointCount = 0;
    int bfsLength = 0;
    int algLength = 0;
    int rounds = 0;
    std::size_t insertedCount = 0;
    /// Initial diagram construction and wavefront phase, measured separately.
    Seconds buildTime{};
    Seconds wavefrontTime{};
};

/// Everything one run produces. `initial` is the diagram of the instance
/// before any insertion, `grown` the same diagram after the wavefront.
struct RunOutput {
    ResultRow row;
    Diagram initial;
    Diagram grown;
    BfsResult bfs;
    WavefrontResult wavefront;
    std::optional<ChainReport> chain;
};

struct RunOptions {
    bool verify = true;
    WavefrontOptions wavefront;
};

RunOutput runInstance(const Instance& inst, const RunOptions& options = {});

enum class TableFormat { Text, Csv };

/// Results table. Timing columns (milliseconds) only when withTiming, so that
/// untimed tables are reproducible byte for byte.
std::string formatTable(const std::vector<ResultRow>& rows, TableFormat format, bool withTiming);

} // namespace securepath
