/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_REPORT_H
#define AXTCP_REPORT_H

#include "axtcp/sim-engine.h"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace axtcp
{

/// Column order of the results CSV.
inline constexpr const char* kResultsHeader =
    "scenario_id,stations,segment,strategy,load,snr_db,dl_mcs,ul_mcs,goodput_mbps,"
    "mean_txop_ms,txop_p95_ms,mean_dl_cycles,goodput_stderr";

/**
 * @brief One line of the results CSV. A failed scenario keeps its
 * configuration columns and carries NA metrics plus the error.
 */
struct ResultRow
{
    std::string scenarioId;
    std::uint32_t stations{0};
    Bytes segment{0};
    int strategy{0};
    std::optional<double> load; ///< strategy 3 only
    double snrDb{0};
    std::optional<McsPair> mcs;
    std::optional<Metrics> metrics;
    std::optional<ErrorCode> errorCode;
    std::string error;

    bool operator==(const ResultRow&) const = default;
};

ResultRow MakeResultRow(std::string scenarioId,
                        const ScenarioConfig& cfg,
                        const std::optional<Metrics>& metrics,
                        std::optional<ErrorCode> errorCode = std::nullopt,
                        std::string error = {});

/// "s1", "s2" or "s3@<load>".
std::string StrategyKey(int strategy, std::optional<double> load);

/**
 * Writes `# key=value` lines for `echo` (sorted by key), the header and one
 * line per row. Error rows are preceded by a `# error ...` comment.
 */
void WriteResultsCsv(std::ostream& out,
                     const std::map<std::string, std::string>& echo,
                     const std::vector<ResultRow>& rows);

/// Inverse of WriteResultsCsv for the data lines; comments are skipped. Throws Error(Schema).
std::vector<ResultRow> ReadResultsCsv(std::istream& in);

enum class PlotLayout
{
    GoodputVsSnr,
    DelayVsSnr,
    GoodputVsDelay,
    GoodputVsLoad,
};

PlotLayout PlotLayoutFromString(std::string_view name);

struct PlotPoint
{
    double x;
    std::string series;
    double y;

    bool operator==(const PlotPoint&) const = default;
};

struct PlotData
{
    std::vector<PlotPoint> points;
    std::vector<std::string> warnings;
};

/**
 * Tidy (x, series, y) data for one figure layout. Series appear in
 * first-seen order, points within a series ascend in x. Error rows are
 * skipped. Throws Error(Usage) when nothing is left to plot.
 */
PlotData BuildPlotData(const std::vector<ResultRow>& rows, PlotLayout layout);
void WritePlotCsv(std::ostream& out, const PlotData& data);

/// `txop,phase,start_us,duration_us,bits`; start is absolute simulated time.
void WriteTraceCsv(std::ostream& out, const std::vector<TracePhase>& trace);

} // namespace axtcp

#endif /* AXTCP_REPORT_H */
