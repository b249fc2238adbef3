/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_SIM_ENGINE_H
#define AXTCP_SIM_ENGINE_H

#include "axtcp/error.h"
#include "axtcp/mcs-select.h"
#include "axtcp/phy-tables.h"
#include "axtcp/txop.h"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace axtcp
{

/**
 * @brief Full parameter set of one simulated scenario.
 */
struct ScenarioConfig
{
    std::uint32_t stations{4};
    Bytes segmentBytes{1460};
    Strategy strategy{Strategy::TargetResponse};
    double load{1.0}; ///< strategy 3 only, in (0, 1]
    double snrDb{36.6};
    std::uint64_t txopCount{10000};
    std::uint64_t seed{1};
    TimingConstants timing{};
    ControlFrameSizes frames{};
    FrameArithmetic arithmetic{};
    TableSet tables{TableSet::Embedded()};
    std::optional<McsPair> mcsOverride;
    /// Replaces the table BER on the DL (test hook and diagnostics).
    std::optional<double> dlBerOverride;
    std::uint32_t maxCycles{10000};
    bool strategy3Quota{false};

    /// Throws Error(Config) or Error(Domain) on an inconsistent configuration.
    void Validate() const;
};

struct Metrics
{
    double goodputMbps{0};
    double meanTxopMs{0};
    double txopP95Ms{0};
    double meanDlCycles{0};
    double goodputStderr{0}; ///< ratio-estimator standard error over TXOPs, Mbps
    McsPair mcs{};
    std::uint64_t acksPerStation{0};
    std::uint32_t xStar{0};
    double dlBer{0};
    std::uint64_t txops{0};

    bool operator==(const Metrics&) const = default;
};

/// Resolves tables, MCS pair, S, X* and DL capacity. Throws on unusable channels.
TxopContext PrepareTxopContext(const ScenarioConfig& cfg, McsPair* selected = nullptr);

/**
 * @brief A scenario's persistent state: per-station streams and the RNG.
 */
class Scenario
{
  public:
    explicit Scenario(const ScenarioConfig& cfg);

    TxopRecord Step(std::vector<TracePhase>* trace = nullptr);

    const std::vector<StationStream>& GetStreams() const
    {
        return m_streams;
    }

    const TxopContext& GetContext() const
    {
        return m_ctx;
    }

    McsPair GetMcs() const
    {
        return m_mcs;
    }

  private:
    McsPair m_mcs; // written while m_ctx is built, so declared first
    TxopContext m_ctx;
    std::vector<StationStream> m_streams;
    Rng m_rng;
    std::uint64_t m_txopIndex{0};
};

/// Streams per-TXOP records into goodput and delay statistics.
class MetricsAccumulator
{
  public:
    void Add(const TxopRecord& rec);
    Metrics Finish() const;

  private:
    std::vector<us_u> m_durations;
    std::vector<double> m_bits;
    double m_cycles{0};
};

/// Runs cfg.txopCount TXOPs; a fixed seed determines every output bit.
Metrics Simulate(const ScenarioConfig& cfg, std::vector<TracePhase>* trace = nullptr);

enum class SweepAxis
{
    Snr,
    Load,
    Stations,
    Segment,
};

SweepAxis SweepAxisFromString(std::string_view name);
std::string_view ToString(SweepAxis axis);

struct SweepPoint
{
    double value{0};
    ScenarioConfig config;
    std::optional<Metrics> metrics;
    std::optional<ErrorCode> errorCode;
    std::string error;
};

/// The scenario for one sweep value; seed = base seed XOR index.
ScenarioConfig ApplyAxis(const ScenarioConfig& base, SweepAxis axis, double value, std::size_t index);

/**
 * One Simulate per value, points spread over OpenMP threads. Results keep
 * input order; per-point failures are recorded, not thrown.
 */
std::vector<SweepPoint> Sweep(const ScenarioConfig& base,
                              SweepAxis axis,
                              std::span<const double> values);

/// Single-threaded reference for Sweep; identical output.
std::vector<SweepPoint> SweepSerial(const ScenarioConfig& base,
                                    SweepAxis axis,
                                    std::span<const double> values);

/// `count` independent replicas with seeds cfg.seed XOR k, in parallel.
std::vector<Metrics> Replicate(const ScenarioConfig& cfg, std::size_t count);
std::vector<Metrics> ReplicateSerial(const ScenarioConfig& cfg, std::size_t count);

} // namespace axtcp

#endif /* AXTCP_SIM_ENGINE_H */
